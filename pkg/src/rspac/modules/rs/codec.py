"""
Systematic Reed-Solomon encoding and algebraic decoding.

Decoding pipeline: syndromes -> Berlekamp-Massey -> Chien search -> Forney,
followed by a syndrome recheck of the corrected word. Codewords are symbol
sequences in coefficient order: parity occupies x^0..x^{n-k-1}, the message
x^{n-k}..x^{n-1}.

Generator roots are alpha^1..alpha^{2t} (first consecutive root 1).
"""

import logging
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from rspac.exceptions import RspacError
from rspac.modules.field import (
    EXP_ARRAY,
    GROUP_ORDER,
    LOG_ARRAY,
    GfPoly,
    alpha_pow,
    gf_div,
    gf_mul,
    poly_divmod,
    poly_eval,
    poly_formal_derivative,
    poly_mod_xn,
    poly_mul,
)
from rspac.modules.rs.models import RsCodeSpec, RsCorrected, RsDecodeOutcome, RsFailure

logger = logging.getLogger(__name__)


class RsCodecError(RspacError, ValueError):
    """Raised on invalid RS parameters or input lengths."""
    pass


def _check_symbols(symbols: Sequence[int], expected: int, what: str) -> list[int]:
    if len(symbols) != expected:
        raise RsCodecError(f"{what} has {len(symbols)} symbols, expected {expected}")
    out = [int(s) for s in symbols]
    for s in out:
        if not 0 <= s <= 255:
            raise RsCodecError(f"{what} contains non-byte symbol {s}")
    return out


@lru_cache(maxsize=None)
def rs_generator(t: int) -> GfPoly:
    """
    Generator polynomial g(x) = (x - alpha)(x - alpha^2)...(x - alpha^{2t}).

    Raises:
        RsCodecError: if t is outside [1, 127]
    """
    if not 1 <= t <= 127:
        raise RsCodecError(f"t={t} outside [1, 127]")
    g = GfPoly.one()
    for j in range(1, 2 * t + 1):
        g = poly_mul(g, GfPoly((alpha_pow(j), 1)))
    return g


def rs_encode_systematic(spec: RsCodeSpec, msg: Sequence[int]) -> list[int]:
    """
    Encode h(x) = m(x) x^{n-k} + P(x), P = m(x) x^{n-k} mod g(x).

    Shortened specs are routed through ``rs_shorten_encode``.
    """
    if spec.shorten_by:
        return rs_shorten_encode(spec, msg)
    msg = _check_symbols(msg, spec.k, "message")
    shifted = GfPoly((0,) * spec.parity_len + tuple(msg))
    _, parity = poly_divmod(shifted, rs_generator(spec.t))
    parity_symbols = list(parity.coeffs) + [0] * (spec.parity_len - len(parity.coeffs))
    return parity_symbols + list(msg)


def rs_syndromes(spec: RsCodeSpec, received: Sequence[int]) -> list[int]:
    """S_j = r(alpha^j) for j = 1..2t."""
    r = np.asarray(received, dtype=np.int64)
    positions = np.nonzero(r)[0]
    if positions.size == 0:
        return [0] * spec.parity_len
    logs = LOG_ARRAY[r[positions]]
    js = np.arange(1, spec.parity_len + 1, dtype=np.int64)[:, None]
    terms = EXP_ARRAY[(logs[None, :] + js * positions[None, :]) % GROUP_ORDER]
    return [int(s) for s in np.bitwise_xor.reduce(terms, axis=1)]


def rs_berlekamp_massey(syndromes: Sequence[int]) -> GfPoly:
    """
    Minimal-degree error-locator polynomial with Lambda(0) = 1.

    A locator of degree above t is returned as is; the caller's Chien and
    consistency checks turn it into a failure.
    """
    current = [1]
    previous = [1]
    length = 0
    shift = 1
    prev_discrepancy = 1
    for r, s_r in enumerate(syndromes):
        d = s_r
        for i in range(1, length + 1):
            if i < len(current):
                d ^= gf_mul(current[i], syndromes[r - i])
        if d == 0:
            shift += 1
            continue
        coef = gf_div(d, prev_discrepancy)
        update = [0] * shift + [gf_mul(coef, b) for b in previous]
        snapshot = list(current)
        if len(update) > len(current):
            current = current + [0] * (len(update) - len(current))
        for i, u in enumerate(update):
            current[i] ^= u
        if 2 * length <= r:
            length = r + 1 - length
            previous = snapshot
            prev_discrepancy = d
            shift = 1
        else:
            shift += 1
    return GfPoly(tuple(current))


def rs_chien_search(lam: GfPoly, n: int) -> list[int]:
    """
    Positions i in [0, n) with Lambda(alpha^{-i}) = 0.

    Fewer roots than deg Lambda means the locator is inconsistent; the caller
    treats that as a decoding failure.
    """
    if lam.coefficient(0) != 1:
        raise RsCodecError("error locator must satisfy Lambda(0) = 1")
    if lam.degree <= 0:
        return []
    coeffs = np.asarray(lam.coeffs, dtype=np.int64)
    powers = np.nonzero(coeffs)[0]
    logs = LOG_ARRAY[coeffs[powers]]
    i = np.arange(n, dtype=np.int64)[:, None]
    terms = EXP_ARRAY[(logs[None, :] - i * powers[None, :]) % GROUP_ORDER]
    values = np.bitwise_xor.reduce(terms, axis=1)
    return [int(p) for p in np.nonzero(values == 0)[0]]


def rs_forney(
    syndromes: Sequence[int],
    lam: GfPoly,
    positions: Sequence[int],
) -> Optional[list[int]]:
    """
    Error values e_i = Omega(X_i^{-1}) / Lambda'(X_i^{-1}), X_i = alpha^i.

    Omega(x) = S(x) Lambda(x) mod x^{2t} with S(x) = S_1 + S_2 x + ...

    Returns:
        One value per position, or None when Lambda' vanishes at a root
        (decoding failure).
    """
    if not positions:
        return []
    omega = poly_mod_xn(poly_mul(GfPoly(tuple(syndromes)), lam), len(syndromes))
    derivative = poly_formal_derivative(lam)
    values = []
    for pos in positions:
        x_inv = alpha_pow(-pos)
        denominator = poly_eval(derivative, x_inv)
        if denominator == 0:
            return None
        values.append(gf_div(poly_eval(omega, x_inv), denominator))
    return values


def rs_decode(spec: RsCodeSpec, received: Sequence[int]) -> RsDecodeOutcome:
    """
    Correct up to t symbol errors.

    Failure is returned (not raised) when the Chien root count falls short of
    deg Lambda, Forney degenerates, or the corrected word still has nonzero
    syndromes. Beyond t errors a wrong but valid codeword may come back.
    """
    if spec.shorten_by:
        return rs_shorten_decode(spec, received)
    received = _check_symbols(received, spec.n, "received word")
    syndromes = rs_syndromes(spec, received)
    if not any(syndromes):
        return RsCorrected(codeword=tuple(received), error_count=0)

    lam = rs_berlekamp_massey(syndromes)
    if lam.degree > spec.t:
        logger.debug(f"RS failure: locator degree {lam.degree} exceeds t={spec.t}")
        return RsFailure(received=tuple(received))

    positions = rs_chien_search(lam, spec.n)
    if len(positions) != lam.degree:
        logger.debug(f"RS failure: {len(positions)} Chien roots for degree {lam.degree}")
        return RsFailure(received=tuple(received))

    values = rs_forney(syndromes, lam, positions)
    if values is None or not all(values):
        logger.debug("RS failure: Forney evaluation degenerate")
        return RsFailure(received=tuple(received))

    corrected = list(received)
    for pos, value in zip(positions, values):
        corrected[pos] ^= value
    if any(rs_syndromes(spec, corrected)):
        logger.debug("RS failure: corrected word has nonzero syndromes")
        return RsFailure(received=tuple(received))
    return RsCorrected(codeword=tuple(corrected), error_count=len(positions))


def rs_shorten_encode(spec: RsCodeSpec, msg: Sequence[int]) -> list[int]:
    """
    Encode with the mother code after padding the top message symbols with zeros.

    The padding sits at the highest-degree coefficients, so stripping it
    leaves the first n coefficients of the mother codeword.
    """
    msg = _check_symbols(msg, spec.k, "message")
    mother = spec.mother()
    codeword = rs_encode_systematic(mother, list(msg) + [0] * spec.shorten_by)
    return codeword[: spec.n]


def rs_shorten_decode(spec: RsCodeSpec, received: Sequence[int]) -> RsDecodeOutcome:
    """Re-insert the virtual zero symbols, decode with the mother code, strip them."""
    received = _check_symbols(received, spec.n, "received word")
    mother = spec.mother()
    outcome = rs_decode(mother, list(received) + [0] * spec.shorten_by)
    if isinstance(outcome, RsCorrected):
        if any(outcome.codeword[spec.n:]):
            # a located error in a virtual position cannot be a real correction
            return RsFailure(received=tuple(received))
        return RsCorrected(codeword=outcome.codeword[: spec.n], error_count=outcome.error_count)
    return RsFailure(received=tuple(received))


def rs_message(spec: RsCodeSpec, codeword: Sequence[int]) -> list[int]:
    """Message symbols of a systematic codeword."""
    return list(codeword[spec.parity_len:])
