"""
Quick invariant checks across all code components.

Each check returns None on success or a short failure description. The
suite is small enough to run in seconds; the full-size versions live in the
test suite.
"""

import logging
import time
from typing import Callable, Optional

import numpy as np
from pydantic import BaseModel, Field

from rspac.modules.cc import NASA_CC, cc_encode, viterbi_decode
from rspac.modules.concat import (
    INTERLEAVED_LAYOUTS,
    bits_to_bytes,
    codeword_to_wire,
    interleaved_config,
    scheme2_decode_columns,
)
from rspac.modules.field import gf_inv, gf_mul, gf_mul_reference
from rspac.modules.pac import (
    PacCodeSpec,
    build_rm_profile,
    fano_decode,
    pac_encode_nonsystematic,
    pac_encode_systematic,
    parse_octal_connection,
    recover_v,
)
from rspac.modules.polar import DemapperState, polar_transform, sc_replay
from rspac.modules.rs import RS_252_220, RS_255_223, RsCorrected, rs_decode, rs_encode_systematic
from rspac.rng import make_rng

logger = logging.getLogger(__name__)

SELFTEST_SEED = 7


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""
    seconds: float = Field(default=0.0, ge=0.0)


def _check_field() -> Optional[str]:
    for a in range(1, 256):
        if gf_mul(a, gf_inv(a)) != 1:
            return f"a * a^-1 != 1 for a={a}"
    for a in range(256):
        for b in range(256):
            if gf_mul(a, b) != gf_mul_reference(a, b):
                return f"table product differs from shift-and-reduce at ({a}, {b})"
    return None


def _check_rs() -> Optional[str]:
    rng = make_rng(SELFTEST_SEED, 1)
    for spec in (RS_255_223, RS_252_220):
        for weight in (1, 8, 16):
            msg = rng.integers(0, 256, spec.k).tolist()
            codeword = rs_encode_systematic(spec, msg)
            received = list(codeword)
            for pos in rng.choice(spec.n, weight, replace=False):
                received[pos] ^= int(rng.integers(1, 256))
            outcome = rs_decode(spec, received)
            if not isinstance(outcome, RsCorrected) or list(outcome.codeword) != codeword:
                return f"RS({spec.n},{spec.k}) failed to correct {weight} errors"
    return None


def _check_polar() -> Optional[str]:
    rng = make_rng(SELFTEST_SEED, 2)
    for n in (2, 8, 64, 256):
        u = rng.integers(0, 2, n, dtype=np.uint8)
        if not np.array_equal(polar_transform(polar_transform(u)), u):
            return f"polar transform is not an involution for N={n}"
    llrs = rng.normal(1.0, 1.5, 16)
    bits = rng.integers(0, 2, 16).tolist()
    reference = sc_replay(llrs, bits)
    state = DemapperState(llrs)
    for i in range(10):
        state.next_llr(i)
        state.commit(i, bits[i])
    state.rewind(3)
    replayed = []
    for i in range(3, 16):
        replayed.append(state.next_llr(i))
        state.commit(i, bits[i])
    if replayed != reference[3:]:
        return "demapper rewind does not reproduce the straight replay"
    return None


def _check_pac() -> Optional[str]:
    rng = make_rng(SELFTEST_SEED, 3)
    profile = build_rm_profile(64, 32)
    spec = PacCodeSpec(profile=profile, conv=parse_octal_connection("3211"), biases=(0.5,) * 64)
    frozen = list(profile.frozen_positions)
    positions = list(profile.positions)
    for _ in range(20):
        h = rng.integers(0, 2, 32, dtype=np.uint8)
        x = pac_encode_systematic(spec, h)
        if not np.array_equal(x[positions], h) or recover_v(spec, x)[frozen].any():
            return "systematic encoder output is not a valid codeword with x_A = h"
        v_expected = recover_v(spec, pac_encode_nonsystematic(spec, h))
        result = fano_decode(spec, 40.0 * (1.0 - 2.0 * x.astype(np.float64)))
        if result.anv != 1.0:
            return f"noiseless Fano decode visited {result.visits} nodes"
        if not np.array_equal(np.asarray(result.decoded_v), recover_v(spec, x)):
            return "noiseless Fano decode returned the wrong path"
        if v_expected[frozen].any():
            return "non-systematic encoder violated frozen positions"
    return None


def _check_viterbi() -> Optional[str]:
    rng = make_rng(SELFTEST_SEED, 4)
    info = rng.integers(0, 2, 200, dtype=np.uint8)
    code = cc_encode(NASA_CC, info)
    decoded = viterbi_decode(NASA_CC, 5.0 * (1.0 - 2.0 * code.astype(np.float64)))
    if not np.array_equal(decoded, info):
        return "Viterbi failed on a noiseless block"
    return None


def _check_interleaved_bursts() -> Optional[str]:
    """Up to 16 garbled columns never defeat the depth-8 outer code."""
    rng = make_rng(SELFTEST_SEED, 5)
    layout = INTERLEAVED_LAYOUTS[8]
    profile = build_rm_profile(layout.inner_n, layout.inner_k)
    inner = PacCodeSpec(
        profile=profile, conv=parse_octal_connection("3211"), biases=(0.5,) * layout.inner_n
    )
    cfg = interleaved_config(8, inner)
    for _ in range(5):
        data = rng.integers(0, 256, (8, cfg.rs.k))
        rows = [rs_encode_systematic(cfg.rs, r.tolist()) for r in data]
        wire = [codeword_to_wire(cfg.rs, r) for r in rows]
        columns = np.asarray(wire, dtype=np.uint8).T.copy()
        for col in rng.choice(cfg.columns, 16, replace=False):
            columns[col] = bits_to_bytes(rng.integers(0, 2, 64, dtype=np.uint8))
        result = scheme2_decode_columns(cfg, columns)
        if not np.array_equal(np.asarray(result.data), data):
            return "16 corrupted columns were not fully corrected"
    return None


CHECKS: dict[str, Callable[[], Optional[str]]] = {
    "field": _check_field,
    "rs": _check_rs,
    "polar": _check_polar,
    "pac": _check_pac,
    "viterbi": _check_viterbi,
    "interleaved-bursts": _check_interleaved_bursts,
}


def run_selftest() -> list[CheckResult]:
    """Run every check; an exception counts as a failure."""
    results = []
    for name, check in CHECKS.items():
        start = time.perf_counter()
        try:
            detail = check()
        except Exception as e:
            logger.exception(f"Self-test check {name} raised")
            detail = f"{type(e).__name__}: {e}"
        results.append(
            CheckResult(
                name=name,
                passed=detail is None,
                detail=detail or "",
                seconds=time.perf_counter() - start,
            )
        )
    return results
