"""
Fano sequential decoding of PAC codes over the code tree of v.

Each tree level i decides v_i. Frozen levels have the single branch v_i = 0;
data levels have two branches ordered by metric (bit 0 first on ties). The
precoder output u_i = v_i + sum_{j>=1} c_j v_{i-j} is what the SC demapper
sees, so each branch's metric uses the LLR of u_i.

Branch metric, in bits, with L the natural-log LLR of u_i:

    gamma = 1 - log2(1 + exp(-(1 - 2 u_i) L)) - bias_i

The threshold starts at 0 and moves in steps of delta. Every forward move
counts as one node visit; ANV = visits / N.
"""

import logging
import math

import numpy as np
from numpy.typing import ArrayLike, NDArray

from rspac.modules.pac.encoder import conv_encode, extract_data
from rspac.modules.pac.models import FanoResult, PacCodeSpec, PacCodecError
from rspac.modules.polar import DemapperState, sc_replay

logger = logging.getLogger(__name__)

_LN2 = math.log(2.0)

DEFAULT_DELTA = 2.0
DEFAULT_VISIT_BUDGET = 1_000_000


def fano_metric_increment(llr: float, bit: int, bias: float) -> float:
    """1 - log2(1 + e^{-(1-2u)L}) - bias."""
    signed = (1.0 - 2.0 * bit) * llr
    return 1.0 - float(np.logaddexp(0.0, -signed)) / _LN2 - bias


def fano_path_metrics(spec: PacCodeSpec, channel_llrs: ArrayLike, v: ArrayLike) -> list[float]:
    """Cumulative Fano metric of the path v at depths 0..N."""
    u = conv_encode(spec.conv, v)
    llrs = sc_replay(channel_llrs, [int(b) for b in u])
    metrics = [0.0]
    for i, (llr, bit) in enumerate(zip(llrs, u)):
        metrics.append(metrics[-1] + fano_metric_increment(llr, int(bit), spec.biases[i]))
    return metrics


class _Branch:
    __slots__ = ("gamma", "v", "u")

    def __init__(self, gamma: float, v: int, u: int):
        self.gamma = gamma
        self.v = v
        self.u = u


def fano_decode(
    spec: PacCodeSpec,
    channel_llrs: ArrayLike,
    delta: float = DEFAULT_DELTA,
    visit_budget: int = DEFAULT_VISIT_BUDGET,
) -> FanoResult:
    """
    Decode one PAC frame with the Fano algorithm.

    Args:
        spec: PAC code with biases
        channel_llrs: N channel LLRs, log P(y|0)/P(y|1)
        delta: Threshold step in bits
        visit_budget: Maximum number of forward node arrivals

    Returns:
        FanoResult. When the budget runs out the decided prefix is returned
        with the remaining positions zero and ``budget_exhausted`` set.

    Raises:
        PacCodecError: on a length mismatch or non-positive delta/budget
    """
    n = spec.n
    llrs = np.asarray(channel_llrs, dtype=np.float64).reshape(-1)
    if llrs.size != n:
        raise PacCodecError(f"got {llrs.size} channel LLRs for N={n}")
    if delta <= 0:
        raise PacCodecError(f"delta must be positive, got {delta}")
    if visit_budget < 1:
        raise PacCodecError(f"visit budget must be positive, got {visit_budget}")

    data = spec.profile.data_mask.tolist()
    taps = spec.conv.taps
    biases = spec.biases
    demapper = DemapperState(llrs)

    v = [0] * n
    metrics = [0.0] * (n + 1)
    branches: list[list[_Branch]] = [[] for _ in range(n)]
    choice = [0] * n

    def expand(i: int) -> list[_Branch]:
        llr = demapper.next_llr(i)
        memory_sum = 0
        for j in range(1, min(len(taps), i + 1)):
            if taps[j]:
                memory_sum ^= v[i - j]
        if not data[i]:
            return [_Branch(fano_metric_increment(llr, memory_sum, biases[i]), 0, memory_sum)]
        zero = _Branch(fano_metric_increment(llr, memory_sum, biases[i]), 0, memory_sum)
        one = _Branch(fano_metric_increment(llr, memory_sum ^ 1, biases[i]), 1, memory_sum ^ 1)
        return [one, zero] if one.gamma > zero.gamma else [zero, one]

    threshold = 0.0
    visits = 0
    depth = 0
    exhausted = False
    branches[0] = expand(0)

    while True:
        branch = branches[depth][choice[depth]]
        candidate = metrics[depth] + branch.gamma
        if candidate >= threshold:
            v[depth] = branch.v
            demapper.commit(depth, branch.u)
            depth += 1
            metrics[depth] = candidate
            visits += 1
            if metrics[depth - 1] < threshold + delta:
                while metrics[depth] >= threshold + delta:
                    threshold += delta
            if depth == n:
                break
            if visits >= visit_budget:
                exhausted = True
                break
            branches[depth] = expand(depth)
            choice[depth] = 0
            continue

        # look back
        while True:
            if depth == 0 or metrics[depth - 1] < threshold:
                threshold -= delta
                choice[depth] = 0
                break
            depth -= 1
            demapper.rewind(depth)
            if choice[depth] + 1 < len(branches[depth]):
                choice[depth] += 1
                break

    if exhausted:
        for i in range(depth, n):
            v[i] = 0
        logger.debug(f"Fano budget of {visit_budget} visits exhausted at depth {depth}/{n}")
    return FanoResult(
        decoded_v=tuple(v),
        visits=visits,
        anv=visits / n,
        budget_exhausted=exhausted,
        path_metric=metrics[depth],
        threshold=threshold,
    )


def pac_decode(
    spec: PacCodeSpec,
    channel_llrs: ArrayLike,
    delta: float = DEFAULT_DELTA,
    visit_budget: int = DEFAULT_VISIT_BUDGET,
    systematic: bool = True,
) -> tuple[NDArray[np.uint8], FanoResult]:
    """Fano-decode a frame and extract its K data bits."""
    result = fano_decode(spec, channel_llrs, delta=delta, visit_budget=visit_budget)
    return extract_data(spec, result.decoded_v, systematic=systematic), result
