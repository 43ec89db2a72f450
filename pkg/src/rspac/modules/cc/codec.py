"""
Zero-tail convolutional encoding and soft-decision Viterbi decoding.

Trellis state = last 6 inputs, newest in bit 0. From state s, input b leads
to (2s + b) mod 64 and emits the parities of the 7-bit register 2s + b
masked by each generator.
"""

import logging

import numpy as np
from numpy.typing import ArrayLike, NDArray

from rspac.exceptions import RspacError
from rspac.modules.cc.models import CcSpec

logger = logging.getLogger(__name__)


class CcCodecError(RspacError, ValueError):
    """Raised on malformed LLR blocks."""
    pass


def cc_encode(spec: CcSpec, info: ArrayLike) -> NDArray[np.uint8]:
    """
    Encode info followed by 6 zero tail bits.

    Returns:
        2 * (len(info) + 6) bits, interleaved (g1 output, g2 output) pairs
    """
    bits = np.concatenate(
        [np.asarray(info, dtype=np.int64).reshape(-1), np.zeros(spec.memory, dtype=np.int64)]
    )
    out = np.empty(2 * bits.size, dtype=np.uint8)
    out[0::2] = np.convolve(bits, np.asarray(spec.g1, dtype=np.int64))[: bits.size] & 1
    out[1::2] = np.convolve(bits, np.asarray(spec.g2, dtype=np.int64))[: bits.size] & 1
    return out


def _register_outputs(spec: CcSpec) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """+-1 signs (1 - 2c) of both outputs for every 7-bit register value."""
    mask1, mask2 = spec.masks
    registers = np.arange(2 * spec.state_count)
    parity1 = np.array([bin(r & mask1).count("1") & 1 for r in registers])
    parity2 = np.array([bin(r & mask2).count("1") & 1 for r in registers])
    return 1.0 - 2.0 * parity1, 1.0 - 2.0 * parity2


def viterbi_decode(spec: CcSpec, llrs: ArrayLike) -> NDArray[np.uint8]:
    """
    Maximum-likelihood info bits of a zero-tail block.

    The path metric adds sum (1 - 2c) * llr / 2 per branch and is maximized
    over paths that start and end in state 0. At a merge the path from the
    lower-numbered predecessor wins ties.

    Raises:
        CcCodecError: if the LLR count is odd or shorter than the tail
    """
    soft = np.asarray(llrs, dtype=np.float64).reshape(-1)
    if soft.size % 2:
        raise CcCodecError(f"LLR count {soft.size} is odd")
    steps = soft.size // 2
    if steps < spec.memory:
        raise CcCodecError(f"block of {steps} steps is shorter than the {spec.memory}-bit tail")

    states = spec.state_count
    sign1, sign2 = _register_outputs(spec)
    next_states = np.arange(states)
    low_pred = next_states >> 1
    high_pred = low_pred | (states >> 1)

    metric = np.full(states, -np.inf)
    metric[0] = 0.0
    decisions = np.zeros((steps, states), dtype=bool)
    for k in range(steps):
        branch = 0.5 * (sign1 * soft[2 * k] + sign2 * soft[2 * k + 1])
        from_low = metric[low_pred] + branch[next_states]
        from_high = metric[high_pred] + branch[next_states + states]
        take_high = from_high > from_low
        decisions[k] = take_high
        metric = np.where(take_high, from_high, from_low)

    state = 0
    inputs = np.zeros(steps, dtype=np.uint8)
    for k in range(steps - 1, -1, -1):
        inputs[k] = state & 1
        state = (state >> 1) | (int(decisions[k, state]) << (spec.memory - 1))
    return inputs[: steps - spec.memory]
