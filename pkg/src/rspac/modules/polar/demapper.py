"""
Successive-cancellation LLR demapper with rewind.

The demapper keeps one LLR vector per tree level: level k holds the node of
size 2^k on the path to the current bit, level n holds the channel LLRs. A
node at level k starting at bit s depends only on committed bits < s, so a
rewind to bit j keeps every stored node with s <= j and drops the rest. The
next LLR request recomputes the dropped levels top-down; partial sums of a
left sibling are re-encoded from the committed prefix.

Check nodes use the exact rule log((1 + e^{a+b}) / (e^a + e^b)); variable
nodes use b + (1 - 2s) a. All LLRs are saturated at +-LLR_SATURATION.
"""

from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from rspac.modules.polar.transform import PolarError, log2_length, polar_transform

LLR_SATURATION = 40.0


def check_node(a: NDArray[np.float64], b: NDArray[np.float64]) -> NDArray[np.float64]:
    """Exact box-plus combination of two LLR vectors."""
    out = (
        np.sign(a) * np.sign(b) * np.minimum(np.abs(a), np.abs(b))
        + np.log1p(np.exp(-np.abs(a + b)))
        - np.log1p(np.exp(-np.abs(a - b)))
    )
    return np.clip(out, -LLR_SATURATION, LLR_SATURATION)


def variable_node(
    a: NDArray[np.float64],
    b: NDArray[np.float64],
    partial_sums: NDArray[np.uint8],
) -> NDArray[np.float64]:
    """b + (1 - 2s) a."""
    out = b + (1.0 - 2.0 * partial_sums) * a
    return np.clip(out, -LLR_SATURATION, LLR_SATURATION)


class DemapperState:
    """
    Mutable SC demapper for one frame.

    Bit indices are 0-based. ``next_llr(i)`` requires bits 0..i-1 committed;
    ``commit(i, bit)`` requires i to be the frontier; ``rewind(j)`` moves the
    frontier back to j.
    """

    def __init__(self, channel_llrs: ArrayLike):
        llrs = np.asarray(channel_llrs, dtype=np.float64).reshape(-1)
        self.length = llrs.size
        self.levels = log2_length(self.length)
        self._llr: list[NDArray[np.float64]] = [
            np.zeros(1 << k, dtype=np.float64) for k in range(self.levels + 1)
        ]
        self._llr[self.levels] = np.clip(llrs, -LLR_SATURATION, LLR_SATURATION)
        # node index held at each level, -1 when stale
        self._node = [-1] * self.levels + [0]
        self._bits = np.zeros(self.length, dtype=np.uint8)
        self._frontier = 0

    @property
    def frontier(self) -> int:
        """Number of committed bits."""
        return self._frontier

    @property
    def committed(self) -> NDArray[np.uint8]:
        return self._bits[: self._frontier].copy()

    def next_llr(self, i: int) -> float:
        """LLR of bit i given the channel and committed bits 0..i-1."""
        if i != self._frontier:
            raise PolarError(f"LLR requested for bit {i} but frontier is {self._frontier}")
        if i >= self.length:
            raise PolarError(f"bit index {i} beyond length {self.length}")
        stale = False
        for k in range(self.levels - 1, -1, -1):
            node = i >> k
            if stale or self._node[k] != node:
                parent = self._llr[k + 1]
                half = 1 << k
                left, right = parent[:half], parent[half:]
                if node & 1 == 0:
                    self._llr[k] = check_node(left, right)
                else:
                    start = (node - 1) << k
                    sums = polar_transform(self._bits[start : start + half])
                    self._llr[k] = variable_node(left, right, sums)
                self._node[k] = node
                stale = True
        return float(self._llr[0][0])

    def commit(self, i: int, bit: int) -> None:
        """Fix bit i (the frontier)."""
        if i != self._frontier:
            raise PolarError(f"commit of bit {i} out of order (frontier {self._frontier})")
        if bit not in (0, 1):
            raise PolarError(f"bit value must be 0 or 1, got {bit}")
        self._bits[i] = bit
        self._frontier += 1

    def rewind(self, to_index: int) -> None:
        """Forget committed bits to_index.. so bit to_index is next."""
        if not 0 <= to_index <= self._frontier:
            raise PolarError(f"cannot rewind to {to_index} (frontier {self._frontier})")
        self._frontier = to_index
        self._bits[to_index:] = 0
        for k in range(self.levels):
            if self._node[k] >= 0 and (self._node[k] << k) > to_index:
                self._node[k] = -1


def demapper_init(channel_llrs: ArrayLike) -> DemapperState:
    """Create a demapper ready to produce the LLR of bit 0."""
    return DemapperState(channel_llrs)


def demapper_next_llr(state: DemapperState, i: int) -> float:
    return state.next_llr(i)


def demapper_commit(state: DemapperState, i: int, bit: int) -> DemapperState:
    state.commit(i, bit)
    return state


def demapper_rewind(state: DemapperState, to_index: int) -> DemapperState:
    state.rewind(to_index)
    return state


def sc_replay(channel_llrs: ArrayLike, bits: Sequence[int]) -> list[float]:
    """LLRs of bits 0..len(bits)-1 along a straight commit sequence."""
    state = DemapperState(channel_llrs)
    out = []
    for i, b in enumerate(bits):
        out.append(state.next_llr(i))
        state.commit(i, int(b))
    return out


def genie_bit_llrs(channel_llrs: NDArray[np.float64]) -> NDArray[np.float64]:
    """
    Bit-channel LLRs for a batch of all-zero transmissions.

    With every decided bit zero the partial sums vanish, so the whole SC
    recursion runs in vectorized form over the batch (shape (batch, N)).
    """
    llrs = np.clip(np.atleast_2d(channel_llrs), -LLR_SATURATION, LLR_SATURATION)
    size = llrs.shape[-1]
    log2_length(size)
    if size == 1:
        return llrs.copy()
    half = size // 2
    left, right = llrs[:, :half], llrs[:, half:]
    upper = genie_bit_llrs(check_node(left, right))
    lower = genie_bit_llrs(np.clip(left + right, -LLR_SATURATION, LLR_SATURATION))
    return np.concatenate([upper, lower], axis=1)
