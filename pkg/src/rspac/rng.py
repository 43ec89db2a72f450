"""
Counter-based random streams.

Every stream is a Philox generator keyed by SeedSequence(entropy=seed,
spawn_key=key). A frame's streams depend only on (seed, frame_index,
stream_id), so results do not depend on scheduling or worker count.
"""

from enum import IntEnum

import numpy as np


class Stream(IntEnum):
    """Independent stream ids within one frame."""
    DATA = 0
    NOISE = 1
    BIAS = 2


def make_rng(seed: int, *key: int) -> np.random.Generator:
    seq = np.random.SeedSequence(entropy=seed, spawn_key=key)
    return np.random.Generator(np.random.Philox(seq))


def frame_rng(seed: int, frame_index: int, stream: Stream) -> np.random.Generator:
    """Generator for one (frame, stream) pair."""
    return make_rng(seed, frame_index, int(stream))
