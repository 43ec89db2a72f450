"""
NASA-standard rate-1/2, 64-state convolutional code with Viterbi decoding.
"""

from rspac.modules.cc.codec import CcCodecError, cc_encode, viterbi_decode
from rspac.modules.cc.models import CONSTRAINT_LENGTH, NASA_CC, CcSpec

# complexity of a trellis decoder in the ANV sense
TRELLIS_ANV = NASA_CC.state_count

__all__ = [
    "CcCodecError",
    "cc_encode",
    "viterbi_decode",
    "CONSTRAINT_LENGTH",
    "NASA_CC",
    "CcSpec",
    "TRELLIS_ANV",
]
