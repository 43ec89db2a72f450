"""
Reed-Solomon codec over GF(2^8) with shortening and failure reporting.
"""

from rspac.modules.rs.codec import (
    RsCodecError,
    rs_berlekamp_massey,
    rs_chien_search,
    rs_decode,
    rs_encode_systematic,
    rs_forney,
    rs_generator,
    rs_message,
    rs_shorten_decode,
    rs_shorten_encode,
    rs_syndromes,
)
from rspac.modules.rs.models import (
    RS_240_208,
    RS_252_220,
    RS_255_223,
    RsCodeSpec,
    RsCorrected,
    RsDecodeOutcome,
    RsFailure,
)

__all__ = [
    "RsCodecError",
    "rs_berlekamp_massey",
    "rs_chien_search",
    "rs_decode",
    "rs_encode_systematic",
    "rs_forney",
    "rs_generator",
    "rs_message",
    "rs_shorten_decode",
    "rs_shorten_encode",
    "rs_syndromes",
    "RS_240_208",
    "RS_252_220",
    "RS_255_223",
    "RsCodeSpec",
    "RsCorrected",
    "RsDecodeOutcome",
    "RsFailure",
]
