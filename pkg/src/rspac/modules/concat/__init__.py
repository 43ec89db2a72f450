"""
Concatenated RS-PAC schemes and the RS-CC baseline.
"""

from rspac.modules.concat.interleaver import BlockInterleaver, deinterleave, interleave
from rspac.modules.concat.models import (
    INTERLEAVED_LAYOUTS,
    SCHEME1_LAYOUTS,
    ConcatDecodeResult,
    ConcatError,
    InterleavedConfig,
    InterleavedLayout,
    RsCcConfig,
    Scheme1Config,
    Scheme1Layout,
    interleaved_config,
    scheme1_config,
)
from rspac.modules.concat.packing import (
    bits_to_bytes,
    bytes_to_bits,
    codeword_to_wire,
    wire_to_codeword,
)
from rspac.modules.concat.schemes import (
    rs_cc_decode,
    rs_cc_decode_stream,
    rs_cc_encode,
    rs_cc_serialize,
    scheme1_decode,
    scheme1_decode_symbols,
    scheme1_encode,
    scheme2_decode,
    scheme2_decode_columns,
    scheme2_encode,
)

__all__ = [
    "BlockInterleaver",
    "deinterleave",
    "interleave",
    "INTERLEAVED_LAYOUTS",
    "SCHEME1_LAYOUTS",
    "ConcatDecodeResult",
    "ConcatError",
    "InterleavedConfig",
    "InterleavedLayout",
    "RsCcConfig",
    "Scheme1Config",
    "Scheme1Layout",
    "interleaved_config",
    "scheme1_config",
    "bits_to_bytes",
    "bytes_to_bits",
    "codeword_to_wire",
    "wire_to_codeword",
    "rs_cc_decode",
    "rs_cc_decode_stream",
    "rs_cc_encode",
    "rs_cc_serialize",
    "scheme1_decode",
    "scheme1_decode_symbols",
    "scheme1_encode",
    "scheme2_decode",
    "scheme2_decode_columns",
    "scheme2_encode",
]
