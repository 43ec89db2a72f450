"""
PAC codes: rate profiles, convolutional precoding, systematic and
non-systematic encoding, cutoff-rate biases and Fano decoding.
"""

from rspac.modules.pac.bias import (
    MIN_BIAS_SAMPLES,
    bias_from_bhattacharyya,
    biases_from_llrs,
    design_sigma,
    estimate_biases,
    resolve_biases,
)
from rspac.modules.pac.builder import (
    DESIGN_SNR_DB,
    build_pac_spec,
    default_design_snr,
)
from rspac.modules.pac.encoder import (
    conv_encode,
    conv_invert,
    extract_data,
    gf2_inverse,
    insert_data,
    pac_encode,
    pac_encode_nonsystematic,
    pac_encode_systematic,
    pac_transform,
    recover_v,
    systematic_map,
    toeplitz_matrix,
)
from rspac.modules.pac.fano import (
    DEFAULT_DELTA,
    DEFAULT_VISIT_BUDGET,
    fano_decode,
    fano_metric_increment,
    fano_path_metrics,
    pac_decode,
)
from rspac.modules.pac.models import (
    ConvSpec,
    FanoResult,
    PacCodeSpec,
    PacCodecError,
    RateProfile,
    parse_octal_connection,
)
from rspac.modules.pac.profiles import (
    build_rm_profile,
    default_profile,
    format_profile,
    load_profile,
    parse_profile,
    polarization_weight,
    row_weight,
    save_profile,
    shipped_profile,
)

DEFAULT_CONV_OCTAL = "3211"

__all__ = [
    "MIN_BIAS_SAMPLES",
    "bias_from_bhattacharyya",
    "biases_from_llrs",
    "design_sigma",
    "estimate_biases",
    "resolve_biases",
    "DESIGN_SNR_DB",
    "build_pac_spec",
    "default_design_snr",
    "conv_encode",
    "conv_invert",
    "extract_data",
    "gf2_inverse",
    "insert_data",
    "pac_encode",
    "pac_encode_nonsystematic",
    "pac_encode_systematic",
    "pac_transform",
    "recover_v",
    "systematic_map",
    "toeplitz_matrix",
    "DEFAULT_DELTA",
    "DEFAULT_VISIT_BUDGET",
    "fano_decode",
    "fano_metric_increment",
    "fano_path_metrics",
    "pac_decode",
    "ConvSpec",
    "FanoResult",
    "PacCodeSpec",
    "PacCodecError",
    "RateProfile",
    "parse_octal_connection",
    "build_rm_profile",
    "default_profile",
    "format_profile",
    "load_profile",
    "parse_profile",
    "polarization_weight",
    "row_weight",
    "save_profile",
    "shipped_profile",
    "DEFAULT_CONV_OCTAL",
]
