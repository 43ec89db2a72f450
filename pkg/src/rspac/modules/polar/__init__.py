"""
Polar transform and successive-cancellation demapping.
"""

from rspac.modules.polar.demapper import (
    LLR_SATURATION,
    DemapperState,
    check_node,
    demapper_commit,
    demapper_init,
    demapper_next_llr,
    demapper_rewind,
    genie_bit_llrs,
    sc_replay,
    variable_node,
)
from rspac.modules.polar.transform import (
    PolarError,
    is_power_of_two,
    kronecker_power,
    log2_length,
    polar_transform,
)

__all__ = [
    "LLR_SATURATION",
    "DemapperState",
    "check_node",
    "demapper_commit",
    "demapper_init",
    "demapper_next_llr",
    "demapper_rewind",
    "genie_bit_llrs",
    "sc_replay",
    "variable_node",
    "PolarError",
    "is_power_of_two",
    "kronecker_power",
    "log2_length",
    "polar_transform",
]
