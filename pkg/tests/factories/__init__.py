"""
Test data factories using factory_boy.

Provides factories for code specs with sensible defaults plus small
builders for codewords and channel inputs.
Build on-demand - only create factories as tests need them.
"""

from tests.factories.codes import (
    PacCodeSpecFactory,
    RateProfileFactory,
    noiseless_llrs,
    random_bytes,
    rs_wire_rows,
)

__all__ = [
    "PacCodeSpecFactory",
    "RateProfileFactory",
    "noiseless_llrs",
    "random_bytes",
    "rs_wire_rows",
]
