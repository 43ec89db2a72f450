"""
Rate-profile construction and profile files.

File format: line 1 "N K", line 2 the K data indices (1-based, ascending,
space separated). Blank lines and lines starting with '#' are ignored.
"""

import logging
from importlib import resources
from pathlib import Path
from typing import Literal, Union

from pydantic import ValidationError

from rspac.modules.pac.models import PacCodecError, RateProfile
from rspac.modules.polar import is_power_of_two

logger = logging.getLogger(__name__)

TieBreak = Literal["index", "reliability"]

PW_BETA = 2 ** 0.25


def row_weight(position: int) -> int:
    """Hamming weight of row `position` (0-based) of F^{(x)n}."""
    return 1 << bin(position).count("1")


def polarization_weight(position: int, beta: float = PW_BETA) -> float:
    """Beta-expansion reliability: sum of beta^j over the set bits j of the index."""
    return sum(beta ** j for j in range(position.bit_length()) if position >> j & 1)


def build_rm_profile(n: int, k: int, tie_break: TieBreak = "index") -> RateProfile:
    """
    Pick the K rows of F^{(x)n} with the largest Hamming weight.

    Args:
        n: Code length, power of two
        k: Number of data bits
        tie_break: How rows of equal weight at the cut are ordered. "index"
            prefers the larger index; "reliability" prefers the larger
            polarization weight, then the larger index.

    Raises:
        PacCodecError: on invalid dimensions
    """
    if not is_power_of_two(n):
        raise PacCodecError(f"N={n} is not a power of two")
    if not 0 <= k <= n:
        raise PacCodecError(f"K={k} outside [0, {n}]")
    if tie_break == "index":
        order = sorted(range(n), key=lambda i: (row_weight(i), i), reverse=True)
    elif tie_break == "reliability":
        order = sorted(
            range(n), key=lambda i: (row_weight(i), polarization_weight(i), i), reverse=True
        )
    else:
        raise PacCodecError(f"unknown tie_break {tie_break!r}")
    profile = RateProfile.from_positions(n, order[:k])
    logger.debug(f"RM profile ({n},{k}) tie_break={tie_break}: {profile.data_set}")
    return profile


def parse_profile(text: str) -> RateProfile:
    """Parse the contents of a profile file."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if len(lines) < 1:
        raise PacCodecError("profile file is empty")
    header = lines[0].split()
    if len(header) != 2:
        raise PacCodecError(f"profile header must be 'N K', got {lines[0]!r}")
    try:
        n, k = int(header[0]), int(header[1])
        indices = [int(tok) for ln in lines[1:] for tok in ln.split()]
    except ValueError as e:
        raise PacCodecError(f"malformed profile file: {e}") from e
    if len(indices) != k:
        raise PacCodecError(f"profile header says K={k} but lists {len(indices)} indices")
    if len(set(indices)) != len(indices):
        raise PacCodecError("profile lists duplicate indices")
    out_of_range = [i for i in indices if not 1 <= i <= n]
    if out_of_range:
        raise PacCodecError(f"profile indices out of range [1, {n}]: {out_of_range}")
    try:
        return RateProfile(n=n, k=k, data_set=tuple(sorted(indices)))
    except ValidationError as e:
        raise PacCodecError(f"invalid profile: {e}") from e


def load_profile(path: Union[str, Path]) -> RateProfile:
    """
    Read and validate a profile file.

    Raises:
        PacCodecError: if the file is missing or malformed
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise PacCodecError(f"cannot read profile file {path}: {e}") from e
    profile = parse_profile(text)
    logger.info(f"Loaded ({profile.n},{profile.k}) rate profile from {path}")
    return profile


def format_profile(profile: RateProfile) -> str:
    return f"{profile.n} {profile.k}\n{' '.join(str(i) for i in profile.data_set)}\n"


def save_profile(profile: RateProfile, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_profile(profile), encoding="utf-8")
    return path


def shipped_profile(n: int, k: int) -> RateProfile:
    """
    Profile file bundled with the package, e.g. ``pac_64_32.txt``.

    Raises:
        PacCodecError: if no profile ships for (n, k)
    """
    resource = resources.files("rspac.data").joinpath("profiles", f"pac_{n}_{k}.txt")
    if not resource.is_file():
        raise PacCodecError(f"no shipped profile for ({n},{k})")
    return parse_profile(resource.read_text(encoding="utf-8"))


def default_profile(n: int, k: int) -> RateProfile:
    """Shipped profile when one exists, otherwise the RM profile."""
    try:
        return shipped_profile(n, k)
    except PacCodecError:
        return build_rm_profile(n, k)
