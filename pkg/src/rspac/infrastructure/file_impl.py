"""
File-backed bias cache.

File format: a header line carrying the key, then one bias per line.

    # rspac-biases n=64 k=32 design_snr_db=5.0 samples=20000 seed=2021
    0.0123
    ...
"""

import logging
import re
from pathlib import Path
from typing import Optional, Union

from rspac.exceptions import ConfigError
from rspac.infrastructure.interfaces import BiasCache, BiasKey

logger = logging.getLogger(__name__)

_HEADER = re.compile(
    r"^#\s*rspac-biases\s+n=(\d+)\s+k=(\d+)\s+design_snr_db=(\S+)"
    r"\s+samples=(\d+)\s+seed=(\d+)\s*$"
)


def format_bias_file(key: BiasKey, biases: list[float]) -> str:
    return key.header() + "\n" + "".join(f"{b!r}\n" for b in biases)


def parse_bias_file(text: str) -> tuple[BiasKey, list[float]]:
    """
    Parse a bias file.

    Raises:
        ConfigError: on a missing/garbled header, non-numeric lines or a
            value count that does not match n
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ConfigError("bias file is empty")
    match = _HEADER.match(lines[0])
    if match is None:
        raise ConfigError(f"bias file header not recognised: {lines[0]!r}")
    try:
        key = BiasKey(
            n=int(match.group(1)),
            k=int(match.group(2)),
            design_snr_db=float(match.group(3)),
            samples=int(match.group(4)),
            seed=int(match.group(5)),
        )
        biases = [float(ln) for ln in lines[1:]]
    except ValueError as e:
        raise ConfigError(f"malformed bias file: {e}") from e
    if len(biases) != key.n:
        raise ConfigError(f"bias file lists {len(biases)} values for n={key.n}")
    return key, biases


def read_bias_file(path: Union[str, Path]) -> tuple[BiasKey, list[float]]:
    path = Path(path)
    try:
        return parse_bias_file(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(f"cannot read bias file {path}: {e}") from e


def write_bias_file(path: Union[str, Path], key: BiasKey, biases: list[float]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_bias_file(key, biases), encoding="utf-8")
    return path


class FileBiasCache(BiasCache):
    """One bias file per key under a cache directory."""

    def __init__(self, directory: Union[str, Path]):
        self.directory = Path(directory)

    def path_for(self, key: BiasKey) -> Path:
        name = f"biases_n{key.n}_k{key.k}_snr{key.design_snr_db:g}_s{key.samples}_seed{key.seed}"
        return self.directory / f"{name}.txt"

    def get(self, key: BiasKey) -> Optional[list[float]]:
        path = self.path_for(key)
        if not path.is_file():
            logger.info(f"Bias cache miss: {path.name}")
            return None
        stored_key, biases = read_bias_file(path)
        if stored_key != key:
            raise ConfigError(f"bias file {path} holds {stored_key}, expected {key}")
        logger.info(f"Bias cache hit: {path.name}")
        return biases

    def set(self, key: BiasKey, biases: list[float]) -> None:
        if len(biases) != key.n:
            raise ConfigError(f"{len(biases)} biases for n={key.n}")
        write_bias_file(self.path_for(key), key, biases)

    def exists(self, key: BiasKey) -> bool:
        return self.path_for(key).is_file()

    def delete(self, key: BiasKey) -> bool:
        path = self.path_for(key)
        if path.is_file():
            path.unlink()
            return True
        return False
