"""In-memory implementations of infrastructure interfaces for testing."""

from typing import Optional

from rspac.infrastructure.interfaces import BiasCache, BiasKey


class MemoryBiasCache(BiasCache):
    """In-process bias cache."""

    def __init__(self) -> None:
        self._entries: dict[BiasKey, list[float]] = {}
        self.hits = 0
        self.misses = 0

    def get(self, key: BiasKey) -> Optional[list[float]]:
        biases = self._entries.get(key)
        if biases is None:
            self.misses += 1
            return None
        self.hits += 1
        return list(biases)

    def set(self, key: BiasKey, biases: list[float]) -> None:
        self._entries[key] = list(biases)

    def exists(self, key: BiasKey) -> bool:
        return key in self._entries

    def delete(self, key: BiasKey) -> bool:
        return self._entries.pop(key, None) is not None

    def clear(self) -> None:
        self._entries.clear()
