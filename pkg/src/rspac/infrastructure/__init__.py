"""
Infrastructure: bias cache protocol and its file and in-memory implementations.
"""

from rspac.infrastructure.interfaces import BiasCache, BiasKey
from rspac.infrastructure.memory_impl import MemoryBiasCache

__all__ = ["BiasCache", "BiasKey", "MemoryBiasCache"]
