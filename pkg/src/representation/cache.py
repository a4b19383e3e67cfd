"""
Representation Cache

Process-local cache of built representations, so every check in a suite
reuses one beta per signature (and its cached blade images).
"""

from typing import Optional

from ..multivector import Signature, as_signature
from .builder import build_representation
from .representation import Representation


class RepresentationCache:
    """
    In-memory cache of representations keyed by signature.
    Entries never expire; representations are immutable once built.
    """

    def __init__(self):
        self._cache: dict[Signature, Representation] = {}
        self.hits = 0
        self.misses = 0

    def _make_key(self, sig) -> Signature:
        """Normalize (p, q) tuples and Signature objects to one key."""
        return as_signature(sig)

    def get(self, sig) -> Optional[Representation]:
        """
        Get a cached representation.

        Args:
            sig: Signature or (p, q) tuple

        Returns:
            The cached representation, or None if it was never built
        """
        rep = self._cache.get(self._make_key(sig))
        if rep is None:
            self.misses += 1
        else:
            self.hits += 1
        return rep

    def set(self, sig, rep: Representation):
        self._cache[self._make_key(sig)] = rep

    def get_or_build(self, sig) -> Representation:
        """
        Return the cached representation, building and caching it on a miss.

        Args:
            sig: Signature or (p, q) tuple

        Returns:
            The representation of Cl_{p,q}
        """
        rep = self.get(sig)
        if rep is None:
            rep = build_representation(sig)
            self.set(sig, rep)
        return rep

    def clear(self):
        self._cache.clear()
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self._cache)


# Global instance
_representation_cache = None


def get_representation_cache() -> RepresentationCache:
    """Get or create the process-wide representation cache."""
    global _representation_cache
    if _representation_cache is None:
        _representation_cache = RepresentationCache()
    return _representation_cache


def get_representation(sig) -> Representation:
    return get_representation_cache().get_or_build(sig)
