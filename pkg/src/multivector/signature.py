"""
Signature Module

The metric signature (p, q) of Cl_{p,q} and the bitmask blade arithmetic
built on it. Blade e^{a1...ak} is stored as the integer with bits a_i - 1 set.
"""

import os
import sys
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))
import config

from ..errors import SignatureError


@dataclass(frozen=True, order=True)
class Signature:
    """Signature (p, q): e^1..e^p square to +e, e^{p+1}..e^{p+q} to -e."""

    p: int
    q: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise SignatureError(f"signature entries must be integers, got ({self.p!r}, {self.q!r})")
        if self.p < 0 or self.q < 0:
            raise SignatureError(f"signature entries must be non-negative, got ({self.p}, {self.q})")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dimension(self) -> int:
        return 1 << self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def negative_mask(self) -> int:
        return self.full_mask & ~((1 << self.p) - 1)

    @property
    def positive_block(self) -> int:
        """Mask of e^{1...p}."""
        return (1 << self.p) - 1

    @property
    def negative_block(self) -> int:
        """Mask of e^{p+1...n}."""
        return self.negative_mask

    @property
    def diff_mod8(self) -> int:
        return (self.p - self.q) % 8

    def metric(self, a: int) -> int:
        """eta^{aa} for the 1-based generator index a."""
        if not 1 <= a <= self.n:
            raise SignatureError(f"generator index {a} outside 1..{self.n}")
        return 1 if a <= self.p else -1

    def check_max(self, limit: Optional[int] = None):
        limit = config.MAX_N if limit is None else limit
        if self.n > limit:
            raise SignatureError(f"n = {self.n} exceeds the maximum supported n = {limit}")
        return self

    def label(self) -> str:
        return f"Cl({self.p},{self.q})"

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q}

    def __str__(self):
        return self.label()


def as_signature(sig) -> Signature:
    if isinstance(sig, Signature):
        return sig
    p, q = sig
    return Signature(int(p), int(q))


def grade(mask: int) -> int:
    return mask.bit_count()


def blade_mask(indices: Iterable[int]) -> int:
    """Mask of the blade e^{a1...ak} for strictly increasing 1-based indices."""
    indices = tuple(indices)
    mask = 0
    previous = 0
    for a in indices:
        if a <= previous:
            raise SignatureError(f"blade indices must be strictly increasing, got {list(indices)}")
        mask |= 1 << (a - 1)
        previous = a
    return mask


def block_mask(start: int, stop: int) -> int:
    """Mask of e^{start...stop}; empty when stop < start."""
    if stop < start:
        return 0
    return ((1 << stop) - 1) & ~((1 << (start - 1)) - 1)


def blade_indices(mask: int) -> tuple:
    out = []
    a = 1
    while mask:
        if mask & 1:
            out.append(a)
        mask >>= 1
        a += 1
    return tuple(out)


def blade_label(mask: int, n: int = 9) -> str:
    if mask == 0:
        return "1"
    indices = blade_indices(mask)
    sep = "," if n >= 10 else ""
    return "e" + sep.join(str(a) for a in indices)


def reorder_sign(a: int, b: int) -> int:
    """Sign of sorting the concatenated index words of blades a and b."""
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_product(a: int, b: int, sig: Signature) -> tuple:
    """e^A e^B = sign * e^{A xor B}; returns (sign, mask)."""
    sign = reorder_sign(a, b)
    if (a & b & sig.negative_mask).bit_count() & 1:
        sign = -sign
    return sign, a ^ b


def reversion_sign(mask: int) -> int:
    k = grade(mask)
    return -1 if (k * (k - 1) // 2) & 1 else 1


def involution_sign(mask: int) -> int:
    return -1 if grade(mask) & 1 else 1


def square_sign(mask: int, sig: Signature) -> int:
    """(e^A)^2 = square_sign * e."""
    return blade_product(mask, mask, sig)[0]


def inverse_sign(mask: int, sig: Signature) -> int:
    """(e^A)^{-1} = inverse_sign * e^A; also the sign of (e^A)^dagger."""
    sign = reversion_sign(mask)
    if (mask & sig.negative_mask).bit_count() & 1:
        sign = -sign
    return sign


def quaternion_type(mask: int) -> int:
    return grade(mask) % 4


def blade_order(n: int) -> list:
    """All masks of an n-generator algebra ordered by grade, then lexicographically."""
    return sorted(range(1 << n), key=lambda m: (grade(m), blade_indices(m)))


@lru_cache(maxsize=None)
def product_table(p: int, q: int) -> tuple:
    """Arrays (J, S) with e^i e^{i^k} = S[k, i] e^k and J[k, i] = i ^ k.

    For coefficient arrays a, b the product is c = (S * b[J]) @ a.
    """
    sig = Signature(p, q)
    dim = sig.dimension
    idx = np.arange(dim)
    J = idx[None, :] ^ idx[:, None]
    S = np.empty((dim, dim), dtype=np.int8)
    for k in range(dim):
        for i in range(dim):
            S[k, i] = blade_product(i, i ^ k, sig)[0]
    J.setflags(write=False)
    S.setflags(write=False)
    return J, S


@lru_cache(maxsize=None)
def sign_vectors(p: int, q: int) -> dict:
    """Per-blade sign arrays for the grade involution, reversion and dagger."""
    sig = Signature(p, q)
    masks = range(sig.dimension)
    out = {
        "grade": np.array([grade(m) for m in masks], dtype=np.int64),
        "involution": np.array([involution_sign(m) for m in masks], dtype=np.int8),
        "reversion": np.array([reversion_sign(m) for m in masks], dtype=np.int8),
        "inverse": np.array([inverse_sign(m, sig) for m in masks], dtype=np.int8),
    }
    for value in out.values():
        value.setflags(write=False)
    return out
