"""
Forms Module

Classification of an invariant-form matrix M = beta(F): symmetry under the
plain transpose, self-adjointness under the conjugate transpose, its square
and its trace. The classify package reads these flags to decide between
the orthogonal, symplectic and unitary families.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from ..scalars import Ring
from .matrix import RepMatrix


class Flavor(str, Enum):
    """The matrix anti-involution paired with a representation class."""

    TRANSPOSE = "transpose"
    HERMITIAN = "hermitian"
    QUATERNIONIC = "quaternionic"

    def apply(self, m: RepMatrix) -> RepMatrix:
        if self == Flavor.TRANSPOSE:
            return m.transpose()
        return m.conj_transpose()

    def apply_numpy(self, a: np.ndarray) -> np.ndarray:
        """Same operation on a float matrix; quaternions arrive as their complex model."""
        if self == Flavor.TRANSPOSE:
            return a.T
        return a.conj().T


@dataclass(frozen=True)
class FormMatrix:
    """Flags of an invariant-form matrix."""

    size: int
    ring: Ring
    is_symmetric: bool
    is_skew: bool
    is_self_adjoint: bool
    is_anti_self_adjoint: bool
    square_sign: Optional[int]
    trace_zero: bool
    is_identity: bool
    is_unitary_like: bool

    def to_dict(self) -> dict:
        return {
            "size": self.size,
            "ring": self.ring.value,
            "symmetric": self.is_symmetric,
            "skew": self.is_skew,
            "self_adjoint": self.is_self_adjoint,
            "anti_self_adjoint": self.is_anti_self_adjoint,
            "square_sign": self.square_sign,
            "trace_zero": self.trace_zero,
            "identity": self.is_identity,
            "unitary_like": self.is_unitary_like,
        }


def _same(a: RepMatrix, b: RepMatrix, tol: Optional[float]) -> bool:
    if tol is None or a.ring.is_exact:
        return a == b
    return a.is_close(b, tol)


def classify_form(m: RepMatrix, tol: Optional[float] = None) -> FormMatrix:
    """Compute the flags of M, exactly for exact rings and within tol otherwise."""
    t = m.transpose()
    star = m.conj_transpose()
    identity = RepMatrix.identity(m.size, m.ring)
    square = m @ m
    if _same(square, identity, tol):
        square_sign = 1
    elif _same(square, -identity, tol):
        square_sign = -1
    else:
        square_sign = None
    if m.ring.is_exact:
        trace_zero = not m.trace()
    else:
        trace_zero = abs(m.trace()) <= (tol or 0.0)
    return FormMatrix(
        size=m.size,
        ring=m.ring,
        is_symmetric=_same(t, m, tol),
        is_skew=_same(t, -m, tol),
        is_self_adjoint=_same(star, m, tol),
        is_anti_self_adjoint=_same(star, -m, tol),
        square_sign=square_sign,
        trace_zero=trace_zero,
        is_identity=_same(m, identity, tol),
        is_unitary_like=_same(star @ m, identity, tol),
    )
