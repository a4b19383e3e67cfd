"""
Multivector Module

Elements of Cl_{p,q} and its complexification, stored as a dense
coefficient array indexed by blade mask. Exact rings use numpy object
arrays of Fractions or ComplexRationals; float rings use float64/complex128.
"""

from typing import Iterable, Mapping, Optional

import numpy as np

from ..errors import GradeRangeError, RingMismatchError, ScalarError, SignatureError
from ..scalars import (
    Ring,
    coerce_scalar,
    conjugate,
    decode_scalar,
    encode_scalar,
    format_scalar,
    imag_part,
    inverse,
    is_zero,
    join_rings,
    magnitude,
    real_part,
    ring_of,
    zero,
)
from .signature import (
    Signature,
    as_signature,
    blade_label,
    blade_order,
    blade_product,
    grade,
    product_table,
    sign_vectors,
)


MULTIVECTOR_RINGS = (Ring.RATIONAL, Ring.COMPLEX_RATIONAL, Ring.FLOAT, Ring.COMPLEX_FLOAT)


def object_array(values) -> np.ndarray:
    """1-D object array holding the given Python scalars as-is."""
    values = list(values)
    out = np.empty(len(values), dtype=object)
    for i, value in enumerate(values):
        out[i] = value
    return out


def _signed(coeffs: np.ndarray, signs: np.ndarray) -> np.ndarray:
    if coeffs.dtype == object:
        return object_array(c if s > 0 else -c for c, s in zip(coeffs, signs))
    return coeffs * signs


class Multivector:
    """U = sum over blades A of u_A e^A."""

    __slots__ = ("sig", "ring", "coeffs")

    def __init__(self, sig, coeffs: np.ndarray, ring: Ring):
        self.sig = as_signature(sig)
        if ring not in MULTIVECTOR_RINGS:
            raise RingMismatchError(f"multivectors cannot have {ring.value} coefficients")
        if coeffs.shape != (self.sig.dimension,):
            raise SignatureError(
                f"coefficient array of shape {coeffs.shape} does not fit {self.sig.label()}"
            )
        self.ring = ring
        self.coeffs = coeffs

    # ------------------------------------------------------------------
    # Construction

    @classmethod
    def zeros(cls, sig, ring: Ring = Ring.RATIONAL) -> "Multivector":
        sig = as_signature(sig)
        if ring.is_exact:
            coeffs = object_array([zero(ring)] * sig.dimension)
        else:
            coeffs = np.zeros(sig.dimension, dtype=ring.numpy_dtype)
        return cls(sig, coeffs, ring)

    @classmethod
    def from_terms(cls, sig, terms: Mapping[int, object], ring: Optional[Ring] = None) -> "Multivector":
        sig = as_signature(sig)
        if ring is None:
            ring = Ring.RATIONAL
            for value in terms.values():
                ring = join_rings(ring, ring_of(value))
        out = cls.zeros(sig, ring)
        for mask, value in terms.items():
            if not 0 <= mask < sig.dimension:
                raise SignatureError(f"blade mask {mask} does not exist in {sig.label()}")
            out.coeffs[mask] = out.coeffs[mask] + coerce_scalar(value, ring)
        return out

    @classmethod
    def scalar(cls, sig, value=1, ring: Optional[Ring] = None) -> "Multivector":
        return cls.from_terms(sig, {0: value}, ring)

    @classmethod
    def blade(cls, sig, mask: int, coeff=1, ring: Optional[Ring] = None) -> "Multivector":
        return cls.from_terms(sig, {mask: coeff}, ring)

    @classmethod
    def vector(cls, sig, a: int, coeff=1, ring: Optional[Ring] = None) -> "Multivector":
        """coeff * e^a for the 1-based generator index a."""
        sig = as_signature(sig)
        sig.metric(a)
        return cls.blade(sig, 1 << (a - 1), coeff, ring)

    @classmethod
    def from_array(cls, sig, values: Iterable, ring: Ring) -> "Multivector":
        sig = as_signature(sig)
        values = list(values)
        if ring.is_exact:
            coeffs = object_array(coerce_scalar(v, ring) for v in values)
        else:
            coeffs = np.array([coerce_scalar(v, ring) for v in values], dtype=ring.numpy_dtype)
        return cls(sig, coeffs, ring)

    def _new(self, coeffs: np.ndarray, ring: Optional[Ring] = None) -> "Multivector":
        return Multivector(self.sig, coeffs, self.ring if ring is None else ring)

    def copy(self) -> "Multivector":
        return self._new(self.coeffs.copy())

    # ------------------------------------------------------------------
    # Ring handling

    def to_ring(self, ring: Ring) -> "Multivector":
        if ring == self.ring:
            return self
        if ring.is_exact:
            coeffs = object_array(coerce_scalar(c, ring) for c in self.coeffs)
        else:
            coeffs = np.array([coerce_scalar(c, ring) for c in self.coeffs], dtype=ring.numpy_dtype)
        return self._new(coeffs, ring)

    def promote(self, ring: Ring) -> "Multivector":
        return self.to_ring(join_rings(self.ring, ring))

    def to_float(self) -> "Multivector":
        return self.to_ring(self.ring.to_float())

    def real_part(self) -> "Multivector":
        ring = Ring.RATIONAL if self.ring.is_exact else Ring.FLOAT
        return Multivector.from_array(self.sig, (real_part(c) for c in self.coeffs), ring)

    def imag_part(self) -> "Multivector":
        ring = Ring.RATIONAL if self.ring.is_exact else Ring.FLOAT
        return Multivector.from_array(self.sig, (imag_part(c) for c in self.coeffs), ring)

    def is_real(self, tol: float = 0.0) -> bool:
        if not self.ring.is_complex:
            return True
        return all(is_zero(imag_part(c), tol) for c in self.coeffs)

    # ------------------------------------------------------------------
    # Arithmetic

    def _check_operand(self, other: "Multivector"):
        if other.sig != self.sig:
            raise SignatureError(f"cannot combine {self.sig.label()} with {other.sig.label()}")
        if other.ring != self.ring:
            raise RingMismatchError(
                f"operands over {self.ring.value} and {other.ring.value}; convert one explicitly"
            )

    def _scaled(self, c) -> "Multivector":
        ring = join_rings(self.ring, ring_of(c))
        base = self.to_ring(ring)
        c = coerce_scalar(c, ring)
        if ring.is_exact:
            return base._new(object_array(x * c for x in base.coeffs), ring)
        return base._new(base.coeffs * c, ring)

    def __add__(self, other):
        if isinstance(other, Multivector):
            self._check_operand(other)
            return self._new(self.coeffs + other.coeffs)
        try:
            source = ring_of(other)
        except ScalarError:
            return NotImplemented
        ring = join_rings(self.ring, source)
        out = self.to_ring(ring).copy()
        out.coeffs[0] = out.coeffs[0] + coerce_scalar(other, ring)
        return out

    __radd__ = __add__

    def __neg__(self):
        if self.ring.is_exact:
            return self._new(object_array(-c for c in self.coeffs))
        return self._new(-self.coeffs)

    def __sub__(self, other):
        if isinstance(other, Multivector):
            self._check_operand(other)
            return self._new(self.coeffs - other.coeffs)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return self.geometric_product(other)
        try:
            ring_of(other)
        except ScalarError:
            return NotImplemented
        return self._scaled(other)

    def __rmul__(self, other):
        try:
            ring_of(other)
        except ScalarError:
            return NotImplemented
        return self._scaled(other)

    def __truediv__(self, other):
        if isinstance(other, Multivector):
            return NotImplemented
        return self._scaled(inverse(other))

    def geometric_product(self, other: "Multivector") -> "Multivector":
        self._check_operand(other)
        if self.ring.is_exact:
            return self._new(_exact_product(self.coeffs, other.coeffs, self.sig, self.ring))
        J, S = product_table(self.sig.p, self.sig.q)
        return self._new((S * other.coeffs[J]) @ self.coeffs)

    def lie_bracket(self, other: "Multivector") -> "Multivector":
        return self * other - other * self

    # ------------------------------------------------------------------
    # Conjugations

    def grade_involution(self) -> "Multivector":
        """U-hat: the sign (-1)^k on grade k."""
        return self._new(_signed(self.coeffs, sign_vectors(self.sig.p, self.sig.q)["involution"]))

    def reversion(self) -> "Multivector":
        """U-tilde: the sign (-1)^{k(k-1)/2} on grade k."""
        return self._new(_signed(self.coeffs, sign_vectors(self.sig.p, self.sig.q)["reversion"]))

    def complex_conjugate(self) -> "Multivector":
        if not self.ring.is_complex:
            return self
        if self.ring.is_exact:
            return self._new(object_array(conjugate(c) for c in self.coeffs))
        return self._new(np.conj(self.coeffs))

    def pseudo_hermitian(self) -> "Multivector":
        """U-double-dagger: complex conjugation composed with reversion."""
        return self.complex_conjugate().reversion()

    def hermitian_conjugate(self) -> "Multivector":
        """U-dagger: conjugate each coefficient and send e^A to (e^A)^{-1}."""
        signs = sign_vectors(self.sig.p, self.sig.q)["inverse"]
        return self._new(_signed(self.complex_conjugate().coeffs, signs))

    def clifford_conjugate(self) -> "Multivector":
        """Reversion composed with the grade involution."""
        return self.grade_involution().reversion()

    # ------------------------------------------------------------------
    # Projections

    def _keep(self, keep: np.ndarray) -> "Multivector":
        out = self.coeffs.copy()
        if self.ring.is_exact:
            z = zero(self.ring)
            for i in np.flatnonzero(~keep):
                out[i] = z
        else:
            out[~keep] = 0
        return self._new(out)

    def grade_project(self, k: int) -> "Multivector":
        if not 0 <= k <= self.sig.n:
            raise GradeRangeError(f"grade {k} outside 0..{self.sig.n}")
        grades = sign_vectors(self.sig.p, self.sig.q)["grade"]
        return self._keep(grades == k)

    def project_grades(self, ks: Iterable[int]) -> "Multivector":
        grades = sign_vectors(self.sig.p, self.sig.q)["grade"]
        return self._keep(np.isin(grades, list(ks)))

    def even_part(self) -> "Multivector":
        grades = sign_vectors(self.sig.p, self.sig.q)["grade"]
        return self._keep(grades % 2 == 0)

    def odd_part(self) -> "Multivector":
        grades = sign_vectors(self.sig.p, self.sig.q)["grade"]
        return self._keep(grades % 2 == 1)

    def quaternion_type_project(self, s: int) -> "Multivector":
        """Projection onto the blades of grade k with k = s mod 4."""
        if s not in (0, 1, 2, 3):
            raise GradeRangeError(f"quaternion type {s} outside 0..3")
        grades = sign_vectors(self.sig.p, self.sig.q)["grade"]
        return self._keep(grades % 4 == s)

    # ------------------------------------------------------------------
    # Inspection

    def terms(self, tol: float = 0.0) -> dict:
        return {m: c for m, c in enumerate(self.coeffs) if not is_zero(c, tol)}

    def grades(self, tol: float = 0.0) -> set:
        return {grade(m) for m in self.terms(tol)}

    def scalar_part(self):
        return self.coeffs[0]

    def is_zero(self, tol: float = 0.0) -> bool:
        return not self.terms(tol)

    def max_norm(self) -> float:
        if self.ring.is_exact:
            return max((magnitude(c) for c in self.coeffs), default=0.0)
        return float(np.max(np.abs(self.coeffs), initial=0.0))

    def l1_norm(self) -> float:
        if self.ring.is_exact:
            return sum(magnitude(c) for c in self.coeffs)
        return float(np.sum(np.abs(self.coeffs)))

    def is_close(self, other: "Multivector", tol: float) -> bool:
        if other.sig != self.sig:
            return False
        ring = join_rings(self.ring, other.ring)
        diff = self.to_ring(ring) - other.to_ring(ring)
        return diff.max_norm() <= tol

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        if other.sig != self.sig:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    # ------------------------------------------------------------------
    # Rendering

    def __str__(self):
        n = self.sig.n
        out = ""
        for m in blade_order(n):
            c = self.coeffs[m]
            if is_zero(c):
                continue
            negative = not self.ring.is_complex and c < 0
            text = format_scalar(-c if negative else c)
            if m:
                text = blade_label(m, n) if text == "1" else f"{text} {blade_label(m, n)}"
            if not out:
                out = f"-{text}" if negative else text
            else:
                out += f" - {text}" if negative else f" + {text}"
        return out or "0"

    def __repr__(self):
        return f"Multivector({self.sig.label()}, {self.ring.value}: {self})"

    def to_dict(self) -> dict:
        return {
            "p": self.sig.p,
            "q": self.sig.q,
            "ring": self.ring.value,
            "terms": {str(m): encode_scalar(c) for m, c in self.terms().items()},
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "Multivector":
        ring = Ring(obj["ring"])
        sig = Signature(int(obj["p"]), int(obj["q"]))
        terms = {int(m): decode_scalar(v, ring) for m, v in obj.get("terms", {}).items()}
        return cls.from_terms(sig, terms, ring)


def _exact_product(a: np.ndarray, b: np.ndarray, sig: Signature, ring: Ring) -> np.ndarray:
    out = object_array([zero(ring)] * sig.dimension)
    a_terms = [(i, x) for i, x in enumerate(a) if x]
    b_terms = [(j, y) for j, y in enumerate(b) if y]
    for i, x in a_terms:
        for j, y in b_terms:
            sign, m = blade_product(i, j, sig)
            if sign > 0:
                out[m] = out[m] + x * y
            else:
                out[m] = out[m] - x * y
    return out


def lie_bracket(u: Multivector, v: Multivector) -> Multivector:
    """[U, V] = UV - VU."""
    return u.lie_bracket(v)
