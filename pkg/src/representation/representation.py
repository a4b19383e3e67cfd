"""
Representation Module

A faithful matrix representation beta of Cl_{p,q}: the generator images,
cached blade images, and the maps U -> beta(U) and its inverse on the image.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

import numpy as np

from ..errors import InvariantBreachError, RingMismatchError, SignatureError
from ..matrices import Flavor, RepMatrix, classify_form
from ..multivector import Multivector, Signature, as_signature, inverse_sign
from ..scalars import Ring, coerce_scalar, real_part, zero


class RepClass(str, Enum):
    """Matrix algebra isomorphic to Cl_{p,q}, decided by p - q mod 8."""

    REAL_FULL = "real"
    REAL_PAIR = "real_pair"
    COMPLEX = "complex"
    QUATERNION = "quaternion"
    QUATERNION_PAIR = "quaternion_pair"

    @classmethod
    def of(cls, sig) -> "RepClass":
        d = as_signature(sig).diff_mod8
        if d in (0, 2):
            return cls.REAL_FULL
        if d == 1:
            return cls.REAL_PAIR
        if d in (3, 7):
            return cls.COMPLEX
        if d in (4, 6):
            return cls.QUATERNION
        return cls.QUATERNION_PAIR

    @property
    def ring(self) -> Ring:
        if self in (RepClass.REAL_FULL, RepClass.REAL_PAIR):
            return Ring.RATIONAL
        if self == RepClass.COMPLEX:
            return Ring.COMPLEX_RATIONAL
        return Ring.QUATERNION

    @property
    def is_pair(self) -> bool:
        return self in (RepClass.REAL_PAIR, RepClass.QUATERNION_PAIR)

    @property
    def flavor(self) -> Flavor:
        """The matrix operation that beta carries U-dagger to."""
        if self.ring == Ring.RATIONAL:
            return Flavor.TRANSPOSE
        if self.ring == Ring.COMPLEX_RATIONAL:
            return Flavor.HERMITIAN
        return Flavor.QUATERNIONIC

    def expected_size(self, n: int) -> int:
        if self == RepClass.REAL_FULL:
            return 1 << (n // 2)
        if self == RepClass.REAL_PAIR:
            return 1 << ((n + 1) // 2)
        if self == RepClass.QUATERNION:
            return 1 << ((n - 2) // 2)
        return 1 << ((n - 1) // 2)

    def describe(self, n: int) -> str:
        half = self.expected_size(n)
        if self == RepClass.REAL_FULL:
            return f"Mat({half},R)"
        if self == RepClass.REAL_PAIR:
            return f"Mat({half // 2},R)+Mat({half // 2},R)"
        if self == RepClass.COMPLEX:
            return f"Mat({half},C)"
        if self == RepClass.QUATERNION:
            return f"Mat({half},H)"
        return f"Mat({half // 2},H)+Mat({half // 2},H)"


@dataclass(frozen=True)
class AdditionalSignature:
    """(k, l): how many generator images are symmetric and skew-symmetric."""

    k: int
    l: int
    symmetric: tuple
    skew: tuple

    @property
    def symmetric_mask(self) -> int:
        return sum(1 << (a - 1) for a in self.symmetric)

    @property
    def skew_mask(self) -> int:
        return sum(1 << (a - 1) for a in self.skew)

    def to_dict(self) -> dict:
        return {"k": self.k, "l": self.l, "symmetric": list(self.symmetric), "skew": list(self.skew)}


@dataclass(eq=False)
class Representation:
    sig: Signature
    rep_class: RepClass
    generators: tuple
    trace: tuple = ()
    _images: dict = field(default_factory=dict, repr=False)
    _float_images: dict = field(default_factory=dict, repr=False)
    _patterns: Optional[dict] = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return self.generators[0].size if self.generators else 1

    @property
    def ring(self) -> Ring:
        return self.rep_class.ring

    def generator(self, a: int) -> RepMatrix:
        """beta(e^a), 1-based."""
        self.sig.metric(a)
        return self.generators[a - 1]

    def identity(self) -> RepMatrix:
        return RepMatrix.identity(self.size, self.ring)

    def blade_image(self, mask: int) -> RepMatrix:
        """beta(e^A) as the ordered product of generator images."""
        image = self._images.get(mask)
        if image is not None:
            return image
        if mask == 0:
            image = self.identity()
        else:
            top = mask.bit_length()
            image = self.blade_image(mask & ~(1 << (top - 1))) @ self.generators[top - 1]
        self._images[mask] = image
        return image

    def blade_inverse_image(self, mask: int) -> RepMatrix:
        """beta((e^A)^{-1})."""
        image = self.blade_image(mask)
        return image if inverse_sign(mask, self.sig) > 0 else -image

    def float_blade_image(self, mask: int) -> np.ndarray:
        image = self._float_images.get(mask)
        if image is None:
            image = self.blade_image(mask).to_numpy()
            self._float_images[mask] = image
        return image

    def pattern_index(self) -> dict:
        """Blades grouped by the nonzero pattern of their (monomial) images."""
        if self._patterns is None:
            patterns = {}
            for mask in range(self.sig.dimension):
                key = self.blade_image(mask).monomial_pattern()
                patterns.setdefault(key, []).append(mask)
            self._patterns = patterns
        return self._patterns

    def describe(self) -> str:
        return self.rep_class.describe(self.sig.n)

    def to_dict(self) -> dict:
        return {
            "p": self.sig.p,
            "q": self.sig.q,
            "class": self.rep_class.value,
            "algebra": self.describe(),
            "size": self.size,
            "ring": self.ring.value,
            "generators": [g.to_dict() for g in self.generators],
            "trace": list(self.trace),
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "Representation":
        """Inverse of to_dict. Derived fields (algebra, size, ring) are checked, not trusted."""
        sig = Signature(obj["p"], obj["q"])
        rep_class = RepClass(obj["class"])
        if rep_class != RepClass.of(sig):
            raise SignatureError(f"{sig.label()} cannot carry a {rep_class.value} representation")
        generators = tuple(RepMatrix.from_dict(g) for g in obj.get("generators", []))
        if len(generators) != sig.n:
            raise SignatureError(f"{sig.label()} needs {sig.n} generators, got {len(generators)}")
        if any(g.ring != rep_class.ring for g in generators):
            raise RingMismatchError(f"generators of a {rep_class.value} representation must be {rep_class.ring.value}")
        rep = cls(sig, rep_class, generators, trace=tuple(obj.get("trace", ())))
        if "size" in obj and obj["size"] != rep.size:
            raise InvariantBreachError(f"{sig.label()}: declared size {obj['size']}, generators are {rep.size}")
        return rep


def _embeddable(coeff_ring: Ring, rep: Representation) -> bool:
    if coeff_ring in (Ring.RATIONAL, Ring.FLOAT):
        return True
    return rep.rep_class == RepClass.COMPLEX


def represent(rep: Representation, u: Multivector) -> RepMatrix:
    """beta(U) = sum of u_A beta(e^A). Float multivectors give float matrices."""
    if u.sig != rep.sig:
        raise SignatureError(f"{u.sig.label()} multivector given to a {rep.sig.label()} representation")
    if not _embeddable(u.ring, rep):
        raise RingMismatchError(
            f"{u.ring.value} coefficients do not embed in a {rep.rep_class.value} representation"
        )
    terms = u.terms()
    if not u.ring.is_exact:
        dtype = np.complex128 if (u.ring.is_complex or rep.ring != Ring.RATIONAL) else np.float64
        n = rep.size if rep.ring != Ring.QUATERNION else 2 * rep.size
        total = np.zeros((n, n), dtype=dtype)
        for mask, c in terms.items():
            total = total + c * rep.float_blade_image(mask)
        ring = Ring.FLOAT if dtype == np.float64 else Ring.COMPLEX_FLOAT
        return RepMatrix(ring, total)
    out = RepMatrix.zeros(rep.size, rep.ring)
    for mask, c in terms.items():
        c = coerce_scalar(c, rep.ring)
        for i, row in enumerate(rep.blade_image(mask).row_support()):
            for j, x in row:
                out.entries[i, j] = out.entries[i, j] + c * x
    return out


def unrepresent(rep: Representation, m: RepMatrix) -> Multivector:
    """beta^{-1} on the image, by u_A = Re tr(beta(e^A)^{-1} M) / size.

    Blade images are orthogonal under the real trace form, so the projection
    recovers every real coefficient. The result is only meaningful when M lies
    in the image of beta; callers that need that guarantee re-represent and compare.
    """
    if m.ring.is_exact and m.ring != rep.ring:
        raise RingMismatchError(f"{m.ring.value} matrix given to a {rep.ring.value} representation")
    if not m.ring.is_exact:
        return _unrepresent_float(rep, m)
    size = rep.size
    pattern = m.monomial_pattern()
    index = rep.pattern_index()
    candidates = index.get(pattern, []) if pattern is not None else range(rep.sig.dimension)
    out = Multivector.zeros(rep.sig, Ring.RATIONAL)
    for mask in candidates:
        inverse = rep.blade_inverse_image(mask)
        total = zero(rep.ring)
        for i, row in enumerate(inverse.row_support()):
            for k, x in row:
                y = m.entries[k, i]
                if y:
                    total = total + x * y
        value = real_part(total)
        if value:
            out.coeffs[mask] = Fraction(value) / size
    return out


def _unrepresent_float(rep: Representation, m: RepMatrix) -> Multivector:
    size = rep.size
    scale = size if rep.ring != Ring.QUATERNION else 2 * size
    coeffs = []
    for mask in range(rep.sig.dimension):
        inverse = rep.float_blade_image(mask)
        if inverse_sign(mask, rep.sig) < 0:
            inverse = -inverse
        coeffs.append(float(np.real(np.trace(inverse @ m.entries))) / scale)
    return Multivector.from_array(rep.sig, coeffs, Ring.FLOAT)


def additional_signature(rep: Representation) -> AdditionalSignature:
    """Count symmetric and skew-symmetric generator images under the plain transpose."""
    symmetric, skew = [], []
    for a, g in enumerate(rep.generators, start=1):
        form = classify_form(g)
        if form.is_symmetric:
            symmetric.append(a)
        elif form.is_skew:
            skew.append(a)
        else:
            raise InvariantBreachError(
                f"{rep.sig.label()}: generator e{a} is neither symmetric nor skew-symmetric"
            )
    return AdditionalSignature(len(symmetric), len(skew), tuple(symmetric), tuple(skew))

