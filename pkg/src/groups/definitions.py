"""
Group Definitions Module

The five Lie groups of Cl_{p,q} (and its complexification) cut out by a
conjugation equation, plus Spin+:

    G2i1 = {U in Cl(0) + iCl(1) : U-double-dagger U = e}
    G2i3 = {U in Cl(0) + iCl(1) : (U-hat)-double-dagger U = e}
    G23  = {U in Cl : U-tilde U = e}
    G12  = {U in Cl : (U-hat)-tilde U = e}
    G2   = {U in Cl(0) : U-tilde U = e}

Lie algebras are sums of quaternion types; their dimensions come out both
as binomial sums and as the exact periodic closed forms.
"""

from enum import Enum
from fractions import Fraction
from math import comb
from typing import Optional

from ..errors import SignatureError, UnknownGroupError
from ..multivector import Multivector, as_signature, grade, quaternion_type
from ..scalars import ComplexRational, Ring


class GroupId(str, Enum):
    G2I1 = "g2i1"
    G2I3 = "g2i3"
    G23 = "g23"
    G12 = "g12"
    G2 = "g2"
    SPIN_PLUS = "spin"

    @classmethod
    def parse(cls, text: str) -> "GroupId":
        key = text.strip().lower().replace("_", "").replace("+", "")
        aliases = {"spinplus": cls.SPIN_PLUS, "spin": cls.SPIN_PLUS}
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise UnknownGroupError(f"unknown group '{text}'") from None

    @property
    def label(self) -> str:
        return {
            GroupId.G2I1: "G2i1",
            GroupId.G2I3: "G2i3",
            GroupId.G23: "G23",
            GroupId.G12: "G12",
            GroupId.G2: "G2",
            GroupId.SPIN_PLUS: "Spin+",
        }[self]

    @property
    def is_complexified(self) -> bool:
        return self in (GroupId.G2I1, GroupId.G2I3)

    @property
    def is_even(self) -> bool:
        return self in (GroupId.G2, GroupId.SPIN_PLUS)

    @property
    def ring(self) -> Ring:
        """Exact coefficient ring the group's elements live in."""
        return Ring.COMPLEX_RATIONAL if self.is_complexified else Ring.RATIONAL

    @property
    def float_ring(self) -> Ring:
        return Ring.COMPLEX_FLOAT if self.is_complexified else Ring.FLOAT

    @property
    def lie_algebra(self) -> "LieAlgebraId":
        return LIE_ALGEBRAS[self]


class LieAlgebraId(str, Enum):
    """Quaternion-type sums; 'i' marks a summand taken with imaginary coefficients."""

    TWO_I_ONE = "2+i1"
    TWO_I_THREE = "2+i3"
    TWO_THREE = "2+3"
    TWO_ONE = "2+1"
    TWO = "2"
    GRADE_TWO = "Cl2"

    @property
    def real_types(self) -> tuple:
        return {
            LieAlgebraId.TWO_I_ONE: (2,),
            LieAlgebraId.TWO_I_THREE: (2,),
            LieAlgebraId.TWO_THREE: (2, 3),
            LieAlgebraId.TWO_ONE: (2, 1),
            LieAlgebraId.TWO: (2,),
            LieAlgebraId.GRADE_TWO: (),
        }[self]

    @property
    def imaginary_types(self) -> tuple:
        return {
            LieAlgebraId.TWO_I_ONE: (1,),
            LieAlgebraId.TWO_I_THREE: (3,),
        }.get(self, ())

    def real_masks(self, sig) -> list:
        sig = as_signature(sig)
        if self == LieAlgebraId.GRADE_TWO:
            return [m for m in range(sig.dimension) if grade(m) == 2]
        return [m for m in range(sig.dimension) if quaternion_type(m) in self.real_types]

    def imaginary_masks(self, sig) -> list:
        sig = as_signature(sig)
        return [m for m in range(sig.dimension) if quaternion_type(m) in self.imaginary_types]


LIE_ALGEBRAS = {
    GroupId.G2I1: LieAlgebraId.TWO_I_ONE,
    GroupId.G2I3: LieAlgebraId.TWO_I_THREE,
    GroupId.G23: LieAlgebraId.TWO_THREE,
    GroupId.G12: LieAlgebraId.TWO_ONE,
    GroupId.G2: LieAlgebraId.TWO,
    GroupId.SPIN_PLUS: LieAlgebraId.GRADE_TWO,
}

FIVE_GROUPS = (GroupId.G2I1, GroupId.G2I3, GroupId.G23, GroupId.G12, GroupId.G2)
ALL_GROUPS = FIVE_GROUPS + (GroupId.SPIN_PLUS,)


# ----------------------------------------------------------------------
# Membership

def conjugation(g: GroupId, u: Multivector) -> Multivector:
    """The anti-involution in the group's defining equation, applied to U."""
    if g == GroupId.G2I1:
        return u.pseudo_hermitian()
    if g == GroupId.G2I3:
        return u.grade_involution().pseudo_hermitian()
    if g == GroupId.G12:
        return u.clifford_conjugate()
    return u.reversion()


def _is_zero_mv(u: Multivector, tol: float) -> bool:
    return u.is_zero(tol if not u.ring.is_exact else 0.0)


def in_subspace(g: GroupId, u: Multivector, tol: float = 0.0) -> bool:
    """Even (G2, Spin+), even + i*odd (G2i1, G2i3), or anything."""
    if g.is_even:
        return _is_zero_mv(u.odd_part(), tol)
    if g.is_complexified:
        even_imag = u.even_part().imag_part()
        odd_real = u.odd_part().real_part()
        return _is_zero_mv(even_imag, tol) and _is_zero_mv(odd_real, tol)
    return u.is_real(tol)


def _is_identity(x: Multivector, tol: float) -> bool:
    e = Multivector.scalar(x.sig, 1, x.ring)
    if x.ring.is_exact:
        return x == e
    return x.is_close(e, tol)


def preserves_vectors(u: Multivector, tol: float = 0.0) -> bool:
    """U e^a U^{-1} stays in grade 1 for every generator, taking U^{-1} = U-tilde."""
    inverse = u.reversion()
    for a in range(1, u.sig.n + 1):
        e_a = Multivector.vector(u.sig, a, ring=u.ring)
        image = u * e_a * inverse
        if not _is_zero_mv(image - image.grade_project(1), tol):
            return False
    return True


def is_member(g: GroupId, u: Multivector, tol: Optional[float] = None) -> bool:
    """Subspace constraint plus defining equation; tol applies to float rings only."""
    tol = 0.0 if (tol is None or u.ring.is_exact) else tol
    if not in_subspace(g, u, tol):
        return False
    if not _is_identity(conjugation(g, u) * u, tol):
        return False
    if g == GroupId.SPIN_PLUS:
        return preserves_vectors(u, tol)
    return True


def lie_algebra_member(g: GroupId, x: Multivector, tol: float = 0.0) -> bool:
    """X lies in the group's quaternion-type sum (or in Cl^2 for Spin+)."""
    algebra = g.lie_algebra
    tol = 0.0 if x.ring.is_exact else tol
    real_allowed = set(algebra.real_masks(x.sig))
    imag_allowed = set(algebra.imaginary_masks(x.sig))
    real_terms = x.real_part().terms(tol)
    if any(m not in real_allowed for m in real_terms):
        return False
    if not x.ring.is_complex:
        return True
    return all(m in imag_allowed for m in x.imag_part().terms(tol))


# ----------------------------------------------------------------------
# Dimensions

# cos(pi k / 4) for even k, and its sign for odd k where |cos| = sqrt(2)/2
_COS_EVEN = {0: 1, 2: 0, 4: -1, 6: 0}
_COS_ODD_SIGN = {1: 1, 3: -1, 5: -1, 7: 1}


def scaled_cos(m: int, k: int) -> Fraction:
    """2^{m/2} cos(pi k / 4), exact; m and k must share parity."""
    if (m - k) % 2:
        raise ValueError(f"2^({m}/2) cos({k} pi/4) is irrational")
    r = k % 8
    if r in _COS_EVEN:
        return _COS_EVEN[r] * Fraction(2) ** (m // 2)
    # cos = +-sqrt(2)/2, so the product is +-2^{(m-1)/2}
    return _COS_ODD_SIGN[r] * Fraction(2) ** ((m - 1) // 2)


def scaled_sin(m: int, k: int) -> Fraction:
    """2^{m/2} sin(pi k / 4) = 2^{m/2} cos(pi (k - 2) / 4)."""
    return scaled_cos(m, k - 2)


def binomial_dimension(g: GroupId, n: int) -> int:
    if g == GroupId.SPIN_PLUS:
        return comb(n, 2)
    algebra = g.lie_algebra
    types = set(algebra.real_types) | set(algebra.imaginary_types)
    return sum(comb(n, k) for k in range(n + 1) if k % 4 in types)


def closed_form_dimension(g: GroupId, n: int) -> Fraction:
    if g == GroupId.SPIN_PLUS:
        return Fraction(n * (n - 1), 2)
    if g == GroupId.G2:
        return Fraction(2) ** (n - 2) - scaled_cos(n - 2, n)
    if g in (GroupId.G12, GroupId.G2I1):
        return Fraction(2) ** (n - 1) - scaled_cos(n - 1, n + 1)
    return Fraction(2) ** (n - 1) - scaled_sin(n - 1, n + 1)


def lie_algebra_dimension(g: GroupId, sig) -> tuple:
    """(binomial sum, exact closed form) for the group's Lie algebra."""
    n = sig if isinstance(sig, int) else as_signature(sig).n
    if n < 1:
        raise SignatureError("Lie algebra dimensions are tabulated for n >= 1")
    return binomial_dimension(g, n), closed_form_dimension(g, n)


def algebra_element(g: GroupId, sig, real_coeffs: dict, imag_coeffs: Optional[dict] = None,
                    ring: Optional[Ring] = None) -> Multivector:
    """Assemble X = sum r_A e^A + i sum s_B e^B in the group's coefficient ring."""
    sig = as_signature(sig)
    imag_coeffs = imag_coeffs or {}
    exact = ring is None or ring.is_exact
    target = g.ring if exact else g.float_ring
    if imag_coeffs and not target.is_complex:
        target = target.complexified()
    out = Multivector.zeros(sig, target)
    for m, c in real_coeffs.items():
        out.coeffs[m] = out.coeffs[m] + c
    for m, c in imag_coeffs.items():
        if exact:
            out.coeffs[m] = out.coeffs[m] + ComplexRational(0, c)
        else:
            out.coeffs[m] = out.coeffs[m] + 1j * c
    return out

