"""
Transport Module

Concrete isomorphisms between the groups, built from generator
substitutions e^a -> i e^b or e^a -> e^a e^n:

    G2i1(p,q) = G12(q,p)      G2i3(p,q) = G23(q,p)
    G2(p,q)   = G12(p,q-1)    G2(p,q)   = G12(q,p-1)    G2(p,q) = G2(q,p)

Each substitution sends the generators of a real source algebra to unit
multiples of blades of the target algebra; extending multiplicatively gives
a table blade -> (unit, blade), which is inverted on its image.
"""

import logging
from dataclasses import dataclass
from enum import Enum

from ..errors import TransportError
from ..multivector import Multivector, Signature, as_signature, blade_product
from ..reports import Report, check
from ..scalars import ComplexRational, Ring, coerce_scalar, imag_part, is_zero, real_part
from .definitions import GroupId, is_member
from .sampling import sample_exact

logger = logging.getLogger(__name__)


class TransportFamily(str, Enum):
    G2I1_G12 = "g2i1-g12"
    G2I3_G23 = "g2i3-g23"
    G2_G12_DROP_LAST = "g2-g12-drop-last"
    G2_G12_DROP_FIRST = "g2-g12-drop-first"
    G2_G2_SWAP = "g2-g2-swap"


class GeneratorSubstitution:
    """Algebra map Cl(source) -> (complexified) Cl(target) fixed on generators."""

    def __init__(self, source: Signature, target: Signature, images: list):
        self.source = as_signature(source)
        self.target = as_signature(target)
        if len(images) != self.source.n:
            raise TransportError(f"{len(images)} generator images for {self.source.label()}")
        self.images = tuple(images)
        self.table = self._blade_table()
        self.inverse_table = {}
        for mask, (unit, image) in enumerate(self.table):
            if image in self.inverse_table:
                raise TransportError("generator substitution is not injective on blades")
            self.inverse_table[image] = (unit.inverse() if isinstance(unit, ComplexRational) else unit, mask)

    def _blade_table(self) -> list:
        table = [(1, 0)]
        for mask in range(1, self.source.dimension):
            top = mask.bit_length() - 1
            unit, image = table[mask & ~(1 << top)]
            g_unit, g_image = self.images[top]
            sign, product = blade_product(image, g_image, self.target)
            table.append((unit * g_unit * sign, product))
        return table

    @property
    def is_complex(self) -> bool:
        return any(isinstance(u, ComplexRational) for u, _ in self.images)

    def _target_ring(self, ring: Ring) -> Ring:
        return ring.complexified() if self.is_complex else ring

    def apply(self, u: Multivector) -> Multivector:
        if u.sig != self.source:
            raise TransportError(f"expected a {self.source.label()} element, got {u.sig.label()}")
        ring = self._target_ring(u.ring)
        out = Multivector.zeros(self.target, ring)
        for mask, c in u.terms().items():
            unit, image = self.table[mask]
            out.coeffs[image] = out.coeffs[image] + coerce_scalar(unit, ring) * coerce_scalar(c, ring)
        return out

    def apply_inverse(self, u: Multivector, tol: float = 0.0) -> Multivector:
        """Pull back an element of the image; raises TransportError outside it."""
        if u.sig != self.target:
            raise TransportError(f"expected a {self.target.label()} element, got {u.sig.label()}")
        ring = Ring.RATIONAL if u.ring.is_exact else Ring.FLOAT
        coeffs = [0] * self.source.dimension
        for mask, c in u.terms(tol).items():
            if mask not in self.inverse_table:
                raise TransportError(f"blade {mask} of {self.target.label()} is outside the image")
            unit, source_mask = self.inverse_table[mask]
            value = c * (complex(unit) if not u.ring.is_exact else unit)
            if not is_zero(imag_part(value), tol):
                raise TransportError("pulled-back coefficient is not real")
            coeffs[source_mask] = real_part(value)
        return Multivector.from_array(self.source, coeffs, ring)


def _vector(a: int) -> int:
    return 1 << (a - 1)


def imaginary_swap(p: int, q: int) -> GeneratorSubstitution:
    """Cl(q,p) -> C x Cl(p,q): f^b -> i e^{p+b} (b <= q), f^{q+b} -> i e^b (b <= p)."""
    source, target = Signature(q, p), Signature(p, q)
    i = ComplexRational(0, 1)
    images = [(i, _vector(p + b)) for b in range(1, q + 1)]
    images += [(i, _vector(b)) for b in range(1, p + 1)]
    return GeneratorSubstitution(source, target, images)


def drop_last(p: int, q: int) -> GeneratorSubstitution:
    """Cl(p,q-1) -> Cl(p,q)^even: f^a -> e^a e^n."""
    if q < 1:
        raise TransportError(f"G2({p},{q}) -> G12({p},{q - 1}) needs q >= 1")
    target = Signature(p, q)
    n = target.n
    images = []
    for a in range(1, n):
        sign, mask = blade_product(_vector(a), _vector(n), target)
        images.append((sign, mask))
    return GeneratorSubstitution(Signature(p, q - 1), target, images)


def drop_first(p: int, q: int) -> GeneratorSubstitution:
    """Cl(q,p-1) -> Cl(p,q)^even: f^b -> e^{p+b} e^1, f^{q+b} -> e^{1+b} e^1."""
    if p < 1:
        raise TransportError(f"G2({p},{q}) -> G12({q},{p - 1}) needs p >= 1")
    target = Signature(p, q)
    first = _vector(1)
    images = []
    for b in range(1, q + 1):
        images.append(blade_product(_vector(p + b), first, target))
    for b in range(1, p):
        images.append(blade_product(_vector(1 + b), first, target))
    return GeneratorSubstitution(Signature(q, p - 1), target, images)


@dataclass
class Transport:
    """Map from a group over sig_from onto an isomorphic group over sig_to.

    steps are (substitution, pull_back) pairs applied in order; pull_back
    runs the substitution backwards.
    """

    family: TransportFamily
    g_from: GroupId
    sig_from: Signature
    g_to: GroupId
    sig_to: Signature
    steps: tuple

    def forward(self, u: Multivector, tol: float = 0.0) -> Multivector:
        for substitution, pull_back in self.steps:
            u = substitution.apply_inverse(u, tol) if pull_back else substitution.apply(u)
        return u

    def backward(self, u: Multivector, tol: float = 0.0) -> Multivector:
        for substitution, pull_back in reversed(self.steps):
            u = substitution.apply(u) if pull_back else substitution.apply_inverse(u, tol)
        return u

    def inverse(self) -> "Transport":
        steps = tuple((s, not pull_back) for s, pull_back in reversed(self.steps))
        return Transport(self.family, self.g_to, self.sig_to, self.g_from, self.sig_from, steps)

    def describe(self) -> str:
        return f"{self.g_from.label}{self.sig_from.label()[2:]} -> {self.g_to.label}{self.sig_to.label()[2:]}"

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "from": {"group": self.g_from.value, "p": self.sig_from.p, "q": self.sig_from.q},
            "to": {"group": self.g_to.value, "p": self.sig_to.p, "q": self.sig_to.q},
        }


def group_transport(g_from: GroupId, sig_from, family=None) -> Transport:
    """The isomorphism out of g_from over sig_from, in the requested (or default) family."""
    sig = as_signature(sig_from)
    p, q = sig.p, sig.q
    if family is not None:
        family = TransportFamily(family)
    if g_from in (GroupId.G2I1, GroupId.G2I3):
        to = GroupId.G12 if g_from == GroupId.G2I1 else GroupId.G23
        fam = TransportFamily.G2I1_G12 if g_from == GroupId.G2I1 else TransportFamily.G2I3_G23
        _expect(family, fam)
        return Transport(fam, g_from, sig, to, Signature(q, p), ((imaginary_swap(p, q), True),))
    if g_from in (GroupId.G12, GroupId.G23):
        back = GroupId.G2I1 if g_from == GroupId.G12 else GroupId.G2I3
        return group_transport(back, Signature(q, p), family).inverse()
    if g_from == GroupId.G2:
        if family is None:
            family = TransportFamily.G2_G12_DROP_LAST if q >= 1 else TransportFamily.G2_G12_DROP_FIRST
        if family == TransportFamily.G2_G12_DROP_LAST:
            sub = drop_last(p, q)
            return Transport(family, g_from, sig, GroupId.G12, sub.source, ((sub, True),))
        if family == TransportFamily.G2_G12_DROP_FIRST:
            sub = drop_first(p, q)
            return Transport(family, g_from, sig, GroupId.G12, sub.source, ((sub, True),))
        if family == TransportFamily.G2_G2_SWAP:
            first, last = drop_first(p, q), drop_last(q, p)
            return Transport(family, g_from, sig, GroupId.G2, Signature(q, p), ((first, True), (last, False)))
    raise TransportError(f"no transport family {family.value if family else ''} out of {g_from.label} over {sig.label()}")


def _expect(family, expected: TransportFamily):
    if family is not None and family != expected:
        raise TransportError(f"{family.value} does not start from this group")


def transport_families(sig) -> list:
    """(group, family) pairs that apply over sig."""
    sig = as_signature(sig)
    out = [(GroupId.G2I1, TransportFamily.G2I1_G12), (GroupId.G2I3, TransportFamily.G2I3_G23)]
    if sig.q >= 1:
        out.append((GroupId.G2, TransportFamily.G2_G12_DROP_LAST))
    if sig.p >= 1:
        out.append((GroupId.G2, TransportFamily.G2_G12_DROP_FIRST))
        out.append((GroupId.G2, TransportFamily.G2_G2_SWAP))
    return out


def verify_transport(g_from: GroupId, sig, family=None, samples=None, seed=None) -> Report:
    """Members map to members in both directions, and the maps invert each other."""
    transport = group_transport(g_from, sig, family)
    failures = []
    forward_checked = backward_checked = 0
    for sample in sample_exact(transport.g_from, transport.sig_from, samples, seed):
        image = transport.forward(sample.value)
        forward_checked += 1
        if not is_member(transport.g_to, image):
            failures.append({"direction": "forward", "factors": list(sample.factors)})
        elif transport.backward(image) != sample.value.to_ring(transport.g_from.ring):
            failures.append({"direction": "round-trip", "factors": list(sample.factors)})
    for sample in sample_exact(transport.g_to, transport.sig_to, samples, seed):
        preimage = transport.backward(sample.value)
        backward_checked += 1
        if not is_member(transport.g_from, preimage):
            failures.append({"direction": "backward", "factors": list(sample.factors)})
    identity = Multivector.scalar(transport.sig_from, 1, transport.g_from.ring)
    identity_ok = transport.forward(identity) == Multivector.scalar(transport.sig_to, 1, transport.g_to.ring)
    return check(
        "transport-membership",
        not failures and identity_ok,
        signature=(transport.sig_from.p, transport.sig_from.q),
        group=transport.g_from.label,
        seed=seed,
        transport=transport.to_dict(),
        forward_checked=forward_checked,
        backward_checked=backward_checked,
        identity_ok=identity_ok,
        failures=failures[:5],
    )
