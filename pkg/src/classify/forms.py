"""
Invariant Forms

For G23 and G12 the defining equation turns into a matrix equation

    beta(U)^d beta(F) beta(U) = beta(F)

for a basis blade F and a matrix anti-involution d (transpose, complex or
quaternionic conjugate transpose). Conjugating by F trades the Clifford
conjugation for the one beta carries to d, which is why the choice of F
runs on the parities of p and q and on the additional signature (k, l).

When no such F exists (the full linear cases) the equation is twisted:
beta(U-hat)^d beta(F) beta(U) = beta(F). The other groups reach G12 or
G23 through a transport first.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from ..errors import InvariantBreachError
from ..groups import GroupId, TransportFamily, group_transport
from ..matrices import Flavor
from ..multivector import Signature, as_signature, blade_label
from ..representation import RepClass, additional_signature, get_representation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FormSpec:
    group: GroupId
    sig: Signature
    target_group: GroupId
    target_sig: Signature
    blade: int
    flavor: Flavor
    twisted: bool = False
    rule: str = ""
    transport: Optional[TransportFamily] = None

    @property
    def blade_label(self) -> str:
        return blade_label(self.blade, self.target_sig.n) if self.blade else "e"

    def describe(self) -> str:
        lhs = "beta(U-hat)" if self.twisted else "beta(U)"
        out = f"{lhs}^{self.flavor.value} beta({self.blade_label}) beta(U) = beta({self.blade_label})"
        if self.transport is not None:
            out += f" over {self.target_group.label}{self.target_sig.label()[2:]} via {self.transport.value}"
        return out

    def to_dict(self) -> dict:
        return {
            "group": self.group.value,
            "signature": [self.sig.p, self.sig.q],
            "target_group": self.target_group.value,
            "target_signature": [self.target_sig.p, self.target_sig.q],
            "blade": self.blade_label,
            "flavor": self.flavor.value,
            "twisted": self.twisted,
            "rule": self.rule,
            "transport": self.transport.value if self.transport else None,
        }


def _range_mask(first: int, last: int) -> int:
    """Mask of e^{first..last}, 1-based and inclusive; 0 when empty."""
    return sum(1 << (a - 1) for a in range(first, last + 1))


def _transpose_blade(sig: Signature, symmetric_parity: int, skew_parity: int) -> tuple:
    """F built from symmetric (k of parity symmetric_parity) or skew (l of parity skew_parity) generators."""
    rep = get_representation(sig)
    kl = additional_signature(rep)
    if kl.k % 2 == symmetric_parity:
        return kl.symmetric_mask, f"k={kl.k}: product of symmetric generators, transpose"
    if kl.l % 2 == skew_parity:
        return kl.skew_mask, f"l={kl.l}: product of skew generators, transpose"
    raise InvariantBreachError(
        f"{sig.label()}: additional signature ({kl.k},{kl.l}) admits no transpose form"
    )


def _direct_spec(g: GroupId, sig: Signature) -> tuple:
    """(blade, flavor, twisted, rule) for G23 or G12 over sig."""
    p, q, n = sig.p, sig.q, sig.n
    rep_class = RepClass.of(sig)
    flavor = rep_class.flavor
    complex_class = rep_class == RepClass.COMPLEX
    positive, negative = _range_mask(1, p), _range_mask(p + 1, n)
    if g == GroupId.G23:
        if q == 0:
            return 0, flavor, False, "q=0: U-dagger = U-tilde"
        if p % 2 == 1:
            return positive, flavor, False, "p odd: conjugate by e^{1..p}"
        if q % 2 == 0:
            return negative, flavor, False, "q even: conjugate by e^{p+1..n}"
        if complex_class:
            blade, rule = _transpose_blade(sig, 1, 0)
            return blade, Flavor.TRANSPOSE, False, rule
        return positive, flavor, True, "p even, q odd: full linear group, twisted by U-hat"
    if p % 2 == 0:
        return positive, flavor, False, "p even: conjugate by e^{1..p}"
    if q % 2 == 1:
        return negative, flavor, False, "q odd: conjugate by e^{p+1..n}"
    if complex_class:
        blade, rule = _transpose_blade(sig, 0, 1)
        return blade, Flavor.TRANSPOSE, False, rule
    return positive, flavor, True, "p odd, q even: full linear group, twisted by U-hat"


def form_spec(g, sig) -> FormSpec:
    """The invariant form whose preservation is equivalent to membership in g."""
    g = GroupId.parse(g) if isinstance(g, str) else g
    sig = as_signature(sig)
    target_group, target_sig, family = g, sig, None
    if g in (GroupId.G2I1, GroupId.G2I3) or (g.is_even and sig.n > 0):
        source = GroupId.G2 if g == GroupId.SPIN_PLUS else g
        transport = group_transport(source, sig)
        target_group, target_sig, family = transport.g_to, transport.sig_to, transport.family
    elif g.is_even:
        # Cl(0,0): every group is {e, -e}
        target_group = GroupId.G23
    blade, flavor, twisted, rule = _direct_spec(target_group, target_sig)
    spec = FormSpec(g, sig, target_group, target_sig, blade, flavor, twisted, rule, family)
    logger.debug(f"{g.label} over {sig.label()}: {spec.describe()}")
    return spec
