"""
Spin Module

Spin+ against G2, the vee group of signed basis blades, and the unitary
group of the complexified algebra.

Up to n = 5 every G2 element preserves the vectors under conjugation, so
G2 and Spin+ coincide there. From n = 6 on, the pseudoscalar-like blade
e^{1..6} lies in the Lie algebra of G2 but anticommutes with e^1, and
(a + b e^{1..6})/c leaks grade 5 when conjugating e^1.
"""

import logging
import os
import sys

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))
import config

from ..errors import SignatureError
from ..multivector import Multivector, as_signature, blade_label, blade_product, inverse_sign, square_sign
from ..reports import Report, Status, check
from .definitions import ALL_GROUPS, FIVE_GROUPS, GroupId, algebra_element, is_member, preserves_vectors
from .sampling import exponential, rotor, sample_exact, sample_exponential

logger = logging.getLogger(__name__)

SPIN_COINCIDENCE_N_MAX = 5
WITNESS_GRADE = 6
WITNESS_SEARCH_TRIALS = 16


# ----------------------------------------------------------------------
# Spin+ and G2

def leaked_grades(u: Multivector, tol: float = 0.0) -> dict:
    """Grades other than 1 in U e^a U-tilde, per generator a that leaks."""
    inverse = u.reversion()
    out = {}
    for a in range(1, u.sig.n + 1):
        image = u * Multivector.vector(u.sig, a, ring=u.ring) * inverse
        extra = sorted(g for g in image.grades(tol) if g != 1)
        if extra:
            out[a] = extra
    return out


def spin_witness(sig) -> tuple:
    """Exact G2 element (a e + b e^{1..6})/c that is not in Spin+; n >= 6."""
    sig = as_signature(sig)
    if sig.n < WITNESS_GRADE:
        raise SignatureError(f"no grade-{WITNESS_GRADE} blade in {sig.label()}")
    mask = (1 << WITNESS_GRADE) - 1
    mu = square_sign(mask, sig)
    triple = config.CIRCULAR_TRIPLES[0] if mu < 0 else config.HYPERBOLIC_TRIPLES[0]
    x = Multivector.blade(sig, mask, 1, GroupId.G2.ring)
    return rotor(x, mu, triple), triple


def _numeric_witness(sig, seed: int, tol: float) -> dict:
    """Search exp(theta e^{1..6}) over seeded theta for a float member that leaks."""
    rng = np.random.default_rng(seed)
    mask = (1 << WITNESS_GRADE) - 1
    for trial in range(WITNESS_SEARCH_TRIALS):
        theta = float(rng.uniform(0.1, 1.5))
        u = exponential(algebra_element(GroupId.G2, sig, {mask: theta}, ring=GroupId.G2.float_ring))
        if is_member(GroupId.G2, u, tol) and not preserves_vectors(u, tol):
            return {"found": True, "trial": trial, "theta": theta, "leaks": leaked_grades(u, tol)}
    return {"found": False, "trials": WITNESS_SEARCH_TRIALS}


def _subgroup_failures(samples, tol: float) -> list:
    """Spin+ members that fail one of the five defining equations."""
    failures = []
    for sample in samples:
        for g in FIVE_GROUPS:
            u = sample.value.promote(g.float_ring if not sample.value.ring.is_exact else g.ring)
            if not is_member(g, u, tol):
                failures.append({"group": g.label, "index": sample.index, "provenance": sample.provenance.value})
    return failures


def spin_g2_comparison(sig, samples=None, seed=None, tol=None) -> Report:
    """Compare G2 with Spin+ over sig.

    Up to n = 5 every sampled G2 element must preserve grade 1; the same
    samples must satisfy all five defining equations. From n = 6 the report
    carries an exact witness and has status witness.
    """
    sig = as_signature(sig)
    seed = config.DEFAULT_SEED if seed is None else seed
    tol = config.MEMBERSHIP_TOL if tol is None else tol
    signature = (sig.p, sig.q)

    if sig.n >= WITNESS_GRADE:
        u, triple = spin_witness(sig)
        member = is_member(GroupId.G2, u)
        leaks = leaked_grades(u)
        numeric = _numeric_witness(sig, seed, tol)
        found = member and bool(leaks)
        if found:
            logger.info(f"{sig.label()}: G2 element outside Spin+ with triple {triple}")
        else:
            logger.warning(f"{sig.label()}: witness candidate did not separate G2 from Spin+")
        return Report(
            claim="spin-g2-comparison",
            status=Status.WITNESS if found else Status.FAIL,
            signature=signature,
            group=GroupId.G2.label,
            seed=seed,
            details={
                "coincide": False,
                "witness": {
                    "value": u.to_dict(),
                    "blade": blade_label((1 << WITNESS_GRADE) - 1, sig.n),
                    "triple": list(triple),
                    "in_g2": member,
                    "leaks": {str(a): grades for a, grades in leaks.items()},
                },
                "numeric": numeric,
            },
        )

    exact = sample_exact(GroupId.G2, sig, samples, seed)
    floats = sample_exponential(GroupId.G2, sig, samples, seed, tol)
    failures = []
    for sample in exact + floats:
        sample_tol = 0.0 if sample.value.ring.is_exact else tol
        if not preserves_vectors(sample.value, sample_tol):
            failures.append({
                "index": sample.index,
                "provenance": sample.provenance.value,
                "leaks": {str(a): g for a, g in leaked_grades(sample.value, sample_tol).items()},
            })
    subgroup = _subgroup_failures(exact + floats, tol)
    return check(
        "spin-g2-comparison",
        not failures and not subgroup,
        signature=signature,
        group=GroupId.G2.label,
        seed=seed,
        coincide=True,
        exact_samples=len(exact),
        exponential_samples=len(floats),
        failures=failures[:5],
        subgroup_failures=subgroup[:5],
    )


def spin_subgroup_report(sig, samples=None, seed=None, tol=None) -> Report:
    """Spin+ samples must satisfy all five defining equations, at every n."""
    sig = as_signature(sig)
    seed = config.DEFAULT_SEED if seed is None else seed
    tol = config.MEMBERSHIP_TOL if tol is None else tol
    exact = sample_exact(GroupId.SPIN_PLUS, sig, samples, seed)
    floats = sample_exponential(GroupId.SPIN_PLUS, sig, samples, seed, tol)
    failures = _subgroup_failures(exact + floats, tol)
    if failures:
        logger.warning(f"{sig.label()}: {len(failures)} Spin+ samples outside one of the five groups")
    return check(
        "spin-subgroup",
        not failures,
        signature=(sig.p, sig.q),
        group=GroupId.SPIN_PLUS.label,
        seed=seed,
        exact_samples=len(exact),
        exponential_samples=len(floats),
        groups=[g.label for g in FIVE_GROUPS],
        failures=failures[:5],
    )


# ----------------------------------------------------------------------
# Vee group

def vee_elements(sig) -> list:
    """(sign, mask) for the 2^{n+1} signed basis blades."""
    sig = as_signature(sig)
    return [(sign, mask) for mask in range(sig.dimension) for sign in (1, -1)]


def vee_product(x: tuple, y: tuple, sig) -> tuple:
    sign, mask = blade_product(x[1], y[1], sig)
    return x[0] * y[0] * sign, mask


def vee_inverse(x: tuple, sig) -> tuple:
    return x[0] * inverse_sign(x[1], sig), x[1]


def vee_label(x: tuple, n: int) -> str:
    return ("-" if x[0] < 0 else "") + (blade_label(x[1], n) if x[1] else "e")


def vee_membership(sig) -> dict:
    """Group label -> labels of the vee elements satisfying its defining equation."""
    sig = as_signature(sig)
    table = {}
    for g in ALL_GROUPS:
        members = []
        for x in vee_elements(sig):
            if is_member(g, Multivector.blade(sig, x[1], x[0], g.ring)):
                members.append(vee_label(x, sig.n))
        table[g.label] = members
    return table


def vee_group(sig, seed=None, trials: int = 200) -> Report:
    """Order, closure, identity, inverses and sampled associativity of the vee group."""
    sig = as_signature(sig)
    seed = config.DEFAULT_SEED if seed is None else seed
    elements = vee_elements(sig)
    element_set = set(elements)
    identity = (1, 0)

    closure_ok = True
    for x in elements:
        for y in elements:
            if vee_product(x, y, sig) not in element_set:
                closure_ok = False
                break
        if not closure_ok:
            break

    identity_ok = all(vee_product(identity, x, sig) == x == vee_product(x, identity, sig) for x in elements)
    inverses_ok = all(
        vee_product(x, vee_inverse(x, sig), sig) == identity == vee_product(vee_inverse(x, sig), x, sig)
        for x in elements
    )

    # the signed-blade product must agree with the algebra product
    rng = np.random.default_rng(seed)
    product_ok = associative_ok = True
    for _ in range(trials):
        x, y, z = (elements[int(i)] for i in rng.integers(len(elements), size=3))
        direct = Multivector.blade(sig, x[1], x[0]) * Multivector.blade(sig, y[1], y[0])
        sign, mask = vee_product(x, y, sig)
        if direct != Multivector.blade(sig, mask, sign):
            product_ok = False
        if vee_product(vee_product(x, y, sig), z, sig) != vee_product(x, vee_product(y, z, sig), sig):
            associative_ok = False

    order_ok = len(element_set) == 2 ** (sig.n + 1)
    membership = vee_membership(sig)
    return check(
        "vee-group",
        order_ok and closure_ok and identity_ok and inverses_ok and product_ok and associative_ok,
        signature=(sig.p, sig.q),
        seed=seed,
        order=len(element_set),
        closure=closure_ok,
        identity=identity_ok,
        inverses=inverses_ok,
        product_agrees=product_ok,
        associative=associative_ok,
        membership_counts={g: len(m) for g, m in membership.items()},
        membership=membership if sig.n <= 4 else None,
    )


# ----------------------------------------------------------------------
# Unitary group

def is_unitary(u: Multivector, tol: float = 0.0) -> bool:
    """U-dagger U = e."""
    product = u.hermitian_conjugate() * u
    e = Multivector.scalar(u.sig, 1, product.ring)
    return product == e if u.ring.is_exact else product.is_close(e, tol)


def unitary_counterpart(sig) -> GroupId:
    """The real group whose equation U-dagger U = e reduces to over sig."""
    sig = as_signature(sig)
    if sig.q == 0:
        return GroupId.G23
    if sig.p == 0:
        return GroupId.G12
    raise SignatureError(f"U-dagger U = e matches no single group over the mixed signature {sig.label()}")


def verify_unitary_coincidence(sig, samples=None, seed=None) -> Report:
    """On real elements the unitary equation agrees with G23 at (n,0) and G12 at (0,n)."""
    sig = as_signature(sig)
    g = unitary_counterpart(sig)
    mismatches = []
    for x in vee_elements(sig):
        u = Multivector.blade(sig, x[1], x[0])
        if is_unitary(u) != is_member(g, u):
            mismatches.append(vee_label(x, sig.n))
    sample_failures = [s.index for s in sample_exact(g, sig, samples, seed) if not is_unitary(s.value)]
    return check(
        "unitary-coincidence",
        not mismatches and not sample_failures,
        signature=(sig.p, sig.q),
        group=g.label,
        seed=seed,
        vee_mismatches=mismatches[:10],
        sample_failures=sample_failures[:10],
    )
