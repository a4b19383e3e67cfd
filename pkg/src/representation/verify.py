"""
Representation Verification Module

Blade-exhaustive checks that tie the Hermitian conjugate of Cl_{p,q} to the
matrix adjoint of its representation, and the additional signature (k, l)
to its periodic table.
"""

import logging
from typing import Optional

from ..errors import ConstructionError
from ..matrices import Flavor
from ..multivector import Multivector, Signature, blade_label
from ..reports import Report, Status, check
from ..scalars import ComplexRational, Ring
from .builder import check_clifford_relations
from .cache import get_representation
from .representation import RepClass, Representation, additional_signature, represent, unrepresent

logger = logging.getLogger(__name__)

MAX_REPORTED_FAILURES = 5

# (k mod 4, l mod 4) allowed for each n mod 8
ADDITIONAL_SIGNATURE_TABLE = {
    0: {(0, 0), (1, 3)},
    1: {(1, 0)},
    2: {(1, 1), (2, 0)},
    3: {(2, 1)},
    4: {(3, 1), (2, 2)},
    5: {(3, 2)},
    6: {(3, 3), (0, 2)},
    7: {(0, 3)},
}

ADDITIONAL_SIGNATURE_SPOT_VALUES = {(1, 2): (2, 1), (3, 0): (2, 1), (2, 3): (3, 2)}


def verify_clifford_relations(rep: Representation) -> Report:
    try:
        check_clifford_relations(rep)
        ok, error = True, None
    except ConstructionError as e:
        ok, error = False, str(e)
    return check("clifford-relations", ok, signature=(rep.sig.p, rep.sig.q),
                 size=rep.size, ring=rep.ring.value, error=error)


def verify_relat(rep: Representation) -> Report:
    """beta(U^dagger) equals the class adjoint of beta(U) on every blade."""
    sig = rep.sig
    flavor = rep.rep_class.flavor
    failures = []
    for a in range(sig.dimension):
        if flavor.apply(rep.blade_image(a)) != rep.blade_inverse_image(a):
            failures.append(blade_label(a, sig.n))
    if failures:
        logger.warning(f"{sig.label()}: dagger/adjoint mismatch on {len(failures)} blades")
    return check(
        "dagger-matrix-adjoint",
        not failures,
        signature=(sig.p, sig.q),
        flavor=flavor.value,
        checked=sig.dimension,
        failures=failures[:MAX_REPORTED_FAILURES],
    )


def _conjugated(u: Multivector, mask: int, with_hat: bool) -> Multivector:
    """(e^S)^{-1} X e^S with X the reversion (or Clifford conjugate) of U."""
    x = u.clifford_conjugate() if with_hat else u.reversion()
    e = Multivector.blade(u.sig, mask, ring=u.ring)
    return e.hermitian_conjugate() * x * e


def _case_failures(rep: Representation, flavor: Flavor, mask: int, with_hat: bool,
                   complex_units: bool = False) -> tuple:
    """Compare flavor(beta(U)) with beta((e^S)^{-1} X e^S) over all blades U = e^A.

    Real blades are also pulled back through unrepresent; complex units are
    compared at the matrix level only.
    """
    sig = rep.sig
    failures = []
    checked = 0
    for a in range(sig.dimension):
        u = Multivector.blade(sig, a)
        rhs = _conjugated(u, mask, with_hat)
        target = flavor.apply(rep.blade_image(a))
        checked += 1
        if represent(rep, rhs) != target:
            failures.append({"blade": blade_label(a, sig.n), "reason": "matrix"})
            continue
        if unrepresent(rep, target) != rhs:
            failures.append({"blade": blade_label(a, sig.n), "reason": "inverse"})
            continue
        if complex_units:
            i = ComplexRational(0, 1)
            u_i = Multivector.blade(sig, a, i, Ring.COMPLEX_RATIONAL)
            rhs_i = _conjugated(u_i, mask, with_hat)
            checked += 1
            if represent(rep, rhs_i) != flavor.apply(represent(rep, u_i)):
                failures.append({"blade": blade_label(a, sig.n), "unit": "i", "reason": "matrix"})
    return checked, failures


def conjugation_cases(sig: Signature) -> list:
    """(name, conjugating mask, uses Clifford conjugate) for the block identities."""
    cases = []
    if sig.p:
        cases.append(("positive-block", sig.positive_block, sig.p % 2 == 0))
    if sig.q:
        cases.append(("negative-block", sig.negative_block, sig.q % 2 == 1))
    return cases


def transpose_cases(rep: Representation) -> list:
    """Cases built from the symmetric (b) and skew (c) generator blocks."""
    addsig = additional_signature(rep)
    cases = []
    if addsig.k:
        cases.append(("symmetric-block", addsig.symmetric_mask, addsig.k % 2 == 0))
    if addsig.l:
        cases.append(("skew-block", addsig.skew_mask, addsig.l % 2 == 1))
    return cases


def verify_conjugation_identities(rep: Representation) -> list:
    """Reports for the class adjoint identities and the transpose identity.

    The class adjoint of beta(U) is reproduced by conjugating U-tilde (or its
    Clifford conjugate) with a block of positive or negative generators. The
    plain transpose is reproduced the same way from the symmetric/skew blocks;
    for quaternionic classes it has to break somewhere, and the report then
    carries the counterexample as a witness.
    """
    sig = rep.sig
    flavor = rep.rep_class.flavor
    reports = []
    for name, mask, with_hat in conjugation_cases(sig):
        checked, failures = _case_failures(rep, flavor, mask, with_hat)
        reports.append(check(
            "reversion-conjugation",
            not failures,
            signature=(sig.p, sig.q),
            case=name,
            flavor=flavor.value,
            conjugator=blade_label(mask, sig.n),
            clifford_conjugate=with_hat,
            checked=checked,
            failures=failures[:MAX_REPORTED_FAILURES],
        ))
    reports.append(verify_transpose_identity(rep))
    return reports


def verify_transpose_identity(rep: Representation) -> Report:
    sig = rep.sig
    cases = transpose_cases(rep)
    complex_units = rep.rep_class == RepClass.COMPLEX
    outcomes = {}
    counterexample = None
    checked_total = 0
    for name, mask, with_hat in cases:
        checked, failures = _case_failures(rep, Flavor.TRANSPOSE, mask, with_hat, complex_units)
        checked_total += checked
        outcomes[name] = len(failures)
        if failures and counterexample is None:
            counterexample = {"case": name, "conjugator": blade_label(mask, sig.n), **failures[0]}
    quaternionic = rep.ring == Ring.QUATERNION
    details = {
        "cases": outcomes,
        "checked": checked_total,
        "additional_signature": additional_signature(rep).to_dict(),
        "expected_to_hold": not quaternionic,
    }
    if quaternionic:
        status = Status.WITNESS if counterexample else Status.PASS
        details["counterexample"] = counterexample
    else:
        status = Status.FAIL if counterexample else Status.PASS
        details["failure"] = counterexample
    return Report("transpose-additional-signature", status, signature=(sig.p, sig.q), details=details)


def verify_additional_signature_table(n_max: int, n_min: int = 1) -> list:
    """(k, l) of every complex-class signature with n_min <= n <= n_max against the table."""
    reports = []
    for n in range(n_min, n_max + 1):
        for p in range(n + 1):
            sig = Signature(p, n - p)
            if sig.diff_mod8 not in (3, 7):
                continue
            reports.append(additional_signature_report(sig))
    return reports


def additional_signature_report(sig) -> Report:
    rep = get_representation(sig)
    addsig = additional_signature(rep)
    sig = rep.sig
    allowed = ADDITIONAL_SIGNATURE_TABLE[sig.n % 8]
    in_table = (addsig.k % 4, addsig.l % 4) in allowed
    parity_ok = True
    if sig.p % 2 == 0 and sig.q % 2 == 1:
        parity_ok = addsig.k % 2 == 1 and addsig.l % 2 == 0
    spot: Optional[tuple] = ADDITIONAL_SIGNATURE_SPOT_VALUES.get((sig.p, sig.q))
    spot_ok = spot is None or spot == (addsig.k, addsig.l)
    return check(
        "additional-signature-table",
        in_table and parity_ok and spot_ok,
        signature=(sig.p, sig.q),
        k=addsig.k,
        l=addsig.l,
        allowed=sorted(list(x) for x in allowed),
        parity_ok=parity_ok,
        spot_value=list(spot) if spot else None,
    )


__all__ = [
    "ADDITIONAL_SIGNATURE_SPOT_VALUES",
    "ADDITIONAL_SIGNATURE_TABLE",
    "additional_signature_report",
    "verify_additional_signature_table",
    "verify_clifford_relations",
    "verify_conjugation_identities",
    "verify_relat",
    "verify_transpose_identity",
]
