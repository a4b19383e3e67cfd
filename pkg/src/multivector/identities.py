"""
Identities Module

Exhaustive check that the Hermitian conjugate of a blade (and of i times a
blade) is reproduced by conjugating its pseudo-Hermitian conjugate, or that
of its grade involution, with the blade of the positive or negative generators.
"""

import logging

from ..errors import SignatureError
from ..reports import Report, check
from ..scalars import ComplexRational, Ring
from .multivector import Multivector
from .signature import Signature, as_signature, blade_label

logger = logging.getLogger(__name__)

MAX_REPORTED_FAILURES = 5


def dagger_cases(sig: Signature) -> list:
    """(name, conjugating blade mask, uses grade involution) for every applicable case.

    U^dagger = e_S X e^S, where e_S = (e^S)^{-1} and X is U-double-dagger or
    the double dagger of U-hat depending on the parity of |S|.
    """
    cases = []
    if sig.p:
        cases.append(("positive-block", sig.positive_block, sig.p % 2 == 0))
    if sig.q:
        cases.append(("negative-block", sig.negative_block, sig.q % 2 == 1))
    return cases


def conjugate_by_blade(x: Multivector, mask: int) -> Multivector:
    """(e^S)^{-1} X e^S."""
    e = Multivector.blade(x.sig, mask, ring=x.ring)
    return e.hermitian_conjugate() * x * e


def distinct_element(sig: Signature) -> Multivector:
    """Sum of (A+1 + (A+2)i) e^A over every blade; no two coefficients agree up to sign."""
    return Multivector.from_array(
        sig, (ComplexRational(a + 1, a + 2) for a in range(sig.dimension)), Ring.COMPLEX_RATIONAL
    )


def verify_dagger_identities(sig) -> list:
    """One report per applicable case, each covering U = e^A and U = i e^A for every blade A.

    Both sides are real-linear and send e^A to a multiple of e^A, so one
    element with distinct complex coefficients on every blade checks all
    blades and both units at once.
    """
    sig = as_signature(sig)
    if sig.n < 1:
        raise SignatureError("the dagger identities need n >= 1")
    reports = []
    u = distinct_element(sig)
    expected = u.hermitian_conjugate()
    for name, mask, with_hat in dagger_cases(sig):
        inner = u.grade_involution() if with_hat else u
        rhs = conjugate_by_blade(inner.pseudo_hermitian(), mask)
        failures = [
            {"blade": blade_label(a, sig.n), "expected": str(x), "got": str(y)}
            for a, (x, y) in enumerate(zip(expected.coeffs, rhs.coeffs))
            if x != y
        ]
        if failures:
            logger.warning(f"{sig.label()} dagger identity {name} failed on {len(failures)} blades")
        reports.append(check(
            "dagger-pseudo-hermitian",
            not failures,
            signature=(sig.p, sig.q),
            case=name,
            conjugator=blade_label(mask, sig.n),
            grade_involution=with_hat,
            checked=2 * sig.dimension,
            failures=failures[:MAX_REPORTED_FAILURES],
        ))
    return reports


def dagger_identity_report(sig) -> Report:
    """All cases of verify_dagger_identities folded into a single report."""
    sig = as_signature(sig)
    reports = verify_dagger_identities(sig)
    return check(
        "dagger-pseudo-hermitian",
        all(r.passed for r in reports),
        signature=(sig.p, sig.q),
        cases={r.details["case"]: r.status.value for r in reports},
    )
