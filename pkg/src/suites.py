"""
Verification Suites

Each scope runs one family of checks over every signature with n <= n_max.
Per-signature work items are top-level functions of picklable arguments so
they can fan out over a process pool; every worker keeps its own
representation cache.
"""

import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
import config

from src.classify import cross_check_tables, signatures_up_to, verify_classification
from src.groups import (
    ALL_GROUPS,
    algebra_closure_check,
    bracket_closure_check,
    lie_algebra_dimension,
    spin_g2_comparison,
    spin_subgroup_report,
    transport_families,
    vee_group,
    verify_transport,
    verify_unitary_coincidence,
)
from src.multivector import Signature, dagger_identity_report
from src.reports import Report, Status, check
from src.representation import get_representation
from src.representation.verify import (
    additional_signature_report,
    verify_clifford_relations,
    verify_conjugation_identities,
    verify_relat,
)

logger = logging.getLogger(__name__)

SPIN_DIVERGENCE_N = 6
QUATERNIONIC_RESIDUES = (4, 5, 6)


def _relat(sig: Signature, seed: int, samples: int) -> list:
    rep = get_representation(sig)
    return [verify_clifford_relations(rep), verify_relat(rep)]


def _conjugation(sig: Signature, seed: int, samples: int) -> list:
    if sig.n == 0:
        return []
    return [dagger_identity_report(sig), *verify_conjugation_identities(get_representation(sig))]


def _addsig(sig: Signature, seed: int, samples: int) -> list:
    if sig.n == 0 or sig.diff_mod8 not in (3, 7):
        return []
    return [additional_signature_report(sig)]


def _brackets(sig: Signature, seed: int, samples: int) -> list:
    if sig.n == 0:
        return []
    reports = bracket_closure_check(sig, seed=seed)
    reports.extend(algebra_closure_check(g, sig, seed=seed) for g in ALL_GROUPS)
    return reports


def _spin(sig: Signature, seed: int, samples: int) -> list:
    return [spin_g2_comparison(sig, samples, seed), spin_subgroup_report(sig, samples, seed)]


def _classification(sig: Signature, seed: int, samples: int) -> list:
    return [verify_classification(g, sig, samples, seed) for g in ALL_GROUPS]


def _transport(sig: Signature, seed: int, samples: int) -> list:
    return [verify_transport(g, sig, family, samples, seed) for g, family in transport_families(sig)]


def _vee(sig: Signature, seed: int, samples: int) -> list:
    reports = [vee_group(sig, seed)]
    if sig.n > 0 and (sig.p == 0 or sig.q == 0):
        reports.append(verify_unitary_coincidence(sig, samples, seed))
    return reports


def dimension_reports(n_max: int) -> list:
    """Binomial sum against exact closed form for every Lie algebra, 1 <= n <= n_max."""
    reports = []
    for n in range(1, n_max + 1):
        mismatches = {}
        values = {}
        for g in ALL_GROUPS:
            binomial, closed = lie_algebra_dimension(g, n)
            values[g.label] = binomial
            if closed != binomial:
                mismatches[g.label] = {"binomial": binomial, "closed_form": str(closed)}
        reports.append(check("dimension-closed-form", not mismatches, n=n, dimensions=values, mismatches=mismatches))
    return reports


def _transpose_witness(reports: list) -> Report:
    """Some quaternionic signature must break the transpose identity."""
    candidates = [
        r for r in reports
        if r.claim == "transpose-additional-signature" and (r.signature[0] - r.signature[1]) % 8 in QUATERNIONIC_RESIDUES
    ]
    found = [r for r in candidates if r.status == Status.WITNESS]
    vacuous = not candidates
    return check(
        "transpose-counterexample",
        vacuous or bool(found),
        vacuous=vacuous,
        signatures=[list(r.signature) for r in found],
    )


def _spin_witness(reports: list, n_max: int) -> Report:
    """At n = 6 some G2 element must leave the vector subspace."""
    found = [r for r in reports if r.status == Status.WITNESS and r.signature and sum(r.signature) == SPIN_DIVERGENCE_N]
    vacuous = n_max < SPIN_DIVERGENCE_N
    return check(
        "spin-divergence-witness",
        vacuous or bool(found),
        vacuous=vacuous,
        signatures=[list(r.signature) for r in found],
    )


PER_SIGNATURE: dict[str, Callable] = {
    "relat": _relat,
    "conjugation": _conjugation,
    "addsig": _addsig,
    "brackets": _brackets,
    "spin": _spin,
    "classification": _classification,
    "transport": _transport,
    "vee": _vee,
}

DEFAULT_N_MAX = {
    "relat": config.EXHAUSTIVE_N_MAX,
    "conjugation": config.EXHAUSTIVE_N_MAX,
    "addsig": config.EXHAUSTIVE_N_MAX,
    "vee": config.EXHAUSTIVE_N_MAX,
    "brackets": config.SAMPLED_N_MAX,
    "spin": config.SAMPLED_N_MAX,
    "classification": config.SAMPLED_N_MAX,
    "transport": config.SAMPLED_N_MAX,
    "dims": config.DIMENSION_N_MAX,
    "tables": config.DIMENSION_N_MAX,
}

SCOPES = tuple(DEFAULT_N_MAX) + ("all",)


def run_signature(scope: str, p: int, q: int, seed: int, samples: int) -> list:
    """One work item: every check of scope over Cl(p,q)."""
    sig = Signature(p, q)
    logger.debug(f"{scope}: {sig.label()}")
    return PER_SIGNATURE[scope](sig, seed, samples)


def _run_per_signature(scope: str, n_max: int, seed: int, samples: int, jobs: int,
                       progress: Optional[Callable] = None) -> list:
    signatures = signatures_up_to(n_max)
    items = [(scope, sig.p, sig.q, seed, samples) for sig in signatures]
    reports = []
    if jobs <= 1:
        for i, item in enumerate(items, 1):
            reports.extend(run_signature(*item))
            if progress:
                progress(i, len(items), scope, signatures[i - 1])
        return reports
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for i, result in enumerate(pool.map(run_signature, *zip(*items)), 1):
            reports.extend(result)
            if progress:
                progress(i, len(items), scope, signatures[i - 1])
    return reports


def run_suite(scope: str, n_max: Optional[int] = None, seed: Optional[int] = None,
              samples: Optional[int] = None, jobs: Optional[int] = None,
              progress: Optional[Callable] = None) -> list:
    """Reports of one scope (or of every scope for 'all'), in signature order."""
    if scope == "all":
        reports = []
        for name in DEFAULT_N_MAX:
            limit = DEFAULT_N_MAX[name] if n_max is None else min(n_max, DEFAULT_N_MAX[name])
            reports.extend(run_suite(name, limit, seed, samples, jobs, progress))
        return reports
    if scope not in DEFAULT_N_MAX:
        raise ValueError(f"unknown scope '{scope}'")
    n_max = DEFAULT_N_MAX[scope] if n_max is None else n_max
    seed = config.DEFAULT_SEED if seed is None else seed
    samples = config.DEFAULT_SAMPLES if samples is None else samples
    jobs = (os.cpu_count() or 1) if jobs is None else jobs

    if scope == "dims":
        return dimension_reports(n_max)
    if scope == "tables":
        return cross_check_tables(n_max)
    if scope in ("relat", "conjugation", "addsig", "vee"):
        n_max = min(n_max, config.MAX_N)

    reports = _run_per_signature(scope, n_max, seed, samples, jobs, progress)
    if scope == "conjugation":
        reports.append(_transpose_witness(reports))
    elif scope == "spin":
        reports.append(_spin_witness(reports, n_max))
    logger.info(f"{scope}: {len(reports)} reports for n <= {n_max}")
    return reports
