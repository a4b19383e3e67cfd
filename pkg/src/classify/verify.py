"""
Classification Verification

Three checks back each table entry:

a. every sampled group element preserves the invariant form, exactly for
   exact samples and within tolerance for exponential ones;
b. the form matrix carries the flags of the named family (symmetric for
   orthogonal groups, skew for symplectic ones, ...);
c. the Lie algebra dimension matches the real dimension of the named group.

Full linear cases in block form also check the relation between the
diagonal blocks of beta(U) and beta(U-hat).
"""

import logging
import os
import sys
from typing import Optional

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))
import config

from ..groups import GroupId, binomial_dimension, sample_exact, sample_exponential, group_transport
from ..matrices import FormMatrix, classify_form
from ..multivector import Multivector, as_signature
from ..reports import Report, check
from ..representation import Representation, get_representation, represent
from .forms import FormSpec, form_spec
from .names import Family, MatrixGroupName
from .tables import classify

logger = logging.getLogger(__name__)


def flags_consistent(name: MatrixGroupName, spec: FormSpec, form: FormMatrix) -> bool:
    """Necessary conditions on beta(F) for the named family."""
    family = name.family
    if family.is_compact:
        return form.is_identity
    if family.is_linear:
        return spec.twisted and form.square_sign in (1, -1)
    if spec.twisted:
        return False
    if family == Family.O_REAL_INDEF:
        return form.is_symmetric and form.trace_zero
    if family in (Family.O_C,):
        return form.is_symmetric
    if family in (Family.SP_REAL, Family.SP_C):
        return form.is_skew
    if family == Family.U_INDEF:
        return form.is_unitary_like and form.trace_zero and form.square_sign in (1, -1)
    if family == Family.SP_INDEF:
        return form.is_self_adjoint and form.trace_zero
    if family == Family.O_H:
        return form.is_anti_self_adjoint
    return False


def _transported(spec: FormSpec, u: Multivector, tol: float = 0.0) -> Multivector:
    if spec.transport is None:
        return u
    source = GroupId.G2 if spec.group == GroupId.SPIN_PLUS else spec.group
    return group_transport(source, spec.sig, spec.transport).forward(u, tol)


def invariance_holds(rep: Representation, spec: FormSpec, u: Multivector) -> bool:
    """beta(U)^d beta(F) beta(U) = beta(F) exactly (with U-hat on the left when twisted)."""
    bu = represent(rep, u)
    left = represent(rep, u.grade_involution()) if spec.twisted else bu
    m = rep.blade_image(spec.blade)
    return spec.flavor.apply(left) @ m @ bu == m


def invariance_residual(rep: Representation, spec: FormSpec, u: Multivector) -> float:
    """Relative max-norm residual of the invariance equation for a float U."""
    bu = represent(rep, u).entries
    left = represent(rep, u.grade_involution()).entries if spec.twisted else bu
    m = rep.float_blade_image(spec.blade)
    residual = spec.flavor.apply_numpy(left) @ m @ bu - m
    scale = max(1.0, float(np.max(np.abs(bu), initial=0.0))) ** 2
    return float(np.max(np.abs(residual), initial=0.0)) / scale


def block_form(rep: Representation) -> bool:
    """Every generator is diag(X, -X)."""
    for g in rep.generators:
        if not g.is_block_diagonal() or g.block(1, 1) != -g.block(0, 0):
            return False
    return bool(rep.generators)


def block_relation_holds(rep: Representation, spec: FormSpec, u: Multivector) -> bool:
    """With beta(U) = diag(A+B, A-B): (A-B)^d G (A+B) = G for beta(F) = diag(G, G)."""
    bu = represent(rep, u)
    bh = represent(rep, u.grade_involution())
    g = rep.blade_image(spec.blade).block(0, 0)
    swapped = bh.block(0, 0) == bu.block(1, 1)
    return swapped and spec.flavor.apply(bh.block(0, 0)) @ g @ bu.block(0, 0) == g


def verify_classification(g, sig, samples=None, seed=None, tol=None) -> Report:
    g = GroupId.parse(g) if isinstance(g, str) else g
    sig = as_signature(sig)
    seed = config.DEFAULT_SEED if seed is None else seed
    tol = config.MEMBERSHIP_TOL if tol is None else tol
    name = classify(g, sig)
    spec = form_spec(g, sig)
    rep = get_representation(spec.target_sig)

    exact_failures, float_failures = [], []
    exact = sample_exact(g, sig, samples, seed)
    floats = sample_exponential(g, sig, samples, seed, tol)
    images = []
    for sample in exact:
        u = _transported(spec, sample.value)
        images.append(u)
        if not invariance_holds(rep, spec, u):
            exact_failures.append({"index": sample.index, "factors": list(sample.factors)})
    worst = 0.0
    for sample in floats:
        residual = invariance_residual(rep, spec, _transported(spec, sample.value, tol))
        worst = max(worst, residual)
        if residual > tol:
            float_failures.append({"index": sample.index, "residual": residual})

    form = classify_form(rep.blade_image(spec.blade))
    flags_ok = flags_consistent(name, spec, form)

    algebra_dim = binomial_dimension(g, sig.n)
    group_dim = name.real_dimension()
    if name.relation == "contains":
        dimension_ok = algebra_dim <= group_dim
    else:
        dimension_ok = algebra_dim == group_dim

    block: Optional[dict] = None
    block_ok = True
    if name.family.is_linear and spec.twisted and block_form(rep):
        failures = [i for i, u in enumerate(images) if not block_relation_holds(rep, spec, u)]
        block_ok = not failures
        block = {"checked": len(images), "failures": failures[:5]}
    elif name.family.is_linear:
        block = {"checked": 0, "reason": "representation is not in diag(X, -X) form"}

    ok = not exact_failures and not float_failures and flags_ok and dimension_ok and block_ok
    if not ok:
        logger.warning(f"{g.label} over {sig.label()}: classification as {name} not confirmed")
    return check(
        "classification",
        ok,
        signature=(sig.p, sig.q),
        group=g.label,
        seed=seed,
        name=name.to_dict(),
        form=spec.to_dict(),
        form_flags=form.to_dict(),
        flags_ok=flags_ok,
        exact_samples=len(exact),
        exponential_samples=len(floats),
        exact_failures=exact_failures[:5],
        float_failures=float_failures[:5],
        worst_residual=worst,
        algebra_dimension=algebra_dim,
        group_dimension=group_dim,
        dimension_ok=dimension_ok,
        block_relation=block,
    )
