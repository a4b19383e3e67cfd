"""
Bracket Closure Module

Randomized exact checks of the commutator relations between quaternion
types, and of each group's Lie algebra being closed under the bracket.
"""

import logging
import os
import sys

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))
import config

from ..multivector import Multivector, as_signature, quaternion_type, random_sparse
from ..multivector.sampling import random_rational
from ..reports import Report, check
from ..scalars import Ring
from .definitions import GroupId, algebra_element, lie_algebra_member

logger = logging.getLogger(__name__)

# (s, t, allowed types of [s-bar, t-bar])
BRACKET_RELATIONS = (
    [(k, k, (2,)) for k in range(4)]
    + [(k, 2, (k,)) for k in range(4)]
    + [(0, 1, (3,)), (0, 3, (1,)), (1, 3, (0,))]
)


def type_masks(sig, s: int) -> list:
    sig = as_signature(sig)
    return [m for m in range(sig.dimension) if quaternion_type(m) == s]


def outside_types(x: Multivector, types) -> Multivector:
    """The part of X not lying in the given quaternion types."""
    inside = Multivector.zeros(x.sig, x.ring)
    for s in types:
        inside = inside + x.quaternion_type_project(s)
    return x - inside


def bracket_closure_check(sig, trials=None, seed=None) -> list:
    """One report per relation: [s-bar, t-bar] has no component outside the target types."""
    sig = as_signature(sig)
    trials = config.BRACKET_TRIALS if trials is None else trials
    seed = config.DEFAULT_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    reports = []
    for s, t, target in BRACKET_RELATIONS:
        left, right = type_masks(sig, s), type_masks(sig, t)
        failure = None
        for trial in range(trials):
            u = random_sparse(sig, rng, Ring.RATIONAL, left)
            v = random_sparse(sig, rng, Ring.RATIONAL, right)
            leak = outside_types(u.lie_bracket(v), target)
            if not leak.is_zero():
                failure = {"trial": trial, "u": u.to_dict(), "v": v.to_dict(), "leak": str(leak)}
                break
        if failure:
            logger.warning(f"{sig.label()}: [{s},{t}] leaves {target}")
        reports.append(check(
            "bracket-relation",
            failure is None,
            signature=(sig.p, sig.q),
            seed=seed,
            relation=f"[{s},{t}] in {'+'.join(str(x) for x in target)}",
            trials=trials,
            vacuous=not left or not right,
            failure=failure,
        ))
    return reports


def random_algebra_element(g: GroupId, sig, rng: np.random.Generator) -> Multivector:
    """Sparse exact element of the group's Lie algebra."""
    algebra = g.lie_algebra
    real_masks = algebra.real_masks(sig)
    imag_masks = algebra.imaginary_masks(sig)
    real = random_sparse(sig, rng, Ring.RATIONAL, real_masks).terms() if real_masks else {}
    imag = {}
    if imag_masks:
        count = int(rng.integers(0, min(config.SPARSE_TERMS, len(imag_masks)) + 1))
        for i in rng.choice(len(imag_masks), size=count, replace=False):
            imag[imag_masks[int(i)]] = random_rational(rng)
    return algebra_element(g, sig, real, imag)


def algebra_closure_check(g: GroupId, sig, trials=None, seed=None) -> Report:
    """Brackets of random Lie algebra elements stay in the algebra."""
    sig = as_signature(sig)
    trials = config.BRACKET_TRIALS if trials is None else trials
    seed = config.DEFAULT_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    failure = None
    for trial in range(trials):
        x = random_algebra_element(g, sig, rng)
        y = random_algebra_element(g, sig, rng)
        bracket = x.lie_bracket(y)
        if not lie_algebra_member(g, bracket):
            failure = {"trial": trial, "x": str(x), "y": str(y), "bracket": str(bracket)}
            break
    return check(
        "lie-algebra-closure",
        failure is None,
        signature=(sig.p, sig.q),
        group=g.label,
        seed=seed,
        algebra=g.lie_algebra.value,
        trials=trials,
        failure=failure,
    )
