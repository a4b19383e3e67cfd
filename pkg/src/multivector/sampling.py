"""
Random multivectors for property checks.

All randomness flows through a numpy Generator so every check is
reproducible from its seed.
"""

import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))
import config

from ..scalars import ComplexRational, Ring
from .multivector import Multivector
from .signature import as_signature


def random_rational(rng: np.random.Generator) -> Fraction:
    """A small nonzero rational num/den with |num| <= 5 and den in 1..3."""
    num = 0
    while num == 0:
        num = int(rng.integers(-5, 6))
    return Fraction(num, int(rng.integers(1, 4)))


def random_coefficient(rng: np.random.Generator, ring: Ring):
    if ring == Ring.RATIONAL:
        return random_rational(rng)
    if ring == Ring.COMPLEX_RATIONAL:
        return ComplexRational(random_rational(rng), random_rational(rng))
    if ring == Ring.FLOAT:
        return float(rng.uniform(-1.0, 1.0))
    return complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))


def random_sparse(
    sig,
    rng: np.random.Generator,
    ring: Ring = Ring.RATIONAL,
    masks: Optional[Sequence[int]] = None,
    max_terms: Optional[int] = None,
) -> Multivector:
    """Random multivector supported on at most max_terms of the allowed blades.

    Returns zero when no blade is allowed.
    """
    sig = as_signature(sig)
    allowed = list(range(sig.dimension)) if masks is None else list(masks)
    max_terms = config.SPARSE_TERMS if max_terms is None else max_terms
    if not allowed:
        return Multivector.zeros(sig, ring)
    count = int(rng.integers(1, min(max_terms, len(allowed)) + 1))
    chosen = rng.choice(len(allowed), size=count, replace=False)
    terms = {allowed[int(i)]: random_coefficient(rng, ring) for i in chosen}
    return Multivector.from_terms(sig, terms, ring)


def random_dense(sig, rng: np.random.Generator, ring: Ring = Ring.FLOAT,
                 masks: Optional[Sequence[int]] = None, scale: float = 0.5) -> Multivector:
    """Float multivector with uniform coefficients in [-scale, scale] on the allowed blades."""
    sig = as_signature(sig)
    allowed = range(sig.dimension) if masks is None else masks
    out = Multivector.zeros(sig, ring)
    for m in allowed:
        if ring == Ring.COMPLEX_FLOAT:
            out.coeffs[m] = complex(rng.uniform(-scale, scale), rng.uniform(-scale, scale))
        else:
            out.coeffs[m] = rng.uniform(-scale, scale)
    return out
