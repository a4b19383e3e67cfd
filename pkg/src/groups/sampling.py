"""
Group Sampling Module

Two sources of group elements:

1. exact: products of rational rotors (a + bX)/c, with X a unit blade of the
   Lie algebra and (a, b, c) a Pythagorean or hyperbolic triple, and of signed
   basis blades that satisfy the defining equation;
2. float: exp(X) for random X in the Lie algebra, by scaling and squaring.
"""

import logging
import os
import sys
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))
import config

from ..errors import ConvergenceError
from ..multivector import Multivector, as_signature, blade_label, grade, square_sign
from ..scalars import ComplexRational
from .definitions import GroupId, algebra_element, conjugation, is_member

logger = logging.getLogger(__name__)


class Provenance(str, Enum):
    EXACT_VECTOR_PRODUCT = "exact_vector_product"
    LIE_EXPONENTIAL = "lie_exponential"


@dataclass
class GroupElementSample:
    group: GroupId
    value: Multivector
    provenance: Provenance
    seed: int
    index: int = 0
    degenerate: bool = False
    factors: tuple = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            "group": self.group.value,
            "provenance": self.provenance.value,
            "seed": self.seed,
            "index": self.index,
            "degenerate": self.degenerate,
            "factors": list(self.factors),
            "value": self.value.to_dict(),
        }


@dataclass(frozen=True)
class Generator:
    """A named exact group element used as a factor in samples."""

    name: str
    value: Multivector


# ----------------------------------------------------------------------
# Exact generators

def _unit_blade(g: GroupId, sig, mask: int, imaginary: bool) -> Multivector:
    if imaginary:
        return algebra_element(g, sig, {}, {mask: Fraction(1)})
    return algebra_element(g, sig, {mask: Fraction(1)})


def algebra_blades(g: GroupId, sig) -> list:
    """(name, X, mu) for unit blades X of the Lie algebra with X^2 = mu e."""
    sig = as_signature(sig)
    algebra = g.lie_algebra
    out = []
    candidates = [(m, False) for m in algebra.real_masks(sig)] + [(m, True) for m in algebra.imaginary_masks(sig)]
    for mask, imaginary in candidates:
        x = _unit_blade(g, sig, mask, imaginary)
        if conjugation(g, x) != -x:
            continue
        mu = square_sign(mask, sig) * (-1 if imaginary else 1)
        name = ("i" if imaginary else "") + blade_label(mask, sig.n)
        out.append((name, x, mu))
    return out


def rotor(x: Multivector, mu: int, triple: tuple) -> Multivector:
    """(a + bX)/c; conj(R) R = (a^2 - mu b^2)/c^2 = 1 for the matching triple."""
    a, b, c = triple
    return (x * b + a) / c


def exact_generators(g: GroupId, sig, rng: Optional[np.random.Generator] = None) -> list:
    """Rotors for every algebra blade, then signed blades that are members."""
    sig = as_signature(sig)
    generators = []
    for name, x, mu in algebra_blades(g, sig):
        triples = config.CIRCULAR_TRIPLES if mu < 0 else config.HYPERBOLIC_TRIPLES
        triple = triples[int(rng.integers(len(triples)))] if rng is not None else triples[0]
        generators.append(Generator(f"rotor({name};{triple[0]},{triple[1]},{triple[2]})", rotor(x, mu, triple)))
    for mask in range(sig.dimension):
        imaginary = g.is_complexified and grade(mask) % 2 == 1
        unit = ComplexRational(0, 1) if imaginary else 1
        for sign in (1, -1):
            if mask == 0 and sign == 1:
                continue
            u = Multivector.blade(sig, mask, unit * sign, g.ring)
            if is_member(g, u):
                label = ("i" if imaginary else "") + (blade_label(mask, sig.n) if mask else "e")
                generators.append(Generator(("-" if sign < 0 else "") + label, u))
    return generators


def sample_exact(g: GroupId, sig, count=None, seed=None) -> list:
    """Products of one to three exact generators; every sample passes is_member exactly."""
    sig = as_signature(sig)
    count = config.DEFAULT_SAMPLES if count is None else count
    seed = config.DEFAULT_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    generators = exact_generators(g, sig, rng)
    identity = Multivector.scalar(sig, 1, g.ring)
    if not generators:
        logger.warning(f"{g.label} over {sig.label()}: no exact generators, returning the identity")
        return [GroupElementSample(g, identity, Provenance.EXACT_VECTOR_PRODUCT, seed, 0, degenerate=True)]
    nontrivial = any(gen.value.terms().keys() - {0} for gen in generators)
    samples = []
    for index in range(count):
        k = int(rng.integers(1, 4))
        picks = [generators[int(i)] for i in rng.integers(len(generators), size=k)]
        value = identity
        for gen in picks:
            value = value * gen.value
        samples.append(GroupElementSample(
            g, value, Provenance.EXACT_VECTOR_PRODUCT, seed, index,
            degenerate=not nontrivial,
            factors=tuple(gen.name for gen in picks),
        ))
    if not nontrivial:
        logger.warning(f"{g.label} over {sig.label()}: only scalar generators available")
    return samples


# ----------------------------------------------------------------------
# Exponential map

def exponential(x: Multivector) -> Multivector:
    """exp(X) by a truncated series after scaling ||X||_1 down to 1/2, then squaring back."""
    x = x.to_float()
    s = 0
    norm = x.l1_norm()
    while norm > 0.5:
        norm /= 2
        s += 1
    y = x / (2 ** s)
    term = Multivector.scalar(x.sig, 1, x.ring)
    total = term
    for k in range(1, config.MAX_SERIES_TERMS + 1):
        term = term * y / k
        total = total + term
        if term.max_norm() < config.SERIES_TOL:
            break
    else:
        raise ConvergenceError(f"exponential series did not converge in {config.MAX_SERIES_TERMS} terms")
    for _ in range(s):
        total = total * total
    return total


def random_algebra_float(g: GroupId, sig, rng: np.random.Generator) -> Multivector:
    """X with coefficients uniform in [-0.5, 0.5] on every blade of the Lie algebra."""
    algebra = g.lie_algebra
    real = {m: float(rng.uniform(-0.5, 0.5)) for m in algebra.real_masks(sig)}
    imag = {m: float(rng.uniform(-0.5, 0.5)) for m in algebra.imaginary_masks(sig)}
    return algebra_element(g, sig, real, imag, ring=g.float_ring)


def sample_exponential(g: GroupId, sig, count=None, seed=None, tol=None) -> list:
    """exp of random Lie algebra elements; members only up to tol."""
    sig = as_signature(sig)
    count = config.DEFAULT_SAMPLES if count is None else count
    seed = config.DEFAULT_SEED if seed is None else seed
    tol = config.MEMBERSHIP_TOL if tol is None else tol
    rng = np.random.default_rng(seed)
    samples = []
    for index in range(count):
        u = exponential(random_algebra_float(g, sig, rng))
        if not is_member(g, u, tol):
            logger.warning(f"{g.label} over {sig.label()}: exponential sample {index} misses tolerance {tol}")
        samples.append(GroupElementSample(g, u, Provenance.LIE_EXPONENTIAL, seed, index))
    return samples
