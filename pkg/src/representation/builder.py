"""
Representation Builder Module

Builds beta for any Cl_{p,q} from five base algebras and three
transformations, self-checking the Clifford relations after every step:

1. increase: Cl_{p,q} -> Cl_{p+1,q+1}, doubling the matrix size
2. swap:     Cl_{p,q} -> Cl_{q+1,p-1}, same size
3. shift4:   Cl_{p,q} -> Cl_{p-4,q+4}, same size
"""

import logging

from ..errors import ConstructionError, SignatureError
from ..matrices import RepMatrix
from ..multivector import Signature, as_signature
from ..scalars import Quaternion, Ring
from ..scalars import ComplexRational
from .representation import RepClass, Representation

logger = logging.getLogger(__name__)


# ----------------------------------------------------------------------
# Base cases

def _base_generators(sig: Signature):
    """(ring, generator matrices) for the five base algebras, or None."""
    i_c = ComplexRational(0, 1)
    i_h, j_h, k_h = Quaternion.unit("i"), Quaternion.unit("j"), Quaternion.unit("k")
    if (sig.p, sig.q) == (0, 0):
        return Ring.RATIONAL, []
    if (sig.p, sig.q) == (0, 1):
        return Ring.COMPLEX_RATIONAL, [RepMatrix.from_rows([[i_c]])]
    if (sig.p, sig.q) == (1, 0):
        return Ring.RATIONAL, [RepMatrix.diagonal([1, -1], Ring.RATIONAL)]
    if (sig.p, sig.q) == (0, 2):
        return Ring.QUATERNION, [RepMatrix.from_rows([[i_h]]), RepMatrix.from_rows([[j_h]])]
    if (sig.p, sig.q) == (0, 3):
        return Ring.QUATERNION, [
            RepMatrix.diagonal([u, -u], Ring.QUATERNION) for u in (i_h, j_h, k_h)
        ]
    return None


def base_case(sig) -> Representation:
    sig = as_signature(sig)
    found = _base_generators(sig)
    if found is None:
        raise SignatureError(f"{sig.label()} is not a base case")
    _, generators = found
    rep = Representation(sig, RepClass.of(sig), tuple(generators), trace=({"step": "base", "signature": sig.label()},))
    check_clifford_relations(rep)
    return rep


# ----------------------------------------------------------------------
# Checks

def check_clifford_relations(rep: Representation):
    """beta^a beta^b + beta^b beta^a = 2 eta^{ab} I for all a <= b."""
    identity = rep.identity()
    gens = rep.generators
    for a in range(len(gens)):
        for b in range(a, len(gens)):
            anti = gens[a] @ gens[b] + gens[b] @ gens[a]
            if a == b:
                eta = rep.sig.metric(a + 1)
                expected = identity.scale(2 * eta)
            else:
                expected = RepMatrix.zeros(rep.size, rep.ring)
            if anti != expected:
                raise ConstructionError(
                    f"{rep.sig.label()}: generators e{a + 1}, e{b + 1} violate the Clifford relation"
                )
    return True


def check_shape(rep: Representation):
    expected_class = RepClass.of(rep.sig)
    if rep.rep_class != expected_class:
        raise ConstructionError(f"{rep.sig.label()}: built {rep.rep_class.value}, expected {expected_class.value}")
    if any(g.ring != expected_class.ring for g in rep.generators):
        raise ConstructionError(f"{rep.sig.label()}: generator entries not in {expected_class.ring.value}")
    size = expected_class.expected_size(rep.sig.n)
    if rep.size != size:
        raise ConstructionError(f"{rep.sig.label()}: built size {rep.size}, expected {size}")


def check_faithful(rep: Representation):
    """For the pair classes the pseudoscalar must not map to a multiple of I."""
    if not rep.rep_class.is_pair:
        return True
    pseudo = rep.blade_image(rep.sig.full_mask)
    if pseudo.scalar_multiple_of_identity() is not None:
        raise ConstructionError(f"{rep.sig.label()}: the representation is not faithful")
    return True


# ----------------------------------------------------------------------
# Transformations

def _block(m: RepMatrix, other: RepMatrix) -> RepMatrix:
    return RepMatrix.block_diagonal(m, other)


def _mixing(size: int, ring: Ring, sign: int) -> RepMatrix:
    """[[0, sign*I], [I, 0]] at twice the given size."""
    identity = RepMatrix.identity(size, ring)
    zero = RepMatrix.zeros(size, ring)
    return RepMatrix.from_blocks(zero, identity.scale(sign), identity, zero)


def _anticommutes(x: RepMatrix, y: RepMatrix) -> bool:
    return (x @ y + y @ x).is_zero()


def _block_mixer(rep: Representation) -> tuple:
    """Block mixer Omega: squares to -I and anticommutes with every generator."""
    half = rep.size // 2
    omega = _mixing(half, rep.ring, -1)
    if all(_anticommutes(omega, g) for g in rep.generators):
        return omega, "omega"
    a = rep.generators[0].block(0, 0)
    c = (a @ a).scalar_multiple_of_identity()
    if c not in (1, -1):
        raise ConstructionError(f"{rep.sig.label()}: the leading block does not square to +-I")
    a_inv = a if c == 1 else -a
    zero = RepMatrix.zeros(half, rep.ring)
    adapted = RepMatrix.from_blocks(zero, -a_inv, a, zero)
    if not all(_anticommutes(adapted, g) for g in rep.generators):
        raise ConstructionError(f"{rep.sig.label()}: no block mixer anticommutes with the generators")
    logger.debug(f"{rep.sig.label()}: using the adapted block mixer")
    return adapted, "adapted"


def transform_increase(rep: Representation) -> Representation:
    """Cl_{p,q} -> Cl_{p+1,q+1}; old generators go to diag(beta, -beta)."""
    sig = rep.sig
    target = Signature(sig.p + 1, sig.q + 1)
    size, ring = rep.size, rep.ring
    lifted = [_block(g, -g) for g in rep.generators]
    step = {"step": "increase", "source": sig.label(), "target": target.label()}
    if (sig.p - sig.q) % 4 != 1:
        positive = _mixing(size, ring, 1)
        negative = _mixing(size, ring, -1)
        step["variant"] = "off-diagonal"
    else:
        if size % 2 or not all(g.is_block_diagonal() for g in rep.generators):
            raise ConstructionError(f"{sig.label()}: expected block-diagonal generators")
        mixer, variant = _block_mixer(rep)
        pseudo = rep.blade_image(sig.full_mask)
        positive = _block(pseudo @ mixer, -(pseudo @ mixer))
        negative = _block(mixer, -mixer)
        step["variant"] = variant
    generators = lifted[:sig.p] + [positive] + lifted[sig.p:] + [negative]
    out = Representation(target, RepClass.of(target), tuple(generators), trace=rep.trace + (step,))
    logger.debug(f"increase {sig.label()} -> {target.label()} ({step['variant']})")
    return out


def transform_swap(rep: Representation) -> Representation:
    """Cl_{p,q} -> Cl_{q+1,p-1} by e^1 -> beta^1, e^i -> beta^i beta^1."""
    sig = rep.sig
    if sig.p < 1:
        raise SignatureError(f"swap needs p >= 1, got {sig.label()}")
    target = Signature(sig.q + 1, sig.p - 1)
    b1 = rep.generators[0]
    products = [g @ b1 for g in rep.generators[1:]]
    # beta^i beta^1 squares to -eta^{ii}: old negatives become positive
    positives = products[sig.p - 1:]
    negatives = products[:sig.p - 1]
    generators = [b1] + positives + negatives
    step = {"step": "swap", "source": sig.label(), "target": target.label()}
    logger.debug(f"swap {sig.label()} -> {target.label()}")
    return Representation(target, RepClass.of(target), tuple(generators), trace=rep.trace + (step,))


def transform_shift4(rep: Representation) -> Representation:
    """Cl_{p,q} -> Cl_{p-4,q+4} by e^i -> beta^i beta^1 beta^2 beta^3 beta^4 for i <= 4."""
    sig = rep.sig
    if sig.p < 4:
        raise SignatureError(f"shift4 needs p >= 4, got {sig.label()}")
    target = Signature(sig.p - 4, sig.q + 4)
    gens = rep.generators
    omega = gens[0] @ gens[1] @ gens[2] @ gens[3]
    shifted = [g @ omega for g in gens[:4]]
    generators = list(gens[4:sig.p]) + shifted + list(gens[sig.p:])
    step = {"step": "shift4", "source": sig.label(), "target": target.label()}
    logger.debug(f"shift4 {sig.label()} -> {target.label()}")
    return Representation(target, RepClass.of(target), tuple(generators), trace=rep.trace + (step,))


# ----------------------------------------------------------------------
# Driver

def _checked(rep: Representation) -> Representation:
    check_clifford_relations(rep)
    check_shape(rep)
    check_faithful(rep)
    return rep


def build_representation(sig, max_n=None) -> Representation:
    """Exact faithful representation of Cl_{p,q}.

    Route: a base case; else increase from Cl_{p-1,q-1} when p, q >= 1;
    else swap from Cl_{1,p-1} when q = 0; else shift4 from Cl_{4,q-4}.
    """
    sig = as_signature(sig).check_max(max_n)
    if _base_generators(sig) is not None:
        return _checked(base_case(sig))
    if sig.p >= 1 and sig.q >= 1:
        return _checked(transform_increase(build_representation(Signature(sig.p - 1, sig.q - 1), max_n)))
    if sig.q == 0:
        return _checked(transform_swap(build_representation(Signature(1, sig.p - 1), max_n)))
    return _checked(transform_shift4(build_representation(Signature(4, sig.q - 4), max_n)))
