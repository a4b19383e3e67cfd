import json

import numpy as np
import pytest

from src.errors import RingMismatchError, SignatureError
from src.multivector import Multivector, Signature, random_sparse
from src.representation import (
    RepClass,
    Representation,
    RepresentationCache,
    additional_signature,
    build_representation,
    get_representation,
    represent,
    unrepresent,
)
from src.representation.verify import additional_signature_report, verify_clifford_relations, verify_relat
from src.scalars import ComplexRational, Quaternion, Ring
from tests.conftest import small_signatures


@pytest.mark.parametrize("sig", small_signatures(6), ids=str)
def test_construction_matches_the_periodic_table(sig):
    rep = get_representation(sig)
    assert rep.rep_class == RepClass.of(sig)
    assert rep.size == rep.rep_class.expected_size(sig.n)
    assert all(g.ring == rep.ring for g in rep.generators)
    assert verify_clifford_relations(rep).passed
    assert verify_relat(rep).passed


def test_pair_classes_are_faithful():
    for sig in (Signature(1, 0), Signature(2, 1), Signature(0, 3), Signature(5, 0)):
        rep = get_representation(sig)
        assert rep.rep_class.is_pair
        assert rep.blade_image(sig.full_mask).scalar_multiple_of_identity() is None


def test_small_cases():
    rep = get_representation((0, 0))
    assert rep.size == 1 and rep.generators == ()

    rep = get_representation((0, 2))
    assert rep.rep_class == RepClass.QUATERNION and rep.size == 1
    assert rep.generators[0].entries[0, 0] == Quaternion.unit("i")
    assert rep.generators[1].entries[0, 0] == Quaternion.unit("j")

    rep = get_representation((1, 2))
    assert rep.rep_class == RepClass.COMPLEX and rep.size == 2
    kl = additional_signature(rep)
    assert (kl.k, kl.l) == (2, 1)


@pytest.mark.parametrize("pq", [(1, 2), (3, 0), (2, 3)])
def test_additional_signature_spot_values(pq):
    report = additional_signature_report(pq)
    assert report.passed, report.details


@pytest.mark.parametrize("sig", [Signature(1, 1), Signature(0, 3), Signature(1, 2), Signature(2, 3), Signature(0, 6)],
                         ids=str)
def test_represent_is_multiplicative_and_invertible(sig, rng):
    rep = get_representation(sig)
    for _ in range(5):
        u, v = random_sparse(sig, rng), random_sparse(sig, rng)
        assert represent(rep, u * v) == represent(rep, u) @ represent(rep, v)
        assert unrepresent(rep, represent(rep, u)) == u


def test_float_representation_matches_exact(rng):
    sig = Signature(1, 3)
    rep = get_representation(sig)
    u = random_sparse(sig, rng)
    assert np.allclose(represent(rep, u.to_float()).entries, represent(rep, u).to_numpy())
    assert unrepresent(rep, represent(rep, u.to_float())).is_close(u.to_float(), 1e-12)


def test_complex_coefficients_need_a_complex_class():
    u = Multivector.scalar((1, 0), ComplexRational(0, 1))
    with pytest.raises(RingMismatchError):
        represent(get_representation((1, 0)), u)
    v = Multivector.scalar((0, 1), ComplexRational(0, 1))
    assert represent(get_representation((0, 1)), v).ring == Ring.COMPLEX_RATIONAL


def test_signature_limits():
    with pytest.raises(SignatureError):
        build_representation((3, 3), max_n=4)
    with pytest.raises(SignatureError):
        represent(get_representation((1, 0)), Multivector.scalar((0, 1), 1))


def test_cache_reuses_representations():
    cache = RepresentationCache()
    first = cache.get_or_build((2, 1))
    second = cache.get_or_build(Signature(2, 1))
    assert first is second
    assert cache.hits == 1 and len(cache) == 1


@pytest.mark.parametrize("pq", [(2, 2), (2, 1), (1, 2), (1, 3), (0, 3), (0, 0)])
def test_json_round_trip(pq):
    rep = get_representation(pq)
    back = Representation.from_dict(json.loads(json.dumps(rep.to_dict())))
    assert back.sig == rep.sig
    assert back.rep_class == rep.rep_class
    assert back.generators == rep.generators
    assert back.trace == rep.trace
    assert back.to_dict() == rep.to_dict()
    assert verify_clifford_relations(back).passed


def test_json_with_the_wrong_class_is_rejected():
    obj = get_representation((1, 2)).to_dict()
    obj["class"] = RepClass.REAL_FULL.value
    with pytest.raises(SignatureError):
        Representation.from_dict(obj)

    obj = get_representation((1, 2)).to_dict()
    obj["generators"] = obj["generators"][:2]
    with pytest.raises(SignatureError):
        Representation.from_dict(obj)
