import pytest

from src.errors import TransportError
from src.groups import GroupId, TransportFamily, group_transport, transport_families, verify_transport
from src.groups.transport import drop_last
from src.multivector import Multivector, Signature
from src.scalars import ComplexRational, Ring
from tests.conftest import small_signatures


@pytest.mark.parametrize("sig", small_signatures(4, n_min=1), ids=str)
def test_every_family_maps_members_to_members(sig):
    for g, family in transport_families(sig):
        report = verify_transport(g, sig, family, samples=6, seed=3)
        assert report.passed, (family, report.details)


def test_family_availability():
    assert [f for _, f in transport_families((0, 2))] == [
        TransportFamily.G2I1_G12,
        TransportFamily.G2I3_G23,
        TransportFamily.G2_G12_DROP_LAST,
    ]
    families = {f for _, f in transport_families((2, 0))}
    assert TransportFamily.G2_G12_DROP_LAST not in families
    assert TransportFamily.G2_G2_SWAP in families


def test_default_targets():
    t = group_transport(GroupId.G2I1, (2, 1))
    assert (t.g_to, t.sig_to) == (GroupId.G12, Signature(1, 2))
    t = group_transport(GroupId.G23, (1, 3))
    assert (t.g_to, t.sig_to) == (GroupId.G2I3, Signature(3, 1))
    t = group_transport(GroupId.G2, (2, 2))
    assert t.family == TransportFamily.G2_G12_DROP_LAST
    assert (t.g_to, t.sig_to) == (GroupId.G12, Signature(2, 1))
    t = group_transport(GroupId.G2, (3, 0))
    assert t.family == TransportFamily.G2_G12_DROP_FIRST
    assert (t.g_to, t.sig_to) == (GroupId.G12, Signature(0, 2))


def test_imaginary_vector_pulls_back_to_a_generator():
    t = group_transport(GroupId.G2I1, (1, 0))
    ie1 = Multivector.vector((1, 0), 1, ComplexRational(0, 1), Ring.COMPLEX_RATIONAL)
    image = t.forward(ie1)
    assert image == Multivector.vector((0, 1), 1)
    assert t.backward(image) == ie1


def test_forward_and_backward_invert_each_other():
    t = group_transport(GroupId.G2, (2, 2), TransportFamily.G2_G2_SWAP)
    assert t.sig_to == Signature(2, 2)
    u = Multivector.from_terms((2, 2), {0: 3, 0b11: 1, 0b1100: -2, 0b1111: 5})
    assert t.backward(t.forward(u)) == u
    assert t.inverse().forward(t.forward(u)) == u


def test_odd_elements_are_outside_the_even_image():
    sub = drop_last(1, 1)
    with pytest.raises(TransportError):
        sub.apply_inverse(Multivector.vector((1, 1), 1))


def test_wrong_family_is_rejected():
    with pytest.raises(TransportError):
        group_transport(GroupId.G2I1, (1, 1), TransportFamily.G2_G2_SWAP)
    with pytest.raises(TransportError):
        group_transport(GroupId.G2, (2, 0), TransportFamily.G2_G12_DROP_LAST)
