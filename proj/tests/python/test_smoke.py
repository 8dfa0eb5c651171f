import pytest

import trussalg as ta


def test_group_arithmetic():
    G = ta.Group([2, 2])
    assert G.order == 4
    assert G.add(1, 2) == 3
    assert G.heap(1, 2, 3) == G.add(G.add(1, G.neg(2)), 3)
    assert G.from_tuple(G.to_tuple(3)) == 3


def test_truss_validation():
    G = ta.Group([2])
    T = ta.Truss(G, [0, 1, 1, 0], name="xor")
    assert T.mul(1, 1) == 0
    with pytest.raises(ta.StructuralError):
        ta.Truss(G, [1, 1, 1, 0])  # not associative


def test_standard_products():
    ts = ta.standard_products(ta.Group([3]))
    assert [t.name for t in ts] == ["zero", "left_projection", "right_projection", "addition"]


def test_cohomology_of_left_projection():
    for p in (2, 3):
        T = ta.left_projection_truss(ta.Group([p]))
        assert ta.cohomology(T, 0, 0).class_count == 1
        assert ta.cohomology(T, 0, 1).class_count == p


def test_coboundary_of_identity_vanishes():
    T = ta.addition_truss(ta.Group([2]))
    assert ta.coboundary(T, 0, 1, [0, 1]) == [0, 0, 0, 0]


def test_nijenhuis_check():
    T = ta.addition_truss(ta.Group([4]))
    r = ta.check_nijenhuis(T, [0, 1, 2, 3], 0)
    assert r.is_heap_endo and r.torsion_trivial and r.product_associative


def test_integer_truss():
    z = ta.ZTruss(1, 0, 0)
    assert z.mul(3, 4) == 12
    assert ta.z_torsion_polynomial(z, 2, 3) == -12
    assert ta.z_is_nijenhuis(z, 3, 0)
    brute, closed, agree = ta.classify_z(z, 10)
    assert agree and (3, 0) in brute


def test_constraint_rejected():
    with pytest.raises(ta.StructuralError):
        ta.ZTruss(1, 2, 0)


def test_enumeration_klein_group():
    r = ta.enumerate_truss_structures(ta.Group([2, 2]))
    assert r.class_count == 23
    assert r.ring_class_count == 8


def test_capacity_guard():
    with pytest.raises(ta.CapacityError):
        ta.enumerate_truss_structures(ta.Group([5]))


def test_affine_verify():
    assert ta.affine_verify(trials=16)["pass"]
