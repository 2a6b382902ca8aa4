import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import systola as sy
from systola.cochains import coboundary, vertex_coboundary
from systola.errors import DimensionError, DomainError

from conftest import brute_restriction_is_zero


def _random_cochain(X, rng, ring=sy.RING_Z2):
    edges = sorted(X.faces(1))
    vals = {e: rng.randrange(2) for e in edges}
    return sy.Cochain1(X, vals, ring)


def test_zero_cochain_is_cocycle(rp2):
    assert sy.is_cocycle(sy.Cochain1(rp2, {}))


def test_any_assignment_on_cycle_is_cocycle():
    X = sy.build_complex([[1, 2], [2, 3], [1, 3]])
    assert sy.is_cocycle(sy.Cochain1(X, {(1, 2): 1, (1, 3): 1}))


def test_single_edge_on_full_simplex_is_not_cocycle():
    X = sy.build_complex([[1, 2, 3]])
    assert not sy.is_cocycle(sy.Cochain1(X, {(1, 2): 1}))


def test_value_on_non_edge_rejected():
    X = sy.build_complex([[1, 2], [2, 3]])
    with pytest.raises(DomainError):
        sy.Cochain1(X, {(1, 3): 1})


def test_integer_cocycle_orientation():
    X = sy.build_complex([[1, 2], [2, 3], [1, 3]])
    c = sy.Cochain1(X, {(1, 2): 3}, sy.RING_Z)
    assert c.value(1, 2) == 3 and c.value(2, 1) == -3


def test_h1_of_contractible_complex_is_empty():
    assert sy.h1_basis(sy.build_complex([[1, 2, 3]])) == []


def test_h1_dimensions_match_surface_euler(rp2, torus7):
    # closed surfaces: dim H^1(Z2) = 2 - Euler characteristic
    assert len(sy.h1_basis(rp2)) == 2 - rp2.euler_characteristic() == 1
    assert len(sy.h1_basis(torus7)) == 2 - torus7.euler_characteristic() == 2


def test_h1_basis_members_are_noncoboundary_cocycles(rp2, torus7):
    for X in (rp2, torus7):
        for c in sy.h1_basis(X):
            assert sy.is_cocycle(c)
            assert not sy.restriction_is_zero(c, X.vertices)


@settings(max_examples=40, deadline=None, derandomize=True)
@given(st.integers(0, 2 ** 31))
def test_coboundary_squared_is_zero(seed):
    rng = random.Random(seed)
    X = sy.gen_named("rp2-six")
    g = {v: rng.randrange(2) for v in X.vertices}
    dg = vertex_coboundary(X, g)
    assert sy.is_cocycle(dg)
    assert coboundary(sy.CochainK(X, 1, list(dg.values))).is_zero()


def test_coboundary_squared_vanishes_in_degree_two():
    # needs a complex with 3-faces for the degree 1 -> 2 -> 3 composite
    Q, _, _ = sy.gen_projective_space(3, 3)
    rng = random.Random(5)
    for _ in range(10):
        support = [e for e in Q.faces(1) if rng.randrange(2)]
        dc = coboundary(sy.CochainK(Q, 1, support))
        assert coboundary(dc).is_zero()


def test_cup_of_zero_classes_is_zero(rp2):
    z = sy.Cochain1(rp2, {})
    assert sy.cup_power([z, z]).is_zero()


def test_cup_single_class_is_the_class(rp2, rp2_class):
    one = sy.cup_power([rp2_class])
    assert one.degree == 1
    assert one.support == frozenset(rp2_class.values)


def test_cup_degree_error(rp2, rp2_class):
    with pytest.raises(DimensionError):
        sy.cup_power([rp2_class] * 3)


def test_cup_square_on_rp2_is_nonzero(rp2, rp2_class):
    square = sy.cup_power([rp2_class, rp2_class])
    assert sy.class_is_nonzero(square)
    # fundamental-class pairing oracle on a closed surface: a 2-cochain is a
    # coboundary iff its total weight is even
    assert len(square.support) % 2 == 1


def test_torus_cup_pairing(torus_classes):
    a, b = torus_classes
    assert not sy.class_is_nonzero(sy.cup_power([a, a]))
    assert not sy.class_is_nonzero(sy.cup_power([b, b]))
    assert sy.class_is_nonzero(sy.cup_power([a, b]))
    assert len(sy.cup_power([a, b]).support) % 2 == 1
    assert len(sy.cup_power([a, a]).support) % 2 == 0


def test_zero_class_is_zero(rp2):
    assert not sy.class_is_nonzero(sy.CochainK(rp2, 2, []))


def test_cup_output_is_cocycle_when_higher_faces_exist():
    Q, xi, _ = sy.gen_projective_space(3, 3)
    square = sy.cup_power([xi, xi])
    assert square.degree == 2
    assert coboundary(square).is_zero()


@settings(max_examples=25, deadline=None, derandomize=True)
@given(st.integers(0, 2 ** 31))
def test_class_nonzero_invariant_under_coboundary_shift(seed):
    rng = random.Random(seed)
    X = sy.gen_named("rp2-six")
    xi = sy.h1_basis(X)[0]
    g = {v: rng.randrange(2) for v in X.vertices}
    shifted = xi + vertex_coboundary(X, g)
    assert sy.is_cocycle(shifted)
    before = sy.class_is_nonzero(sy.cup_power([xi, xi]))
    after = sy.class_is_nonzero(sy.cup_power([shifted, xi]))
    both = sy.class_is_nonzero(sy.cup_power([shifted, shifted]))
    assert before == after == both


def test_torus_pairing_invariant_under_coboundary_shift(torus7, torus_classes):
    rng = random.Random(2)
    a, b = torus_classes
    for _ in range(15):
        ga = {v: rng.randrange(2) for v in torus7.vertices}
        gb = {v: rng.randrange(2) for v in torus7.vertices}
        sa = a + vertex_coboundary(torus7, ga)
        sb = b + vertex_coboundary(torus7, gb)
        assert sy.class_is_nonzero(sy.cup_power([sa, sb]))
        assert not sy.class_is_nonzero(sy.cup_power([sa, sa]))


def test_restriction_to_tree_is_zero(rp2, rp2_class):
    assert sy.restriction_is_zero(rp2_class, {1, 2})
    assert sy.restriction_is_zero(rp2_class, {3})


def test_restriction_to_whole_rp2_is_nonzero(rp2, rp2_class):
    assert not sy.restriction_is_zero(rp2_class, rp2.vertices)


def test_restriction_to_triples_of_rp2(rp2, rp2_class):
    # face triples bound a 2-face, so the cocycle condition kills the loop;
    # the ten non-face triples each carry a shortest nontrivial loop.
    from itertools import combinations
    faces = set(rp2.faces(2))
    for triple in combinations(rp2.vertices, 3):
        expected = triple in faces
        assert sy.restriction_is_zero(rp2_class, set(triple)) == expected
        assert brute_restriction_is_zero(rp2_class, set(triple)) == expected


def test_restriction_agrees_with_cycle_enumeration_on_random_subsets(rp2, torus7):
    rng = random.Random(11)
    for X in (rp2, torus7):
        for c in sy.h1_basis(X):
            for _ in range(40):
                w = {v for v in X.vertices if rng.randrange(2)}
                if not w:
                    continue
                assert sy.restriction_is_zero(c, w) == brute_restriction_is_zero(c, w)


def test_restriction_accepts_induced_subcomplex(rp2, rp2_class):
    sub = sy.induced(rp2, {1, 2, 3})
    assert sy.restriction_is_zero(rp2_class, sub)
