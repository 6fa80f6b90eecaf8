import numpy as np
import pytest
from hypothesis import given, strategies as st

from brute import compose as brute_compose
from nonsolvable.perm import Permutation, commutator, compose, element_order, to_cycles_json


def cyc(n, *cycles):
    return Permutation.from_cycles(n, cycles)


perms = st.integers(1, 9).flatmap(
    lambda n: st.permutations(list(range(n))).map(lambda p: Permutation(np.array(p, dtype=np.int32))))


def same_degree_pair(draw_n=9):
    return st.integers(1, draw_n).flatmap(lambda n: st.tuples(
        *[st.permutations(list(range(n))).map(lambda p: Permutation(np.array(p, dtype=np.int32)))] * 3))


def test_compose_with_identity():
    p = cyc(3, [1, 2, 3])
    assert compose(p, Permutation.identity(3)) == p


def test_involution_squares_to_identity():
    p = cyc(2, [1, 2])
    assert compose(p, p).is_identity()


def test_compose_pointwise():
    p, q = cyc(3, [1, 2, 3]), cyc(3, [1, 2])
    r = compose(p, q)
    assert r == cyc(3, [2, 3])
    for i in range(1, 4):
        assert r(i) == q(p(i))


@pytest.mark.parametrize("p,expected", [
    (Permutation.identity(5), 1),
    (cyc(5, [1, 2], [3, 4, 5]), 6),
    (cyc(5, [1, 2, 3, 4, 5]), 5),
])
def test_element_order(p, expected):
    assert element_order(p) == expected


def test_from_images_is_one_based():
    p = Permutation.from_images([2, 3, 1])
    assert p(1) == 2 and p(3) == 1


def test_invalid_images_rejected():
    with pytest.raises(ValueError):
        Permutation.from_images([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation.from_cycles(3, [[1, 4]])


def test_cycles_round_trip():
    p = cyc(7, [1, 5, 2], [3, 7])
    assert Permutation.from_cycles(7, to_cycles_json(p)) == p


@given(same_degree_pair())
def test_composition_is_associative(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)


@given(same_degree_pair())
def test_matches_brute_force_composition(t):
    a, b, _ = t
    assert (a * b).images == tuple(x + 1 for x in brute_compose(tuple(a.arr), tuple(b.arr)))


@given(perms)
def test_inverse_and_order(p):
    assert (p * p.inverse()).is_identity()
    k = element_order(p)
    assert (p ** k).is_identity()
    assert all(not (p ** d).is_identity() for d in range(1, k))


@given(same_degree_pair())
def test_commutator_definition(t):
    a, b, _ = t
    assert b * a * commutator(a, b) == a * b


@given(same_degree_pair())
def test_conjugation_preserves_cycle_type(t):
    a, g, _ = t
    assert sorted(a.conjugate(g).cycle_lengths()) == sorted(a.cycle_lengths())
