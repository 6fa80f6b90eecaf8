from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import brute
from nonsolvable.actions import minimal_block_systems
from nonsolvable.constructions import alt, cyclic, sym, wreath_tower
from nonsolvable.group import (Group, GroupError, derived_subgroup, direct_product, group_from_json,
                               group_to_json, is_solvable, normal_closure, random_element,
                               restrict_to_support, wreath_imprimitive)
from nonsolvable.perm import Permutation


def cyc(n, *cycles):
    return Permutation.from_cycles(n, cycles)


@pytest.mark.parametrize("G,order", [(alt(5), 60), (sym(4), 24), (sym(6), 720), (alt(6), 360)])
def test_known_orders(G, order):
    assert G.order == order


def test_orders_match_brute_force_closure():
    for G in (sym(4), alt(5), wreath_imprimitive(cyclic(2), cyclic(2))):
        elems = brute.closure(G.degree, [tuple(g.arr) for g in G.gens])
        assert len(elems) == Group(G.degree, G.gens).order


def test_membership():
    A5 = alt(5)
    assert A5.contains(cyc(5, [1, 2, 3]))
    assert not A5.contains(cyc(5, [1, 2]))


def test_orbits_and_transitivity():
    G = Group(6, [cyc(6, [1, 2, 3]), cyc(6, [4, 5])])
    assert G.orbits() == [[0, 1, 2], [3, 4], [5]]
    assert G.orbit(4) == {4, 5}
    assert not G.is_transitive()
    assert sym(5).is_transitive()


def test_orbit_rejects_out_of_range():
    with pytest.raises(GroupError):
        sym(3).orbit(4)


def test_block_systems_of_imprimitive_wreath():
    systems = minimal_block_systems(wreath_tower(2))
    assert [[1, 2, 3, 4, 5], [6, 7, 8, 9, 10], [11, 12, 13, 14, 15], [16, 17, 18, 19, 20],
            [21, 22, 23, 24, 25]] in systems
    assert minimal_block_systems(sym(5)) == []


def test_normal_closures_in_s4():
    S4 = sym(4)
    assert normal_closure(S4, [cyc(4, [1, 2], [3, 4])]).order == 4
    assert normal_closure(S4, [cyc(4, [1, 2, 3])]).order == 12
    assert normal_closure(S4, [cyc(4, [1, 2])]).order == 24


def test_derived_series_of_s4():
    S4 = sym(4)
    D1 = derived_subgroup(S4)
    D2 = derived_subgroup(D1)
    assert (D1.order, D2.order, derived_subgroup(D2).order) == (12, 4, 1)
    assert is_solvable(S4)
    assert not is_solvable(alt(5))


def test_product_constructions():
    assert direct_product(alt(5), sym(4)).order == 1440
    assert wreath_imprimitive(cyclic(2), cyclic(2)).order == 8
    assert wreath_imprimitive(alt(5), alt(5)).order == 60 ** 6


def test_random_element_is_deterministic():
    G = alt(6)
    assert random_element(G, 7) == random_element(G, 7)
    assert G.contains(random_element(G, 7))


def test_random_element_is_uniform_on_c5():
    G = cyclic(5)
    counts = Counter(G.random_element(s).key() for s in range(10_000))
    assert len(counts) == 5
    # each of 5 cells expects 2000; 5 sigma is about 200
    assert all(abs(c - 2000) < 200 for c in counts.values())


def test_json_round_trip():
    G = alt(5)
    H = group_from_json(group_to_json(G))
    assert H.order == 60 and H.same_as(G)


@pytest.mark.parametrize("bad", [
    {}, {"degree": 0, "generators": []}, {"degree": 3, "generators": [[[1, 4]]]},
    {"degree": 3, "generators": [[[1, 1]]]}, {"degree": 3, "generators": [[["a"]]]},
    {"degree": True, "generators": []},
])
def test_json_rejects_bad_input(bad):
    with pytest.raises(GroupError):
        group_from_json(bad)


def test_restrict_to_support_keeps_order():
    G = Group(9, [cyc(9, [2, 5, 7]), cyc(9, [5, 7])])
    R = restrict_to_support(G)
    assert R.degree == 3 and R.order == 6


small_gens = st.integers(2, 6).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.permutations(list(range(n))), min_size=1, max_size=3)))


@settings(max_examples=60)
@given(small_gens)
def test_chain_order_matches_closure(data):
    n, raw = data
    gens = [Permutation(np.array(p, dtype=np.int32)) for p in raw]
    G = Group(n, gens)
    elems = brute.closure(n, [tuple(p) for p in raw])
    assert G.order == len(elems)
    for e in list(elems)[:20]:
        assert G.contains(Permutation(np.array(e, dtype=np.int32)))
    outside = [p for p in brute.all_perms(n) if p not in elems][:20]
    assert not any(G.contains(Permutation(np.array(p, dtype=np.int32))) for p in outside)
