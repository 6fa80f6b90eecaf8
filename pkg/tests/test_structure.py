import pytest
from hypothesis import given, settings, strategies as st

from nonsolvable.constructions import (alt, cyclic, from_recipe, special_linear, sym,
                                       wreath_tower)
from nonsolvable.group import Group, GroupError, direct_product, is_solvable
from nonsolvable.perm import Permutation
from nonsolvable.structure import (frattini, max_two_length_over_solvable, minimal_normal_subgroups,
                                   socle_nonabelian, solvable_radical, structural, two_length)


def recipe(r):
    return from_recipe(r).group


@pytest.mark.parametrize("r,order", [
    ("sym:4", 24), ("sym:5", 1), ("alt:5", 1), ("SL:q=5,d=2", 2), ("product:alt:4;alt:5", 12),
    ("wreath:alt:5;cyc:2", 1), ("dih:5", 10),
])
def test_radical_orders(r, order):
    assert solvable_radical(recipe(r)).order == order


@pytest.mark.parametrize("r,orders", [
    ("sym:4", [4]), ("sym:5", [60]), ("alt:6", [360]), ("SL:q=5,d=2", [2]),
    ("product:alt:4;alt:5", [4, 60]), ("wreath:alt:5;cyc:2", [3600]),
])
def test_minimal_normal_orders(r, orders):
    assert sorted(M.order for M in minimal_normal_subgroups(recipe(r))) == orders


@pytest.mark.parametrize("r,order,components", [
    ("sym:4", 1, []), ("sym:6", 360, [360]), ("SL:q=5,d=2", 1, []),
    ("wreath:alt:5;cyc:2", 3600, [60, 60]), ("product:alt:5;alt:5", 3600, [60, 60]),
])
def test_nonabelian_socle(r, order, components):
    soc = socle_nonabelian(recipe(r))
    assert soc.socle.order == order
    assert sorted(c.order for c in soc.components) == components
    assert soc.complete


def test_socle_component_ids():
    soc = socle_nonabelian(alt(6))
    assert soc.component_ids[0].in_L


@pytest.mark.parametrize("G,order", [
    (cyclic(4), 2), (sym(4), 1), (special_linear(5, 2), 2), (cyclic(8), 4), (alt(5), 1),
])
def test_frattini(G, order):
    assert frattini(G)[0].order == order


def test_frattini_of_c2_x_c4():
    G = direct_product(cyclic(2), cyclic(4))
    assert frattini(G)[0].order == 2


def test_structural_mode_agrees_on_wreath_tower():
    W2 = wreath_tower(2)
    res = structural(W2)
    assert res.certified
    assert res.radical.order == 1
    assert res.socle.socle.order == 60 ** 5
    assert len(res.socle.components) == 5


def test_two_length_examples():
    assert two_length(sym(4)).l2 == 2
    assert two_length(cyclic(6)).l2 == 1
    assert two_length(cyclic(3)).l2 == 0
    assert two_length(special_linear(3, 2)).l2 == 1
    with pytest.raises(GroupError):
        two_length(alt(5))


@pytest.mark.parametrize("r,l2", [("alt:5", 1), ("sym:5", 2), ("SL:q=5,d=2", 1)])
def test_max_two_length_over_solvable(r, l2):
    assert max_two_length_over_solvable(recipe(r)) == l2


small = st.integers(4, 6).flatmap(lambda n: st.lists(
    st.permutations(list(range(1, n + 1))), min_size=1, max_size=2))


@settings(max_examples=25)
@given(small)
def test_radical_is_normal_and_solvable(raw):
    gens = [Permutation.from_images(p) for p in raw]
    G = Group(len(raw[0]), gens)
    R = solvable_radical(G)
    assert R.is_normal_in(G)
    assert R.is_subgroup_of(G)
    assert is_solvable(R)
    for M in minimal_normal_subgroups(G):
        assert M.is_normal_in(G)
