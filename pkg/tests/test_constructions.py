import pytest

import brute
from nonsolvable.actions import CapExceeded
from nonsolvable.constructions import (alt, cyclic, dihedral, floor_log, from_recipe, general_linear,
                                       lambda_m_witness, linear_lower_bound_group,
                                       solvable_l2_witness, special_linear, subdirect_product, sym,
                                       wreath_tower, wreath_tower_A5)
from nonsolvable.group import GroupError
from nonsolvable.rs_series import lam, verify_certificate


def brute_order(G):
    return len(brute.closure(G.degree, [tuple(g.arr) for g in G.gens]))


@pytest.mark.parametrize("q,d,order", [(2, 2, 6), (3, 2, 48), (4, 2, 180), (2, 3, 168), (5, 2, 480)])
def test_general_linear_orders(q, d, order):
    G = general_linear(q, d)
    assert G.degree == q ** d - 1
    assert brute_order(G) == order == G.order


@pytest.mark.parametrize("q,d,order", [(3, 2, 24), (5, 2, 120), (4, 2, 60)])
def test_special_linear_orders(q, d, order):
    assert brute_order(special_linear(q, d)) == order


@pytest.mark.parametrize("G,order", [(cyclic(7), 7), (dihedral(5), 10), (dihedral(4), 8),
                                     (alt(6), 360), (sym(5), 120)])
def test_small_families(G, order):
    assert brute_order(G) == order


def test_wreath_tower_orders():
    assert wreath_tower(1).order == 60
    assert wreath_tower(2).order == 60 ** 6
    assert wreath_tower(3).order == 60 ** 31


def test_tower_certificate_height_three():
    b = wreath_tower_A5(3)
    assert b.claimed_lambda == 3
    assert verify_certificate(b.group, b.claimed_certificate).verdict == "pass"


@pytest.mark.parametrize("num,den,base,expected", [
    (5, 1, 5, 1), (24, 1, 5, 1), (25, 1, 5, 2), (124, 1, 5, 2), (125, 1, 5, 3),
    (4, 2, 5, 0), (10, 2, 5, 1), (3, 3, 5, 0),
])
def test_floor_log(num, den, base, expected):
    assert floor_log(num, den, base) == expected


def test_lambda_m_witness_padding():
    b = lambda_m_witness(26)
    assert b.group.degree == 26 and b.claimed_lambda == 2
    assert lam(b.group) == 2


def test_linear_lower_bound_group():
    b = linear_lower_bound_group(4, 2, 1)
    assert b.group.degree == 75
    assert b.claimed_lambda == 2


@pytest.mark.parametrize("r,order", [
    ("alt:5", 60), ("sym:4", 24), ("cyc:6", 6), ("dih:5", 10), ("GL:q=3,d=2", 48),
    ("SL:q=5,d=2", 120), ("product:alt:4;cyc:2", 24), ("wreath:cyc:2;cyc:2", 8), ("W:1", 60),
    ("witness:1", 10), ("lambda-m:7", 60),
])
def test_recipes(r, order):
    assert from_recipe(r).group.order == order


@pytest.mark.parametrize("r", ["bogus:3", "alt:x", "GL:q=3", "wreath:alt:5", "GL:q3,d=2"])
def test_bad_recipes(r):
    with pytest.raises(GroupError):
        from_recipe(r)


def test_refused_sizes():
    with pytest.raises(CapExceeded):
        from_recipe("W:5")
    with pytest.raises(CapExceeded):
        from_recipe("alt:20000")


def test_solvable_witness_orders():
    assert solvable_l2_witness(1).group.order == 10
    assert solvable_l2_witness(2).group.order == 10 ** 6


def test_subdirect_kernels():
    A5, S4 = alt(5), sym(4)
    b = subdirect_product([A5, S4])
    assert b.group.order == 1440
    assert [K.order for K in b.extras["kernels"]] == [24, 60]
    diag = subdirect_product([A5, A5], [(0, 1, list(A5.gens))])
    assert diag.group.order == 60
    assert [K.order for K in diag.extras["kernels"]] == [1, 1]
