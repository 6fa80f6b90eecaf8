import pytest

from nonsolvable.class_l import (identify_simple_by_order, l_membership_for_parameters,
                                 order_psl, order_psl2, order_sz, prime_power)


@pytest.mark.parametrize("order,family,q,in_L", [
    (60, "PSL2", 4, True),
    (168, "PSL2", 7, True),
    (360, "PSL2", 9, True),
    (29120, "Sz", 8, True),
    (5616, "PSL3_3", 3, True),
])
def test_identification(order, family, q, in_L):
    sid = identify_simple_by_order(order)
    assert (sid.family, sid.q, sid.in_L) == (family, q, in_L)


def test_a7_is_outside_l():
    sid = identify_simple_by_order(2520)
    assert sid.family == "Alt" and not sid.in_L


def test_a8_and_psl34_share_an_order():
    sid = identify_simple_by_order(20160)
    assert sid.flag == "ambiguous"
    assert not sid.in_L


def test_unrecognized_order():
    sid = identify_simple_by_order(61)
    assert sid.flag == "unrecognized" and not sid.in_L


@pytest.mark.parametrize("family,q,expected", [
    ("PSL2", 8, True), ("PSL2", 64, False), ("PSL2", 81, True), ("Sz", 32, True),
    ("PSL2", 5, True), ("PSL2", 27, True),
])
def test_membership_by_parameters(family, q, expected):
    assert l_membership_for_parameters(family, q) is expected


def test_order_formulas():
    assert order_psl2(5) == 60
    assert order_psl2(8) == 504
    assert order_sz(8) == 29120
    assert order_psl(3, 2) == 168
    assert order_psl(3, 3) == 5616


@pytest.mark.parametrize("n,expected", [(8, (2, 3)), (81, (3, 4)), (7, (7, 1)), (12, None), (1, None)])
def test_prime_power(n, expected):
    assert prime_power(n) == expected
