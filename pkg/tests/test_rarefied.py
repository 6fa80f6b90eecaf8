import pytest

import brute
from nonsolvable.actions import CapExceeded
from nonsolvable.constructions import alt, from_recipe, special_linear, sym, wreath_tower_A5
from nonsolvable.group import Group, GroupError, normal_closure, trivial_group
from nonsolvable.perm import Permutation
from nonsolvable.rarefied import (check_rarefied, extends_test, find_rarefied_subgroup,
                                  lambda_additivity, quotient_stays_rarefied)
from nonsolvable.structure import solvable_radical


def cyc(n, *cycles):
    return Permutation.from_cycles(n, cycles)


def test_sl25_is_strong_rarefied():
    rep = check_rarefied(special_linear(5, 2))
    assert rep.n == 1
    assert rep.strict_verdict is True and rep.strong_verdict is True
    assert rep.cond_frattini == [True]


def test_a7_fails_on_component_class():
    rep = check_rarefied(alt(7))
    assert rep.strict_verdict is False
    assert rep.cond_components_in_L == [False]
    assert any("2520" in r for r in rep.reasons)


def test_s5_strict_but_not_strong():
    rep = check_rarefied(sym(5))
    assert rep.strict_verdict is True and rep.strong_verdict is False


def test_frattini_condition_can_fail():
    rep = check_rarefied(from_recipe("product:alt:4;alt:5").group)
    assert rep.strict_verdict is False
    assert False in rep.cond_frattini


def test_solvable_group_is_vacuously_rarefied():
    rep = check_rarefied(sym(4))
    assert rep.n == 0 and rep.strict_verdict is True and rep.strong_verdict is False


def test_report_json_shape():
    d = check_rarefied(alt(5)).to_dict()
    assert d["n"] == 1 and d["strict_verdict"] is True
    assert set(d) >= {"cond_unique_min_normal", "cond_components_in_L", "cond_frattini", "mode"}


def test_extends_a4_in_a5_to_s5():
    S5 = sym(5)
    A5 = alt(5)
    A4 = Group(5, [cyc(5, [1, 2, 3]), cyc(5, [2, 3, 4])])
    assert extends_test(A4, A5, S5)


def test_extends_trivial_cases():
    A5 = alt(5)
    assert extends_test(A5, A5, sym(5))
    assert extends_test(A5.point_stabilizer(1), A5, A5)


def test_extends_false_case_matches_brute_force():
    S4 = sym(4)
    V4 = Group(4, [cyc(4, [1, 2], [3, 4]), cyc(4, [1, 3], [2, 4])])
    K = Group(4, [cyc(4, [1, 2], [3, 4])])
    # brute force: N_{S4}(K) then |V4 N| against 24
    Kset = brute.closure(4, [tuple(g.arr) for g in K.gens])
    N = [g for g in brute.all_perms(4)
         if {brute.compose(brute.compose(_inv(g), k), g) for k in Kset} == Kset]
    Vset = brute.closure(4, [tuple(g.arr) for g in V4.gens])
    prod = {brute.compose(v, n) for v in Vset for n in N}
    assert (len(prod) == 24) is extends_test(K, V4, S4) is False


def test_extends_requires_normal_x():
    with pytest.raises(GroupError):
        extends_test(trivial_group(4), sym(4).point_stabilizer(1), sym(4))


def _inv(g):
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


@pytest.mark.parametrize("r,order", [("sym:5", 60), ("alt:7", 360), ("wreath:alt:5;cyc:2", 60),
                                     ("SL:q=5,d=2", 120)])
def test_find_rarefied_subgroup(r, order):
    G = from_recipe(r).group
    H, rep = find_rarefied_subgroup(G, seed=0)
    assert H.order == order and H.is_subgroup_of(G)
    assert rep.strict_verdict is True and rep.n == 1


def test_find_rarefied_budget():
    with pytest.raises(CapExceeded):
        find_rarefied_subgroup(alt(7), seed=0, budget=0)


def test_quotient_closure_examples():
    G = special_linear(5, 2)
    Z = solvable_radical(G)
    assert quotient_stays_rarefied(G, Z).verdict == "pass"
    assert quotient_stays_rarefied(G, trivial_group(G.degree)).verdict == "pass"
    assert quotient_stays_rarefied(G, G).verdict == "pass"


def test_lambda_additivity_examples():
    G = special_linear(5, 2)
    assert lambda_additivity(G, solvable_radical(G)).verdict == "pass"
    assert lambda_additivity(G, G).verdict == "pass"


def test_lambda_additivity_with_tower_certificate():
    b = wreath_tower_A5(2)
    W = b.group
    base = W.subgroup([g for g in W.gens if max(g.support()) < 25 and
                       len({p // 5 for p in g.support()}) == 1])
    N = normal_closure(W, base.gens)
    assert N.order == 60 ** 5
    rep = lambda_additivity(W, N, certificate=b.claimed_certificate)
    assert rep.verdict == "pass"
    assert rep.computed == {"lambda_G": 2, "lambda_N": 1, "lambda_quotient": 1}
