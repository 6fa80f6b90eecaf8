"""One test per acceptance criterion; each records a PASS/FAIL line.

Run standalone with ``python3 tests/test_acceptance.py`` to print only the
criterion lines.
"""
import time

import pytest

from nonsolvable import verify as V
from nonsolvable.constructions import from_recipe, solvable_l2_witness, wreath_tower_A5
from nonsolvable.perm import element_order
from nonsolvable.rarefied import check_rarefied, find_rarefied_subgroup
from nonsolvable.rs_series import nonsolvable_length
from nonsolvable.structure import p_core, two_length


def _summary(reports) -> str:
    bad = [f"{r.instance}: {r.verdict}" for r in reports if r.verdict != "pass"]
    return f"{len(reports) - len(bad)}/{len(reports)} pass" + (f"; {', '.join(bad[:5])}" if bad else "")


def test_criterion_01_tower_lambda(record_criterion):
    t0 = time.perf_counter()
    values = []
    for n in (1, 2, 3):
        r = nonsolvable_length(wreath_tower_A5(n).group)
        values.append((r.value, r.certified))
    dt = time.perf_counter() - t0
    ok = values == [(1, True), (2, True), (3, True)] and dt < 120
    record_criterion(1, ok, f"lambda(W_1..W_3) = {[v for v, _ in values]} in {dt:.1f}s")
    assert ok


def test_criterion_02_lambda_m(record_criterion):
    t0 = time.perf_counter()
    reports = V.verify_lambda_m(5, 630)
    dt = time.perf_counter() - t0
    ok = len(reports) == 626 and all(r.verdict == "pass" for r in reports) and dt < 300
    record_criterion(2, ok, f"m = 5..630: {_summary(reports)} in {dt:.1f}s")
    assert ok


def test_criterion_03_lambda_F(record_criterion):
    reports = V.verify_lambda_F([(4, 2, 0), (4, 2, 1)])
    values = [r.computed["lambda"] for r in reports]
    degrees = [from_recipe(f"GLwr:q=4,d=2,n={n}").group.degree for n in (0, 1)]
    ok = values == [1, 2] and degrees == [15, 75] and all(r.verdict == "pass" for r in reports)
    record_criterion(3, ok, f"lambda(GL(2,4)) = {values[0]} on {degrees[0]} points, "
                            f"wreath on {degrees[1]} points = {values[1]}")
    assert ok


def test_criterion_04_exponent(record_criterion):
    orders = []
    inside = True
    for n in (1, 2, 3):
        W, x = V.exponent_witness(n)
        orders.append(element_order(x))
        inside &= W.contains(x)
    ok = orders == [2, 4, 8] and inside
    record_criterion(4, ok, f"element orders {orders} in W_1..W_3")
    assert ok


def test_criterion_05_bound1(record_criterion):
    reports = V.verify_bound1()
    pairs = {r.instance: (r.computed["lambda"], r.computed["L2"]) for r in reports}
    ok = len(reports) == 8 and all(r.verdict == "pass" for r in reports)
    record_criterion(5, ok, f"(lambda, L2): {pairs}")
    assert ok


def test_criterion_06_rarefied(record_criterion):
    sl = check_rarefied(from_recipe("SL:q=5,d=2").group)
    a7 = from_recipe("alt:7").group
    r7 = check_rarefied(a7)
    H, rep = find_rarefied_subgroup(a7, seed=0)
    ok = (sl.strict_verdict is True and sl.n == 1
          and r7.strict_verdict is False and "component order 2520 ∉ 𝓛" in r7.reasons
          and H.order == 360 and H.is_subgroup_of(a7) and rep.strict_verdict is True)
    record_criterion(6, ok, f"SL(2,5) strict={sl.strict_verdict} n={sl.n}; A7 strict={r7.strict_verdict} "
                            f"{r7.reasons}; witness order {H.order}")
    assert ok


def test_criterion_07_rarefied_closure(record_criterion):
    reports = V.verify_rarefied_closure()
    ok = bool(reports) and all(r.verdict == "pass" for r in reports)
    record_criterion(7, ok, _summary(reports))
    assert ok


def test_criterion_08_oracle(record_criterion):
    t0 = time.perf_counter()
    groups = {k: G for k, G in V.corpus(V.ORACLE_CORPUS).items() if G.order <= 2000}
    reports = V.oracle_cross_check(groups)
    dt = time.perf_counter() - t0
    ok = len(reports) == len(groups) and all(r.verdict == "pass" for r in reports) and dt < 600
    record_criterion(8, ok, f"{sorted(groups)}: {_summary(reports)} in {dt:.1f}s")
    assert ok


def test_criterion_09_subdirect(record_criterion):
    reports = V.verify_subdirect(50, seed=0)
    ok = len(reports) == 50 and all(r.verdict == "pass" for r in reports)
    record_criterion(9, ok, _summary(reports))
    assert ok


def test_criterion_10_generators(record_criterion):
    reports = [V.verify_generators(from_recipe(r).group, 200, 0, r) for r in ("alt:5", "W:2")]
    ok = all(r.verdict == "pass" for r in reports)
    detail = "; ".join(f"{r.instance}: {r.verdict} after {r.computed.get('trials')} trials" for r in reports)
    record_criterion(10, ok, detail)
    assert ok


def test_criterion_11_solvable_witness(record_criterion):
    values = []
    for n in (1, 2):
        H = solvable_l2_witness(n).group
        O2 = p_core(H, 2)
        values.append(two_length(H, modulo=O2).l2)
    ok = all(v >= n for v, n in zip(values, (1, 2)))
    record_criterion(11, ok, f"l2(H_n/O_2) = {values} for n = 1, 2")
    assert ok


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
