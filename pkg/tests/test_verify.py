import json
import random

import pytest

from nonsolvable import verify as V
from nonsolvable.constructions import alt, special_linear, sym
from nonsolvable.rs_series import rs_series, verify_certificate


def brute_order(arr):
    ident = list(range(len(arr)))
    x, k = list(arr), 1
    while x != ident:
        x = [arr[i] for i in x]
        k += 1
    return k


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exponent_witness(n):
    W, x = V.exponent_witness(n)
    assert brute_order(x.arr.tolist()) == 2 ** n
    assert W.contains(x)
    assert V.verify_exponent(n).verdict == "pass"


def test_lambda_m_small_range():
    reps = V.verify_lambda_m(5, 26)
    assert all(r.verdict == "pass" for r in reps), [r.details for r in reps if r.verdict != "pass"]


def test_lambda_F_cases():
    reps = V.verify_lambda_F([(4, 2, 0), (4, 2, 1), (2, 3, 0)])
    assert [r.computed["lambda"] for r in reps] == [1, 2, 1]
    assert all(r.verdict == "pass" for r in reps)


def test_generators_trivial_for_solvable():
    rep = V.verify_generators(sym(4), trials=5)
    assert rep.verdict == "pass"


def test_generators_for_a5():
    rep = V.verify_generators(alt(5), trials=50, seed=1, name="A5")
    assert rep.verdict == "pass"


@pytest.mark.parametrize("G", [sym(5), special_linear(5, 2), alt(6)])
def test_negative_control(G):
    assert V.negative_control(G).verdict == "pass"


def test_corrupted_certificate_differs():
    cert = rs_series(sym(5))
    bad = V.corrupt_certificate(cert)
    assert verify_certificate(sym(5), bad).verdict == "fail"
    assert verify_certificate(sym(5), cert).verdict == "pass"


def test_oracle_cross_check_small():
    reps = V.oracle_cross_check({"S4": sym(4), "SL25": special_linear(5, 2)})
    assert all(r.verdict == "pass" for r in reps)


def test_random_subdirect_is_reproducible():
    a = V.random_subdirect(random.Random(3))
    b = V.random_subdirect(random.Random(3))
    assert a[0] == b[0]
    assert a[1].group.order == b[1].group.order


def test_subdirect_few():
    reps = V.verify_subdirect(5, seed=11)
    assert len(reps) == 5 and all(r.verdict == "pass" for r in reps)


def test_reports_json_round_trip():
    text = V.reports_json([V.verify_exponent(1)])
    doc = json.loads(text)
    assert doc[0]["verdict"] == "pass"
