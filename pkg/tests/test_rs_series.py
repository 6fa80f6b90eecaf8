import pytest

from nonsolvable.constructions import (alt, from_recipe, special_linear, subdirect_product, sym,
                                       wreath_tower, wreath_tower_A5)
from nonsolvable.group import Group, GroupError, direct_product, trivial_group, wreath_imprimitive
from nonsolvable.rs_series import (Level, RSCertificate, lam, lambda_preserving_orbit,
                                   lambda_subdirect, nonsolvable_length, rs_series,
                                   verify_certificate)


@pytest.mark.parametrize("G,orders,lam_", [
    (sym(4), [24], 0),
    (sym(5), [1, 60, 120], 1),
    (special_linear(5, 2), [2, 120, 120], 1),
    (alt(5), [1, 60, 60], 1),
])
def test_series_terms(G, orders, lam_):
    cert = rs_series(G)
    assert [T.order for _, T in cert.terms()] == orders
    assert cert.lam == lam_ and cert.certified


def test_s5_certificate_json():
    doc = rs_series(sym(5)).to_json()
    assert doc["lambda"] == 1
    assert [t["kind"] for t in doc["terms"]] == ["R", "S", "R"]
    assert doc["terms"][1]["evidence"]["components"][0]["in_L"]


def test_iterated_wreath_of_a5():
    assert lam(wreath_imprimitive(alt(5), alt(5))) == 2


def test_wreath_tower_two():
    assert lam(wreath_tower(2)) == 2


@pytest.mark.parametrize("G", [sym(4), sym(5), special_linear(5, 2), wreath_tower(2)])
def test_computed_certificates_verify(G):
    rep = verify_certificate(G, rs_series(G))
    assert rep.verdict == "pass", rep.details


def test_false_lambda_zero_claim_fails():
    A5 = alt(5)
    bogus = RSCertificate([Level(A5, None)], provenance="bogus")
    rep = verify_certificate(A5, bogus)
    assert rep.verdict == "fail"


def test_trivial_group_has_empty_certificate():
    T = trivial_group(3)
    assert lam(T) == 0
    assert verify_certificate(T, RSCertificate([], "empty")).verdict == "pass"
    assert verify_certificate(alt(5), RSCertificate([], "empty")).verdict == "fail"


def test_built_tower_certificate():
    b = wreath_tower_A5(2)
    rep = verify_certificate(b.group, b.claimed_certificate)
    assert rep.verdict == "pass" and b.claimed_lambda == 2


def test_lambda_subdirect_direct_product():
    b = subdirect_product([alt(5), sym(4)])
    assert lambda_subdirect(b.group, b.extras["kernels"]) == 1


def test_lambda_subdirect_diagonal():
    A5 = alt(5)
    b = subdirect_product([A5, A5], [(0, 1, list(A5.gens))])
    assert b.group.order == 60
    assert lambda_subdirect(b.group, b.extras["kernels"]) == 1


def test_lambda_subdirect_rejects_non_normal():
    S4 = sym(4)
    with pytest.raises(GroupError):
        lambda_subdirect(S4, [S4.point_stabilizer(1)])


def test_lambda_preserving_orbit():
    G = direct_product(sym(4), wreath_imprimitive(alt(5), alt(5)))
    orbit, rep = lambda_preserving_orbit(G)
    assert rep.verdict == "pass" and rep.computed == 2
    assert min(orbit) > 4


def test_lambda_result_dict():
    d = nonsolvable_length(sym(5)).to_dict()
    assert d == {"lambda": 1, "certified": True, "mode": "exact", "route": "rs-series"}


def test_recipe_lambda():
    assert lam(from_recipe("wreath:alt:5;cyc:2").group) == 1
