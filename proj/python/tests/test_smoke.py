import pytest

import kmspherical as k

A2 = [[2, -1], [-1, 2]]
AFF = [[2, -2], [-2, 2]]


def test_classify():
    assert k.classify(A2)["blocks"][0]["kind"] == "Finite"
    assert k.classify(AFF)["blocks"][0]["kind"] == "Affine"


def test_invalid_gcm_raises():
    with pytest.raises(k.KmsError, match="AsymmetricZero"):
        k.classify([[2, -1], [0, 2]])


def test_roots_and_ball():
    roots = k.positive_roots(AFF, 2)
    assert {"root": [1, 1], "mult": 1, "real": False} in roots
    assert len(k.weyl_ball(A2, 3)) == 6


def test_dl_apply_rank_one():
    out = k.dl_apply([[2]], [0], [2])
    assert out["terms"] == [
        {"offset": [1], "min_power": 0, "coeff": [1, -1]},
        {"offset": [2], "min_power": 0, "coeff": [1]},
    ]
    with pytest.raises(k.KmsError, match="NonReducedWord"):
        k.dl_apply(A2, [0, 0], [1, 1])


def test_satake_matches_census():
    s = k.satake([[2]], [2], q="2")
    assert [t["coeff"] for t in s["terms"]] == ["1", "1/2", "1"]
    c = k.spherical_census(1, 4, 2)
    assert c["census"] == {"1": 1, "0": 1, "-1": 4}
    assert list(c["census"]) == ["1", "0", "-1"]


def test_gk_and_iwahori():
    g = k.gk_census(3, 2, 3)
    assert g["census"] == {"0": 1, "-1": 2, "-2": 6, "-3": 18}
    assert k.iwahori_census(1, 4, 2)["sums_match"]


def test_poincare_and_cfunction():
    assert k.poincare(A2, [1, 0]) == {"min_power": 0, "coeff": [1, 1]}
    assert k.cfunction(A2, "2") == "27/8"


def test_upsilon_and_approximation():
    u = k.upsilon(AFF, 2, q="formal")
    assert u["omitted_factors"] == ["m-factor"]
    rep = k.approximation_check([[2]], [[2], [4], [6]], 2)
    assert rep["matches_upsilon"] is True


def test_verify_all():
    assert all(r["passed"] for r in k.verify_all())
