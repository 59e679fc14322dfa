import json

import caliber


CAY = ["1", "1", "1", "1", "-1", "-1", "-1"]


def test_cayley_constants():
    assert caliber.cayley() == CAY
    assert caliber.comass_exact(CAY) == "1"
    assert caliber.wirtinger_ratio(CAY) == "14"
    assert caliber.psi_inv(CAY) == ["7/2"] + ["-1/2"] * 7


def test_decompose_trivial():
    assert caliber.decompose_convex(CAY) == ["1", "0", "0", "0", "0", "0", "0", "0"]
    outside = ["2", "0", "0", "0", "0", "0", "0"]
    assert caliber.decompose_convex(outside) is None


def test_stabilizer_dimension():
    form_json = caliber.from_span_json(CAY)
    assert caliber.stabilizer_dim(form_json) == 21


def test_numeric_comass_close_to_exact():
    form_json = caliber.from_span_json(CAY)
    result = caliber.comass_numeric(form_json, restarts=12, seed=7)
    assert result["converged"]
    assert abs(result["value"] - 1.0) < 1e-6


def test_normal_form_identity_start():
    form_json = caliber.from_span_json(CAY)
    result = caliber.normal_form(form_json, restarts=4, seed=7)
    assert result["success"]
    assert result["residual"] < 1e-8
    assert result["restarts_used"] == 1


def test_catalog_shape():
    catalog = json.loads(caliber.catalog_json())
    assert len(catalog["entries"]) == 9
    assert catalog["entries"][0]["stab_dim"] == 21
    assert {ce["label"] for ce in catalog["counterexamples"]} == {"omega_plus", "mu"}
    assert all(ce["comass"] == "2" for ce in catalog["counterexamples"])


def test_random_form_roundtrip_deterministic():
    a = caliber.random_form_json(123, "self_dual")
    b = caliber.random_form_json(123, "self_dual")
    assert a == b
    parsed = json.loads(a)
    assert parsed["n"] == 8 and parsed["k"] == 4
