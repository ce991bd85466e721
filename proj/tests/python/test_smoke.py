"""Smoke tests for the pybind11 module. Rationals cross as exact strings."""

import json

import pytest

try:
    from hherbrand import _hherbrand as core
except ImportError:
    try:
        import _hherbrand as core
    except ImportError:
        pytest.skip(
            "_hherbrand not importable; install the package or point "
            "PYTHONPATH at the CMake build directory",
            allow_module_level=True,
        )


def test_identity():
    f = core.PwlFunction.identity()
    assert f.evaluate("7/3") == "7/3"
    assert f.final_slope() == "1"


def test_cyclotomic_phi():
    phi = core.phi_cyclotomic_over_K(3, 2)
    assert phi.vertices() == [("0", "0"), ("2", "1")]
    assert phi.final_slope() == "1/6"
    assert phi.evaluate("5") == "3/2"
    assert phi.is_concave()

    phi_f = core.phi_cyclotomic_over_F(3, 2)
    assert phi_f.evaluate("3") == "7/3"


def test_compose_inverse_roundtrip():
    phi = core.phi_cyclotomic_over_K(3, 2)
    assert phi.compose(phi.inverse()) == core.PwlFunction.identity()


def test_json_roundtrip():
    phi = core.phi_cyclotomic_over_K(3, 2)
    text = phi.to_json()
    assert core.PwlFunction.from_json(text) == phi
    assert json.loads(text)["final_slope"] == "1/6"


def test_resolve_phi_and_index():
    spec = json.dumps({"kind": "cyclotomic", "p": 3, "n": 2, "base": "Qp"})
    assert core.ramification_index(spec) == "6"
    assert core.resolve_phi(spec).evaluate("2") == "1"
    assert core.transport_upper_index("1", spec) == "2"


def test_depth_report():
    spec = json.dumps(
        {"kind": "cyclotomic", "p": 3, "n": 2, "base": "Qp(zeta_p)"})
    report = core.depth_report(spec, "1")
    assert report["parameter_depth"] == "7/3"
    assert report["gap"] == "4/3"
    assert not report["preserved"]
    assert core.character_depth_from_parameter(spec, "7/3") == "1"

    tame = json.dumps({"kind": "tame", "e": 9})
    assert core.depth_report(tame, "5/2")["preserved"]


def test_inflation_locus():
    zeta = json.dumps(
        {"kind": "cyclotomic", "p": 3, "n": 2, "base": "Qp(zeta_p)"})
    assert core.inflation_locus(zeta) == [("0", None)]
    qp = json.dumps({"kind": "cyclotomic", "p": 3, "n": 2, "base": "Qp"})
    assert core.inflation_locus(qp) == [("0", "4/3")]


def test_induced_torus():
    factors = [
        json.dumps({"kind": "tame", "e": 2}),
        json.dumps({"kind": "cyclotomic", "p": 3, "n": 2,
                    "base": "Qp(zeta_p)"}),
    ]
    report = core.induced_torus_depth(factors, ["1", "1"])
    assert report["character_depth"] == "1"
    assert report["parameter_depth"] == "7/3"


def test_errors():
    with pytest.raises(ValueError):
        core.resolve_phi("{\"kind\": \"nope\"}")
    with pytest.raises(ValueError):
        core.parameter_depth(json.dumps({"kind": "tame", "e": 3}), "-1")


def test_verify_quick():
    results = core.verify("cyclotomic", 0, 20)
    assert results and all(r["passed"] for r in results)
