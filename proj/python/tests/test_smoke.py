import json
import math
import os
from pathlib import Path

import pytest

import spinlie

SCENES = Path(os.environ.get("SPINLIE_SCENE_DIR", Path(__file__).resolve().parents[2] / "scenes"))


@pytest.fixture(scope="module")
def minkowski():
    return spinlie.load_scene(str(SCENES / "minkowski.scene"))


def g(a):
    return spinlie.Multivector.basis(a)


def test_algebra():
    one = spinlie.Multivector.scalar(1.0)
    assert g(0) * g(0) == one
    assert g(1) * g(1) == -1.0 * one
    assert g(0) * g(1) + g(1) * g(0) == spinlie.Multivector()
    b = spinlie.wedge(g(0), g(1))
    assert b.components() == {"01": 1.0}
    assert b["01"] == 1.0
    assert str(b) == '{"01": 1}'
    r = spinlie.exp_bivector(0.5 * b)
    assert math.isclose(r["s"], math.cosh(0.5), rel_tol=1e-15)
    assert spinlie.max_norm(r * r.reversion() - one) < 1e-14


def test_polar():
    psi = spinlie.Multivector({"s": 1.0, "12": 0.3, "0123": -0.2, "03": 0.1})
    p = spinlie.polar_decompose(psi)
    assert p.rho > 0
    assert spinlie.max_norm(spinlie.polar_reconstruct(p) - psi) < 1e-12
    with pytest.raises(spinlie.SingularSpinor):
        spinlie.polar_decompose(spinlie.Multivector({"s": 1.0, "01": 1.0}))
    with pytest.raises(spinlie.MathError):
        spinlie.polar_decompose(spinlie.Multivector({"s": 1.0, "01": 1.0}))


def test_expression():
    e = spinlie.parse_expression("x^2 * sin(t)")
    v, grad, hess = e.jet([0.5, 2.0, 0.0, 0.0])
    assert math.isclose(v, 4 * math.sin(0.5))
    assert math.isclose(grad[0], 4 * math.cos(0.5))
    assert math.isclose(grad[1], 4 * math.sin(0.5))
    assert math.isclose(hess[0][1], 4 * math.cos(0.5))
    assert math.isclose(spinlie.parse_expression("-t^2").eval([3, 0, 0, 0]), -9.0)
    with pytest.raises(spinlie.SyntaxError):
        spinlie.parse_expression("2x")
    with pytest.raises(spinlie.UnknownIdentifier):
        spinlie.parse_expression("w + 1")
    with pytest.raises(spinlie.DomainError):
        spinlie.parse_expression("log(t)").eval([0, 0, 0, 0])


def test_scene_and_lie(minkowski):
    assert minkowski.name == "minkowski"
    assert "boost" in minkowski.vectors
    assert "psi" in minkowski.fields
    p = [0.1, 0.2, 0.3, 0.4]
    assert spinlie.lie(minkowski, "boost", "gamma0", p, "spinor") == g(1)
    assert spinlie.lie(minkowski, "timetrans", "field:unit", p).components() == {}
    cols = spinlie.lie(minkowski, "boost", "field:psi", p, "dirac")
    assert len(cols) == 4 and len(cols[0]) == 4
    rep = spinlie.represent(spinlie.lie(minkowski, "boost", "field:psi", p))
    for i in range(4):
        for k in range(4):
            assert abs(cols[i][k] - rep[k][i]) < 1e-12
    with pytest.raises(spinlie.InputError):
        spinlie.lie(minkowski, "boost", "field:nope", p)
    with pytest.raises(spinlie.InputError):
        spinlie.lie(minkowski, "boost", "gamma0", p, "sideways")


def test_lift(minkowski):
    r = spinlie.lift(minkowski, "boost", [0.1, 0.2, 0.3, 0.4], 1.0)
    assert math.isclose(r["u"]["s"], math.cosh(0.5), rel_tol=1e-15)
    assert math.isclose(r["u"]["01"], math.sinh(0.5), rel_tol=1e-15)
    assert r["gram_residual"] <= 1e-12
    assert len(r["lambda"]) == 4


def test_verify(minkowski):
    rep = spinlie.verify(minkowski, seed=3, samples=4)
    assert rep["pass"] is True
    assert rep["seed"] == 3
    assert {s["name"] for s in rep["summary"]} >= {"killing_agreement", "formula_equivalence"}
    again = spinlie.verify_json(minkowski, seed=3, samples=4, threads=1)
    assert json.loads(again) == rep
    assert spinlie.verify(minkowski, samples=0)["records"] == []


def test_scene_validation():
    text = json.dumps({
        "coordinates": ["t", "x", "y", "z"],
        "metric": [["1", "0.5", "0", "0"], ["0", "-1", "0", "0"], ["0", "0", "-1", "0"], ["0", "0", "0", "-1"]],
        "sample": {"seed": 1, "count": 2, "box": [[0, 1], [0, 1], [0, 1], [0, 1]]},
    })
    with pytest.raises(spinlie.SceneError, match="metric not symmetric"):
        spinlie.parse_scene(text)
