# SPDX-License-Identifier: Apache-2.0
import pytest

import pfint


def test_polynomials():
    f = pfint.BiPoly("y - x^2")
    assert str(f) == "-x^2 + y"
    assert f.evaluate("2", "4") == "0"
    assert pfint.gcd("x^2*y", "x*y^2") == pfint.BiPoly("x*y")
    assert pfint.resultant("y - x^2", "y + x^2", "y") == "2*x^2"
    with pytest.raises(ValueError):
        pfint.parse("x + z")


def test_field_and_first_integral():
    factors = [("x", 2), ("y", 1)]
    x = pfint.construct_field(factors)
    assert x.P == "x" and x.Q == "-2*y"
    assert pfint.lie_derivative(x, pfint.expand(factors)).is_zero()
    red, g = pfint.reduce_field(pfint.VectorField("x^2", "x*y"))
    assert (str(red.P), str(red.Q), str(g)) == ("x", "y", "x")
    assert pfint.is_hamiltonian(pfint.VectorField("x", "-y")) == "x*y"
    assert pfint.is_hamiltonian(x) is None


def test_critical_values_and_cz():
    cv = pfint.critical_remarkable_values("x^2*y")
    assert cv["rational"] == ["0"] and cv["count"] == 1
    assert pfint.critical_remarkable_values("x*y")["count"] == 0
    assert pfint.variety_empty(["x", "x + 1"])["status"] == "holds"
    w = pfint.variety_empty(["x^2 + 1", "y"])
    assert w["status"] == "fails"
    assert abs(abs(w["witness"]["x_box"][1]) - 1) < 1e-12
    rep = pfint.cz_report([("y - x^2", 1), ("y + x^2", 2)])
    assert rep["overall"]["status"] == "fails"
    assert rep["ii"]["status"] == "fails"


def test_linearize_and_orbits():
    cert = pfint.linearize([("x", 2), ("y", 1)], pfint.VectorField("x", "-2*y"))
    assert cert["verified"] and cert["D"] == "2" and cert["G"] == "1"
    with pytest.raises(pfint.Error):
        pfint.linearize([("x", 2), ("y", 1)], pfint.VectorField("x", "-3*y"))
    pts = pfint.integrate_orbit(pfint.VectorField("x", "-y"), 1.0, 1.0, 1e-2, 100)
    assert len(pts) == 101
    drift = pfint.conservation_drift("x^2*y", pfint.VectorField("x", "-2*y"), 0.5, 0.5, 1e-3, 1000)
    assert drift < 1e-6
