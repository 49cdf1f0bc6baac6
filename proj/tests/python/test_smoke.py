import math

import pytest

import thb


def test_analyze_report():
    rep = thb.analyze(0.1, 0.9, 0.5)
    assert rep["schema"] == "thb/1"
    assert rep["N0"] is True
    assert rep["turing"]["first_curve"]["k1"] == 1
    assert rep["normal_form"]["point"]["tau_star"] == pytest.approx(0.2171, abs=1e-3)
    assert rep["normal_form"]["planar"]["case"] == "Ia"


def test_scalar_helpers():
    u, v = thb.equilibrium(0.1, 0.9)
    assert u == pytest.approx(1.0)
    assert v == pytest.approx(0.9)
    k1, eps, d_lo, d_hi = thb.first_turing_curve(0.1, 0.9, 0.5)
    assert k1 == 1
    assert eps == pytest.approx(0.1007, abs=1e-4)
    assert thb.eps_star(0.1, 0.9, 0.5, 1) == pytest.approx(eps)
    assert math.isinf(d_hi)

    k1, k2, eps_star, tau_star, omega_star = thb.turing_hopf_point(0.1, 0.9, 0.5)
    assert (k1, k2) == (1, 0)
    assert tau_star == pytest.approx(0.2171, abs=1e-4)
    assert omega_star == pytest.approx(0.9144, abs=1e-4)


def test_region_prediction():
    region, attractors, outside = thb.region_of(0.1, 0.9, 0.5, 0.2171 - 0.05, 0.1007 + 0.05)
    assert region == "D1"
    assert not outside
    assert attractors


def test_precondition_error():
    with pytest.raises(ValueError):
        thb.analyze(0.5, 0.5, 0.5)  # equilibrium violates the stability assumption


def test_simulate():
    out = thb.simulate(
        {
            "params": {"a": 0.1, "b": 0.9, "d": 0.5, "eps": 0.15, "tau": 0.2},
            "grid_points": 32,
            "t_end": 2.0,
            "initial": {
                "u": [{"mode": 0, "amp": 1.0}],
                "v": [{"mode": 0, "amp": 0.9}],
            },
        }
    )
    assert out["spatial"] == "homogeneous"
    assert out["temporal"] == "steady"
    assert len(out["u_final"]) == 32
    assert max(abs(x - 1.0) for x in out["u_final"]) < 1e-8
