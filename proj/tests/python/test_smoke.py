import math

import numpy as np
import pytest

import vrsmooth as vs


def test_coefficients_sum_to_one():
    for r in (-0.9, -0.3, 0.0, 0.5, 1 / math.sqrt(2)):
        assert sum(vs.coeffs_a(r)) == pytest.approx(1.0, abs=1e-14)
    assert vs.coeffs_a(0.0) == pytest.approx([0.0, 1.0, 0.0])


def test_functionals_and_efficiency():
    f = vs.functionals("epanechnikov")
    assert f["nu20"] == pytest.approx(0.2)
    assert f["nu02"] == pytest.approx(0.6)
    assert vs.c_delta(2.0) == pytest.approx(0.9, abs=1e-9)
    assert vs.gamma_q(0.0) == 1.0
    assert vs.gamma_a(1.0) == pytest.approx(1.22, abs=0.02)


def test_fit_reproduces_lines():
    x, _ = vs.sample("sine", "uniform", 1.0, 300, seed=1)
    y = 1.5 - 2.0 * x
    grid = np.linspace(0.0, 1.0, 21)
    for variant in ("ll", "plus", "minus", "avg"):
        est = vs.fit(x, y, grid, h=0.1, variant=variant, delta=1.0)
        np.testing.assert_allclose(est, 1.5 - 2.0 * grid, atol=1e-9)
    assert vs.fit(x, y, grid, h=0.1, variant="q", r=-0.4)[10] == pytest.approx(0.5, abs=1e-9)


def test_weights_match_fit():
    x, y = vs.sample("bimodal", "truncnormal_a", 1.0, 200, seed=7)
    w = vs.weights(x, 0.4, 0.08, variant="avg", delta=1.0)
    assert w.sum() == pytest.approx(1.0, abs=1e-12)
    assert float(w @ y) == pytest.approx(vs.fit(x, y, np.array([0.4]), h=0.08)[0], abs=1e-12)


def test_sparse_points_are_nan():
    x = np.array([0.1, 0.12, 0.9])
    est = vs.fit(x, x, np.array([0.5]), h=0.01, variant="ll", delta=0.0)
    assert math.isnan(est[0])


def test_interval_and_bandwidth():
    x, y = vs.sample("sine", "uniform", 1.0, 500, seed=3)
    res = vs.interval(x, y, 0.5, 0.05, beta=0.9)
    assert res["lower"] < res["estimate"]
    assert vs.coverage_ratio(0.0, beta=0.5) == pytest.approx(1.0)
    h = vs.h0(-10.0, 1.0, 0.25, 500)
    assert vs.adjust_h(h, variant="ll", delta=0.0) == pytest.approx(h)
    assert vs.adjust_h(h) < h  # smaller variance constant, smaller bandwidth


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        vs.fit(np.array([0.1, 0.2]), np.array([1.0]), np.array([0.5]), h=0.1)
    with pytest.raises(ValueError):
        vs.functionals("cosine")
