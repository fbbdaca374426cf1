import math

import numpy as np
import pytest

import levylab as ll


def bs_put(s, k, r, q, sigma, t):
    sd = sigma * math.sqrt(t)
    d1 = (math.log(s / k) + (r - q + 0.5 * sigma * sigma) * t) / sd
    d2 = d1 - sd
    n = lambda x: 0.5 * math.erfc(-x / math.sqrt(2.0))
    return k * math.exp(-r * t) * n(-d2) - s * math.exp(-q * t) * n(-d1)


def test_martingale_exponent():
    m = ll.LevyModel(0.05, 0.0, 0.2, law=ll.Kou(0.1, 20.0, 1.0, 10.0))
    assert abs(m.psi(-1j)) < 1e-12
    assert m.kind == "kou"


def test_european_matches_black_scholes():
    m = ll.LevyModel(0.05, 0.02, 0.25)
    for s in (80.0, 100.0, 120.0):
        assert ll.european_put(m, 0.5, s, 100.0) == pytest.approx(
            bs_put(s, 100.0, 0.05, 0.02, 0.25, 0.5), abs=1e-6)


def test_regime_and_xi():
    m = ll.LevyModel(0.05, 0.05, 0.2, atoms=[ll.Atom(math.log(2.0), 0.05)])
    rep = ll.classify_regime(m, 100.0)
    assert rep.d < 0
    assert rep.boundary_limit == ll.BoundaryLimit.Xi
    assert str(rep) == "d<0, limit=xi, rate=Thm3.1c"
    assert ll.xi_limit(m, 100.0) == pytest.approx(200.0 / 3.0, rel=1e-10)
    with pytest.raises(ll.RegimeMismatch):
        ll.xi_limit(ll.LevyModel(0.05, 0.0, 0.2), 100.0)


def test_american_surface():
    m = ll.LevyModel(0.05, 0.0, 0.2)
    s = ll.solve_american(m, 100.0, 1.0, n_x=1001, n_t=200)
    assert s.values.shape == (len(s.tau), len(s.x))
    assert 6.0 < s.price(100.0) < 6.2
    assert s.violations() == 0
    tau, b = s.boundary()
    assert np.all(b[1:] <= 100.0)
    assert b[-1] < b[1]


def test_simulation_seeded():
    m = ll.LevyModel(0.05, 0.0, 0.2, law=ll.Merton(1.0, -0.1, 0.15))
    a = ll.simulate_increments(m, 1.0, 1000, 5)
    b = ll.simulate_increments(m, 1.0, 1000, 5)
    assert isinstance(a, np.ndarray)
    assert np.array_equal(a, b)


def test_load_model_and_errors():
    m = ll.load_model("[model]\nkind = vg\nr = 0.05\nc = 1\ng = 10\nm = 10\n")
    assert m.kind == "vg"
    with pytest.raises(ll.InvalidInput):
        ll.load_model("[model]\nkind = bs\nr = 0.05\nsigma = 0.2\nbogus = 1\n")
    with pytest.raises(ll.InvalidModel):
        ll.LevyModel(0.05, 0.0, -0.2)


def test_stopping_threshold():
    assert ll.y_star_lattice(dx=4e-3) == pytest.approx(0.6387, rel=0.01)
    assert ll.lattice_local_time_mean(2e-3) == pytest.approx(math.sqrt(2 / math.pi), rel=0.01)


def test_rate_experiment_small():
    r = ll.rate_experiment(ll.LevyModel(0.05, 0.0, 0.2), ll.theta_ladder(1e-1, 1e-4, 10))
    assert r["rate"] == "Thm3.5/4.1"
    assert len(r["theta"]) == 10
    assert np.all(r["ratio"] > 0.5)
