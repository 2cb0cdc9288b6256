import math

import numpy as np
import pytest

import ckosc


def test_derived_frequency():
    p = ckosc.validate_params(ckosc.OscillatorParams(m=1, omega0=1, gamma=0.1))
    assert p.omega == pytest.approx(0.998749217771908945789, rel=1e-15)


def test_overdamped_is_rejected():
    with pytest.raises(ckosc.Error, match="Overdamped"):
        ckosc.validate_params(ckosc.OscillatorParams(m=1, omega0=1, gamma=2.5))
    with pytest.raises(ValueError):
        ckosc.validate_params(ckosc.OscillatorParams(m=0))


def test_simulate_columns():
    out = ckosc.simulate(ckosc.figure_scenario("1a"))
    assert isinstance(out["t"], np.ndarray)
    assert out["t"].shape == (2001,)
    assert out["E_quantum"][0] == pytest.approx(5.01187617432175887, rel=1e-14)
    np.testing.assert_allclose(out["E_quantum"] - out["E_classical"], out["zero_point"], rtol=1e-12)


def test_sawtooth_is_odd():
    t = np.linspace(-2.0, 2.0, 401)
    f = ckosc.sawtooth_series(1.0, 1.0, 2 * math.pi, 1000, t)
    np.testing.assert_array_equal(f, -ckosc.sawtooth_series(1.0, 1.0, 2 * math.pi, 1000, -t))


def test_parse_scenario_error():
    with pytest.raises(ckosc.Error, match="omega_0"):
        ckosc.parse_scenario("[oscillator]\nm = 1\nomega_0 = 1\ngamma = 0\n")


def test_density_is_normalized():
    s = ckosc.figure_scenario("3a")
    pts = ckosc.trajectory(s)
    w = ckosc.wave_packet(s.params, s.init, pts[500], s.chi)
    q = np.linspace(w.center - 8 * w.sigma, w.center + 8 * w.sigma, 20001)
    assert np.trapezoid(ckosc.density(w, q), q) == pytest.approx(1.0, abs=1e-6)
