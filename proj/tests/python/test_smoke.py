import math

import numpy as np
import pytest

import qcorr


def bell():
    m = np.zeros((4, 4), dtype=complex)
    m[1, 1] = m[2, 2] = m[1, 2] = m[2, 1] = 0.5
    return qcorr.DensityMatrix(m)


def test_bell_state_measures():
    rho = bell()
    assert qcorr.concurrence(rho) == pytest.approx(1.0, abs=1e-12)
    assert qcorr.hs_min(rho) == pytest.approx(0.5, abs=1e-14)
    assert qcorr.trace_min(rho) == pytest.approx(1.0, abs=1e-14)
    assert rho.matrix.shape == (4, 4)


def test_invalid_state_raises():
    with pytest.raises(qcorr.QcorrError, match="NotPositive"):
        qcorr.DensityMatrix(np.diag([1.0, 0.0, 0.001, -0.001]).astype(complex))
    with pytest.raises(qcorr.QcorrError, match="NegativeStrength"):
        qcorr.WeakStrength(-1.0)


def test_trajectory_and_sudden_death():
    p = qcorr.ModelParams(1.0, 1.0, 1.0)
    t = qcorr.sudden_death_time(p)
    assert t == pytest.approx(0.31045404513976656, abs=1e-9)
    rho = qcorr.analytic_state_at(p, 1.0)
    assert rho.matrix[1, 2].real == pytest.approx(0.024893534183931971, abs=1e-15)
    times, states = qcorr.integrate(p, 1.0, 100)
    assert len(times) == len(states) == 101
    assert np.abs(states[-1].matrix - rho.matrix).max() < 1e-8


def test_weak_measures():
    w = qcorr.WeakStrength(1.0)
    assert w.t1 * w.t2 == pytest.approx(0.5 / math.cosh(1.0), abs=1e-15)
    assert qcorr.weak_factor(w) == pytest.approx(0.6759728631680573, abs=1e-14)
    rho = qcorr.analytic_state_at(qcorr.ModelParams(1.0, 0.5, 0.5), 1.0)
    assert qcorr.weak_hs_min(rho, w) < qcorr.hs_min(rho)


def test_oracle_agrees_on_trajectory_state():
    rho = qcorr.analytic_state_at(qcorr.ModelParams(1.0, 0.5, 0.8), 0.7)
    assert abs(qcorr.brute_force_hs_min(rho) - qcorr.hs_min(rho)) <= 1e-9
    assert abs(qcorr.brute_force_trace_min(rho) - qcorr.trace_min(rho)) <= 1e-9


def test_sweeps_as_csv():
    text = qcorr.time_sweep_csv([1.0], [1.0], t_max=5.0, steps=3)
    lines = text.splitlines()
    assert lines[0] == "n,r,gamma_t,C,N2,N1"
    assert lines[1] == "1,1,0,1,0.5,1"
    assert text == qcorr.time_sweep_csv([1.0], [1.0], t_max=5.0, steps=3)

    weak = qcorr.strength_sweep_csv(0.5, 0.5, [0.1, 30.0], t_max=1.0, steps=2).splitlines()
    assert weak[0] == "x,gamma_t,N2,N1,N2W,N1W"
    assert len(weak) == 5
    with pytest.raises(qcorr.QcorrError, match="InvalidConfig"):
        qcorr.time_sweep_csv([1.0], [2.0])
