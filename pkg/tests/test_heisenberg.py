import math

import numpy as np
import pytest

from spinberry import (
    DomainError,
    HeisenbergParams,
    concurrence_vs_k0,
    generalized_berry_phase,
    heisenberg_energy_per_site,
    j_coupling,
    predict_concurrence,
    theta_from_correlator,
    theta_from_k0,
)
from spinberry.kernels import hubbard_apply

PI = math.pi


def test_j_coupling_values():
    assert j_coupling(1.0, 1.0).coupling_j == pytest.approx(4.0)
    assert j_coupling(1.0, 4.0).coupling_j == pytest.approx(1.0)
    assert j_coupling(2.0, 8.0).coupling_j == pytest.approx(2.0)


def test_j_coupling_rejects_zero_u():
    with pytest.raises(DomainError):
        j_coupling(1.0, 0.0)


def test_theta_from_correlator_anchors():
    assert theta_from_correlator(0.25) == pytest.approx(0.0)
    assert theta_from_correlator(-0.25) == pytest.approx(PI)
    assert theta_from_correlator(0.0) == pytest.approx(PI / 2)
    with pytest.raises(DomainError):
        theta_from_correlator(0.3)


def test_theta_correlator_round_trip():
    for theta in np.linspace(0, PI, 101):
        assert theta_from_correlator(0.25 * math.cos(theta)) == pytest.approx(
            theta, abs=1e-12
        )


def test_energy_per_site():
    assert heisenberg_energy_per_site(HeisenbergParams(4.0), PI / 2) == pytest.approx(
        0.0, abs=1e-15
    )
    assert heisenberg_energy_per_site(HeisenbergParams(4.0), 0.0) == pytest.approx(3.0)
    assert heisenberg_energy_per_site(HeisenbergParams(1.0), PI) == pytest.approx(-0.75)


def test_theta_from_k0_at_t_equals_u():
    assert theta_from_k0(1.0, 1.0, PI / 2) == pytest.approx(PI / 2)
    assert theta_from_k0(1.0, 1.0, 0.0) == pytest.approx(math.acos(1 / 3))
    assert theta_from_k0(1.0, 1.0, 0.0) == pytest.approx(1.23095941734077, abs=1e-10)


def test_theta_from_k0_out_of_range_reports_value():
    with pytest.raises(DomainError, match="1.333"):
        theta_from_k0(1.0, 4.0, 0.0)


def test_generalized_berry_phase_anchors():
    assert generalized_berry_phase(0.0) == pytest.approx(2 * PI)
    assert generalized_berry_phase(PI / 2) == pytest.approx(PI)
    assert generalized_berry_phase(PI) == pytest.approx(2 * PI)


def test_predicted_concurrence_is_phase_over_two_pi():
    for theta in np.linspace(0, PI, 101):
        assert predict_concurrence(theta) == pytest.approx(
            generalized_berry_phase(theta) / (2 * PI), abs=0
        )


def test_predicted_concurrence_symmetric_minimum():
    for theta in np.linspace(0, PI / 2, 51):
        assert predict_concurrence(theta) == pytest.approx(
            predict_concurrence(PI - theta), abs=1e-12
        )
    assert predict_concurrence(PI / 2) == 0.5
    assert predict_concurrence(0.0) == 1.0
    assert predict_concurrence(PI) == 1.0


def test_momentum_composition_reproduces_band_formula():
    # theta(k0) at t=U composed with the prediction: C = (1 + |cos k0|/3)/2
    for k0 in np.linspace(1e-6, PI - 1e-6, 100):
        c = predict_concurrence(theta_from_k0(1.0, 1.0, k0))
        assert c == pytest.approx(0.5 * (1 + abs(math.cos(k0)) / 3), abs=1e-14)


def test_table_rows():
    row = concurrence_vs_k0(1.0, 1.0, PI / 4)
    assert row["concurrence"] == pytest.approx(0.6178511301977579, abs=1e-14)
    assert concurrence_vs_k0(1.0, 1.0, PI / 2)["concurrence"] == pytest.approx(0.5)
    # exact-momentum coincidence branch
    assert concurrence_vs_k0(1.0, 1.0, 0.0)["concurrence"] == 1.0
    assert concurrence_vs_k0(1.0, 1.0, PI)["concurrence"] == 1.0
    assert "coincidence" in concurrence_vs_k0(1.0, 1.0, 0.0)["note"]


def test_half_chain_limit_discontinuity():
    # limit of the energy-matching branch at k0 -> 0 is 2/3, branch value 1
    near_zero = concurrence_vs_k0(1.0, 1.0, 1e-9)["concurrence"]
    assert near_zero == pytest.approx(2 / 3, abs=1e-9)
    assert concurrence_vs_k0(1.0, 1.0, 0.0)["concurrence"] == 1.0


def test_exchange_scale_matches_two_site_spectrum():
    # strong-coupling physics check: the two-site singlet ground energy
    # approaches -J = -4t^2/U (here via the raw Hamiltonian kernel)
    t, u = 1.0, 50.0
    basis = np.eye(4).reshape(4, 2, 2)
    h = np.array([hubbard_apply(b.astype(complex), t, u, False).ravel() for b in basis]).T
    e0 = np.linalg.eigvalsh(h).min()
    assert e0 == pytest.approx(-j_coupling(t, u).coupling_j, abs=20 * t**4 / u**3)
