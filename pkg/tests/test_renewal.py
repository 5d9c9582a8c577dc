# -*- coding: utf-8 -*-

import numpy as np
import pytest

from trajstat.errors import DomainError
from trajstat.generators import TiltPoint, partition_K
from trajstat.model import random_model, three_level_renewal
from trajstat.renewal import NotRenewal, RenewalStructure, analytic_potential
from trajstat.renewal import detect_renewal, renewal_demo, renewal_product_checks
from trajstat.renewal import require_renewal
from trajstat.thermo import duality_row, eigenvector_angle, potential


def test_detects_the_reset_state(renewal):
    structure = detect_renewal(renewal)

    assert isinstance(structure, RenewalStructure)
    np.testing.assert_allclose(structure.reset_state, [1.0, 0.0, 0.0], atol=1e-12)
    np.testing.assert_allclose(structure.D, renewal.jump_sum, atol=1e-12)
    assert structure.to_dict()["n_channels"] == 1


def test_rotated_jumps_share_the_reset_state(renewal):
    jump = renewal.jumps[0]
    model = renewal.replace(
        jumps=(np.exp(0.3j) * jump, 0.5j * jump),
        spins=np.zeros((2, 0)),
    )
    structure = detect_renewal(model)

    assert isinstance(structure, RenewalStructure)
    np.testing.assert_allclose(structure.D, model.jump_sum, atol=1e-12)


def test_non_renewal_models(qubit):
    assert isinstance(detect_renewal(qubit), NotRenewal)
    assert isinstance(detect_renewal(random_model(3, seed=1)), NotRenewal)
    assert detect_renewal(qubit).to_dict()["renewal"] is False


def test_require_renewal(decay, qubit, renewal):
    assert require_renewal(renewal).model is renewal

    with pytest.raises(DomainError):
        require_renewal(qubit)

    with pytest.raises(DomainError):
        require_renewal(decay)


@pytest.mark.parametrize("x", [*np.round(np.linspace(0.1, 1.0, 10), 12), 3.0])
def test_closed_form_potential(renewal, x):
    structure = detect_renewal(renewal)
    closed = analytic_potential(structure, x)
    report = potential(renewal, TiltPoint.x(x))

    assert closed.g == pytest.approx(report.potential, abs=1e-10)
    assert eigenvector_angle(closed.F, report.right_eig) < 1e-8
    np.testing.assert_allclose(closed.rho, np.diag([1.0, 0.0, 0.0]))


@pytest.mark.parametrize("K", [1, 5, 10, 20])
def test_partition_function_is_a_product(renewal, K):
    structure = detect_renewal(renewal)
    g = analytic_potential(structure, 0.4).g

    assert partition_K(renewal, TiltPoint.x(0.4), K) == pytest.approx(
        np.exp(K * g), rel=1e-9
    )


@pytest.mark.parametrize("s", np.linspace(-0.5, 0.5, 21))
def test_duality_of_the_renewal_atom(renewal, s):
    row = duality_row(renewal, s)

    assert row["round_trip_error"] < 1e-8
    assert row["eig_angle"] < 1e-8
    assert row["t_times_k"] == pytest.approx(1.0, abs=1e-6)


def test_closed_form_potential_vanishes_without_bias(renewal):
    structure = detect_renewal(renewal)
    assert analytic_potential(structure, 0.0).g == pytest.approx(0.0, abs=1e-12)


def test_product_form(renewal):
    report = renewal_product_checks(detect_renewal(renewal), n_samples=0)

    assert report["collapse_error"] < 1e-10
    assert report["trivial_transfer_error"] < 1e-10
    assert report["partition_error"] < 1e-8
    assert "lag_correlation" not in report


def test_waiting_times_are_uncorrelated(renewal):
    report = renewal_product_checks(detect_renewal(renewal), n_samples=4000, seed=3)

    assert abs(report["lag_correlation"]) < 2 * report["correlation_bound"]
    assert report["correlation_bound"] == pytest.approx(3 / np.sqrt(4000))


def test_product_checks_need_two_jumps(renewal):
    with pytest.raises(DomainError):
        renewal_product_checks(detect_renewal(renewal), K=1)


def test_demo_artifacts():
    demo = renewal_demo(
        s_grid=np.linspace(-0.3, 0.3, 7),
        x_grid=(0.2, 0.5),
        tau_list=(3.0, 6.0),
        K_range=(4, 8),
    )

    assert set(demo.tables) == {"potentials", "analytic", "duality", "counting"}
    assert set(demo.reports) == {
        "parameters",
        "rate_function",
        "schrodinger_relation",
        "concentration",
        "equivalence",
        "product",
    }
    assert all(row["error"] < 1e-10 for row in demo.tables["analytic"])
    assert all(row["round_trip_error"] < 1e-9 for row in demo.tables["duality"])
    assert demo.reports["schrodinger_relation"]["residual"] < 1e-8
    assert demo.reports["parameters"]["x_min"] < 0.0


def test_demo_refuses_non_decaying_parameters():
    with pytest.raises(DomainError):
        renewal_demo(omega1=1.0, omega2=0.0, kappa=1.0)


def test_demo_model_parameters():
    model = three_level_renewal(2.0, 0.5, 1.5)

    assert model.hamiltonian[0, 1] == 2.0
    assert model.hamiltonian[0, 2] == 0.5
    assert model.jump_sum[1, 1] == pytest.approx(1.5)
