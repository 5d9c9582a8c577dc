# -*- coding: utf-8 -*-

import numpy as np
import pytest

from trajstat.errors import DomainError, NonConvexInput
from trajstat.generators import EnsembleKind, TiltPoint
from trajstat.thermo import check_convex, dual_map, duality_row
from trajstat.thermo import eigenvector_angle, finite_difference_intensive
from trajstat.thermo import intensive_quantities, legendre_rate, potential
from trajstat.thermo import schrodinger_eigvec_relation_residual
from trajstat.thermo import schrodinger_generator, trace_distance


def test_unbiased_potentials_vanish(qubit, renewal):
    for model in (qubit, renewal):
        assert potential(model, TiltPoint.s(0.0)).potential == pytest.approx(
            0.0, abs=1e-10
        )
        assert potential(model, TiltPoint.x(0.0)).potential == pytest.approx(
            0.0, abs=1e-10
        )


def test_potentials_decrease_with_the_field(qubit):
    values = [potential(qubit, TiltPoint.s(s)).potential for s in (-0.5, 0, 0.5)]
    assert values[0] > values[1] > values[2]

    values = [potential(qubit, TiltPoint.x(x)).potential for x in (0.1, 0.5, 1.0)]
    assert values[0] > values[1] > values[2]


def test_renewal_transfer_map_is_not_primitive(renewal):
    report = potential(renewal, TiltPoint.x(0.5))

    assert np.isfinite(report.potential)
    assert report.kind is EnsembleKind.X_ENSEMBLE


def test_report_columns(qubit):
    row = potential(qubit, TiltPoint.s(0.2, [0.1])).to_dict()

    assert row["kind"] == "s_ensemble"
    assert row["field"] == 0.2
    assert row["c"] == [0.1]
    assert {"log_partition_rate", "gap", "k", "m_tilde"} <= set(row)


@pytest.mark.parametrize(
    "tilt", [TiltPoint.s(0.2, [0.1]), TiltPoint.x(0.4, [0.1])]
)
def test_intensive_quantities_match_finite_differences(qubit, tilt):
    exact = intensive_quantities(qubit, tilt)
    estimate = finite_difference_intensive(qubit, tilt)

    assert exact.rate == pytest.approx(estimate.rate, rel=1e-6)
    np.testing.assert_allclose(exact.spin, estimate.spin, rtol=1e-5, atol=1e-8)


def test_dual_map_round_trip(qubit):
    tilt = TiltPoint.s(0.3, [0.1])
    x_tilt = dual_map(qubit, tilt)

    assert x_tilt.kind is EnsembleKind.X_ENSEMBLE
    assert x_tilt.c == tilt.c
    assert dual_map(qubit, x_tilt).field == pytest.approx(0.3, abs=1e-9)


def test_dual_map_refuses_inadmissible_duals(decay):
    with pytest.raises(DomainError):
        dual_map(decay, TiltPoint.s(0.3))


@pytest.mark.parametrize("s", [-0.3, 0.1, 0.5])
def test_duality_row(qubit, s):
    row = duality_row(qubit, s, [0.1])

    assert row["round_trip_error"] < 1e-9
    assert row["t_times_k"] == pytest.approx(1.0, rel=1e-8)
    assert row["spin_mismatch"] < 1e-8
    assert row["eig_angle"] < 1e-8
    assert row["connection_residual"] < 1e-8
    assert row["alpha"] > 0.0


def test_schrodinger_eigenvectors_are_related(qubit, renewal):
    assert schrodinger_eigvec_relation_residual(qubit, 0.3, [0.1]) < 1e-8
    assert schrodinger_eigvec_relation_residual(renewal, -0.2) < 1e-8


def test_schrodinger_generator_is_the_adjoint(qubit):
    tilt = TiltPoint.s(0.2)
    dual = schrodinger_generator(qubit, tilt)
    report = potential(qubit, tilt)

    np.testing.assert_allclose(
        dual.apply(report.left_eig_schr),
        report.eigenvalue.conjugate() * report.left_eig_schr,
        atol=1e-10,
    )


def test_rate_function_vanishes_at_the_typical_rate(qubit):
    fields = np.linspace(-0.5, 0.5, 21)
    reports = [potential(qubit, TiltPoint.s(s)) for s in fields]
    rate = legendre_rate(
        fields,
        [report.potential for report in reports],
        EnsembleKind.S_ENSEMBLE,
        [-report.intensive.k for report in reports],
    )
    typical = potential(qubit, TiltPoint.s(0.0)).intensive.k

    assert np.min(rate.values) == pytest.approx(0.0, abs=1e-10)
    assert np.all(rate.values >= -1e-10)
    assert rate.argmin == pytest.approx(typical, rel=1e-8)
    assert np.all(np.diff(rate.grid) > 0)


def test_rate_function_from_sampled_slopes():
    fields = np.linspace(-1.0, 1.0, 41)
    rate = legendre_rate(fields, fields ** 2, "x_ensemble")

    assert rate.orientation is EnsembleKind.X_ENSEMBLE
    assert rate.evaluate(0.0) == pytest.approx(0.0, abs=1e-12)
    assert rate.evaluate(1.0) == pytest.approx(0.25, rel=1e-6)


def test_legendre_refuses_bad_input():
    with pytest.raises(ValueError):
        legendre_rate([0.0, 1.0], [0.0, 1.0], "s_ensemble")

    with pytest.raises(ValueError):
        legendre_rate([0.0, 2.0, 1.0], [0.0, 1.0, 2.0], "s_ensemble")

    with pytest.raises(NonConvexInput) as info:
        check_convex(np.arange(5.0), -np.arange(5.0) ** 2)

    assert info.value.indices == [1, 2, 3]


def test_distances():
    first = np.diag([1.0, 0.0])
    second = np.diag([0.0, 1.0])

    assert trace_distance(first, second) == pytest.approx(1.0)
    assert trace_distance(first, first) == 0.0
    assert eigenvector_angle(first, 3.0 * first) == pytest.approx(0.0, abs=1e-12)
    assert eigenvector_angle(first, second) == pytest.approx(1.0)
