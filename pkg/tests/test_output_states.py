# -*- coding: utf-8 -*-

import math

import numpy as np
import pytest

from trajstat.errors import DomainError, QuadratureOverflow
from trajstat.generators import TiltPoint, build_T, partition_K
from trajstat.model import PhaseTransform
from trajstat.output_states import PhaseContext, ReducedEnsemble
from trajstat.output_states import canonical_overlap, gram_matrix, layer_grid
from trajstat.output_states import limit_state, phase_covariance_check
from trajstat.output_states import propagate_state_K, reduced_block_finite
from trajstat.output_states import reduced_convergence, reduced_state_finite
from trajstat.output_states import reduced_trace_distance
from trajstat.thermo import potential
from trajstat.utils import ConfigManager

SMALL = {"n_max": 1, "nodes": 4}


def test_layer_grid_covers_the_simplex():
    grid = layer_grid(2, 1.5, 2, 4)

    assert grid.size == 16 * 4
    assert np.sum(grid.weights) == pytest.approx(4 * 1.5 ** 2 / 2)
    assert np.all(np.diff(grid.times, axis=1) > 0)
    assert np.all((grid.times > 0) & (grid.times < 1.5))


def test_empty_layer():
    grid = layer_grid(0, 1.0, 3)

    assert grid.size == 1
    assert grid.weights.tolist() == [1.0]


def test_layer_grid_has_a_size_cap():
    with pytest.raises(QuadratureOverflow):
        layer_grid(5, 1.0, 1, 16)


def test_layer_grid_follows_the_cap_override():
    assert layer_grid(3, 1.0, 1, 8).size == 8 ** 3

    ConfigManager().override("cap_nodes", 100)

    with pytest.raises(QuadratureOverflow):
        layer_grid(3, 1.0, 1, 8)


def test_gram_matrix_is_positive(qubit):
    gram = gram_matrix(qubit)

    np.testing.assert_allclose(gram.entries, gram.entries.conj().T)
    assert np.all(gram.eigenvalues > -1e-12)
    assert 1 <= gram.rank <= qubit.dim ** 2


def test_gram_matrix_needs_a_decaying_model(decay):
    with pytest.raises(DomainError):
        gram_matrix(decay)


def test_canonical_overlap(qubit):
    tilt = TiltPoint.x(0.4, [0.1])

    assert canonical_overlap(qubit, 5, tilt, tilt) == pytest.approx(1.0)
    assert canonical_overlap(qubit, 0, tilt, TiltPoint.x(0.9)) == 1.0
    assert 0.0 < canonical_overlap(qubit, 5, tilt, TiltPoint.x(1.2, [0.1])) < 1.0


def test_canonical_overlap_is_the_transfer_trace(qubit):
    first, second = TiltPoint.x(0.4, [0.1]), TiltPoint.x(1.2, [-0.3])
    transfer = build_T(qubit, TiltPoint.x(0.8, [-0.1]))
    operator = np.eye(2, dtype=complex)

    for _step in range(5):
        operator = transfer.apply(operator)

    numerator = np.trace(qubit.density_matrix @ operator)
    norm = math.sqrt(partition_K(qubit, first, 5) * partition_K(qubit, second, 5))
    value = canonical_overlap(qubit, 5, first, second)

    assert isinstance(value, float)
    assert abs(numerator.imag) < 1e-12 * abs(numerator)
    assert value == pytest.approx(numerator.real / norm, rel=1e-10)


def test_state_after_K_jumps_keeps_its_trace(qubit):
    state = propagate_state_K(qubit, 4)

    assert np.trace(state).real == pytest.approx(1.0)
    np.testing.assert_allclose(state, state.conj().T, atol=1e-12)


def test_reduced_state_structure(qubit):
    ensemble = ReducedEnsemble.x_ensemble(3, 0.4)
    state = reduced_state_finite(qubit, ensemble, 1.0, **SMALL)

    assert state.n_max == 1
    assert state.sizes == (1, 4 * 2)
    np.testing.assert_allclose(state.blocks[(0, 1)], 0.0)
    assert set(state.block_norms()) == {"0,0", "0,1", "1,0", "1,1"}

    matrix = state.assemble()
    np.testing.assert_allclose(matrix, matrix.conj().T, atol=1e-12)
    assert np.all(np.linalg.eigvalsh(matrix) > -1e-12)


def test_single_block(qubit):
    ensemble = ReducedEnsemble.s_ensemble(3.0, 0.3)
    state = reduced_state_finite(qubit, ensemble, 1.0, **SMALL)

    np.testing.assert_allclose(
        reduced_block_finite(qubit, ensemble, 1.0, 1, 0, nodes=4),
        state.blocks[(1, 0)],
    )


def test_window_must_fit_in_the_final_time(qubit):
    with pytest.raises(DomainError):
        reduced_state_finite(qubit, ReducedEnsemble.s_ensemble(0.5, 0.3), 1.0)


def test_limit_state_from_both_ensembles(qubit):
    limit = limit_state(qubit, 0.3, [0.1], 1.0, **SMALL)

    assert limit.x_mismatch < 1e-8
    assert limit.to_dict()["tau0"] == 1.0
    assert reduced_trace_distance(limit.state, limit.x_state, True) < 1e-8


def _decreasing(distances, floor=1e-12):
    """Strictly decreasing until the distances reach round-off."""

    return all(b < a or b < floor for a, b in zip(distances, distances[1:]))


@pytest.mark.parametrize("name", ["qubit", "renewal"])
def test_finite_ensembles_approach_the_limit(request, name):
    model = request.getfixturevalue(name)
    report = reduced_convergence(
        model, 0.3, (), 1.0, taus=(3.0, 6.0, 11.0), Ks=(4, 8, 16), **SMALL
    )

    s_distances = [row["trace_distance"] for row in report["s_ensemble"]]
    x_distances = [row["trace_distance"] for row in report["x_ensemble"]]

    assert len(s_distances) == len(x_distances) == 3
    assert _decreasing(s_distances)
    assert _decreasing(x_distances)
    assert report["x"] == pytest.approx(
        potential(model, TiltPoint.s(0.3)).potential
    )


def test_trace_distance_of_identical_states(qubit):
    state = reduced_state_finite(
        qubit, ReducedEnsemble.s_ensemble(2.0, 0.3), 1.0, **SMALL
    )

    assert reduced_trace_distance(state, state) == 0.0


@pytest.mark.parametrize("kind", [PhaseTransform.P1, PhaseTransform.P2])
def test_phase_transformations(qubit, kind):
    context = PhaseContext(tau=3.0, K=3, x=0.4, n_max=1, nodes=4, n_pairs=10)
    report = phase_covariance_check(qubit, kind, 0.7, context)

    assert report.passed(1e-8), report.errors
    assert report.to_dict()["kind"] == kind.value


def test_rotation_report_lists_every_law(qubit):
    context = PhaseContext(tau=3.0, K=3, x=0.4, n_max=1, nodes=4)
    report = phase_covariance_check(qubit, "P1", math.pi / 3, context)

    assert set(report.errors) == {
        "s_phase_law",
        "s_complex_shift",
        "x_invariance",
        "x_potential",
    }
    assert report.passed(1e-8)
