# -*- coding: utf-8 -*-

import math

import numpy as np
import pytest

from trajstat.errors import DarkState
from trajstat.generators import TiltPoint, log_partition_K, partition_K
from trajstat.generators import partition_tau
from trajstat.model import model_hash
from trajstat.thermo import potential
from trajstat.trajectories import Scheme, Trajectory, biased_weight_estimate
from trajstat.trajectories import classical_equivalence_check, importance_estimate
from trajstat.trajectories import sample_fixed_count, sample_fixed_time
from trajstat.trajectories import sample_waiting_time, trajectory_amplitude
from trajstat.trajectories import trajectory_log_density, trajectory_stream
from trajstat.trajectories import waiting_time_sampler


def test_trajectory_validation():
    with pytest.raises(ValueError):
        Trajectory([1.0, 0.5], [0, 0], Scheme.FIXED_COUNT)

    with pytest.raises(ValueError):
        Trajectory([1.0], [0, 1], Scheme.FIXED_COUNT)

    with pytest.raises(ValueError):
        Trajectory([1.0, 3.0], [0, 0], Scheme.FIXED_TIME, tau=2.0)


def test_trajectory_record():
    record = Trajectory([0.5, 1.5], [0, 1], "fixed_time", tau=2.0, spin=(0.0,))

    assert record.K == 2
    assert record.T == 1.5
    assert record.duration == 2.0
    np.testing.assert_allclose(record.waiting_times, [0.5, 1.0])
    assert record.to_dict() == {
        "jumps": [[0.5, 1], [1.5, 2]],
        "T": 1.5,
        "K": 2,
        "M": [0.0],
    }


def test_streams_are_reproducible():
    first = trajectory_stream(3, 5).random(4)

    np.testing.assert_array_equal(first, trajectory_stream(3, 5).random(4))
    assert not np.allclose(first, trajectory_stream(3, 6).random(4))


def test_survival_of_the_sampler(qubit):
    sampler = waiting_time_sampler(qubit)
    psi = qubit.initial_state
    times = np.array([0.0, 0.5, 2.0])
    expected = [np.linalg.norm(sampler.evolve(psi, t)) ** 2 for t in times]

    np.testing.assert_allclose(sampler.survival(psi, times), expected, atol=1e-12)
    assert sampler.survival_limit(psi) == 0.0


def test_ground_state_of_the_atom_is_dark(decay):
    rng = trajectory_stream(0, 0)

    with pytest.raises(DarkState):
        sample_waiting_time(decay, np.array([1.0, 0.0]), rng)


def test_fixed_time_batch_of_a_decaying_atom(decay):
    batch = sample_fixed_time(decay, 2.0, 2000, seed=11)
    counts = batch.counts()
    estimate = importance_estimate(counts)

    assert len(batch) == 2000
    assert set(counts) <= {0, 1}
    assert estimate.within(1.0 - math.exp(-2.0), sigmas=4)
    assert batch.header()["model_hash"] == model_hash(decay)


def test_batches_do_not_depend_on_the_worker_count(qubit):
    serial = sample_fixed_time(qubit, 3.0, 40, seed=5, workers=1)
    parallel = sample_fixed_time(qubit, 3.0, 40, seed=5, workers=4)

    assert [x.times for x in serial.trajectories] == [
        x.times for x in parallel.trajectories
    ]
    assert [x.channels for x in serial.trajectories] == [
        x.channels for x in parallel.trajectories
    ]


def test_fixed_count_records_end_at_their_last_jump(qubit):
    batch = sample_fixed_count(qubit, 5, 300, seed=2)

    assert np.all(batch.counts() == 5)
    assert all(x.duration == x.T for x in batch.trajectories)
    assert batch.spins().shape == (300, 1)


def test_fixed_count_mean_duration(qubit):
    batch = sample_fixed_count(qubit, 6, 1500, seed=3)
    estimate = importance_estimate(batch.final_times())

    step = 1e-5
    upper = log_partition_K(qubit, TiltPoint.x(step), 6)
    lower = log_partition_K(qubit, TiltPoint.x(-step), 6)
    exact = -(upper - lower) / (2 * step)

    assert estimate.within(exact, sigmas=4)
    assert exact / 6 == pytest.approx(
        potential(qubit, TiltPoint.x(0.0)).intensive.t, rel=0.5
    )


def test_fixed_count_beyond_a_dark_state(decay):
    with pytest.raises(DarkState):
        sample_fixed_count(decay, 2, 5, seed=0)


def test_log_density_of_a_decaying_atom(decay):
    jumped = Trajectory([0.7], [0], Scheme.FIXED_COUNT)
    observed = Trajectory([0.7], [0], Scheme.FIXED_TIME, tau=2.0)
    silent = Trajectory([], [], Scheme.FIXED_TIME, tau=2.0)
    impossible = Trajectory([0.7, 0.9], [0, 0], Scheme.FIXED_COUNT)

    assert trajectory_log_density(decay, jumped) == pytest.approx(-0.7)
    assert trajectory_log_density(decay, observed) == pytest.approx(-0.7)
    assert trajectory_log_density(decay, silent) == pytest.approx(-2.0)
    assert trajectory_log_density(decay, impossible) == -math.inf


def test_amplitude_norm_is_the_density(qubit):
    record = sample_fixed_count(qubit, 3, 1, seed=9).trajectories[0]
    amplitude = trajectory_amplitude(qubit, record)

    assert 2 * math.log(np.linalg.norm(amplitude)) == pytest.approx(
        trajectory_log_density(qubit, record)
    )

    tilted = trajectory_amplitude(qubit, record, s=0.4, x=0.2, c=[0.1])
    scale = math.exp(-0.2 * 3 - 0.1 * record.T - 0.05 * record.spin[0])
    np.testing.assert_allclose(tilted, scale * amplitude)


def test_importance_estimate():
    plain = importance_estimate([1.0, 2.0, 3.0])
    assert plain.mean == pytest.approx(2.0)
    assert plain.standard_error == pytest.approx(1.0 / math.sqrt(3.0))

    weighted = importance_estimate([1.0, 3.0], np.log([3.0, 1.0]))
    assert weighted.mean == pytest.approx(1.5)
    assert weighted.ess == pytest.approx(16.0 / 10.0)

    with pytest.raises(ValueError):
        importance_estimate([])


def test_biased_weights_estimate_partition_functions(qubit):
    batch = sample_fixed_time(qubit, 3.0, 2000, seed=4)
    estimate = biased_weight_estimate(batch, 0.5, [0.2])
    assert estimate.within(partition_tau(qubit, TiltPoint.s(0.5, [0.2]), 3.0), 4)

    batch = sample_fixed_count(qubit, 3, 2000, seed=4)
    estimate = biased_weight_estimate(batch, 0.3)
    assert estimate.within(partition_K(qubit, TiltPoint.x(0.3), 3), 4)


def test_classical_equivalence_exponents_shrink(qubit):
    report = classical_equivalence_check(qubit, 0.3, (3.0, 6.0, 11.0))

    np.testing.assert_allclose(report.fourier, report.deterministic, atol=1e-6)
    assert report.is_shrinking
    assert report.monte_carlo == ()


def test_classical_equivalence_by_sampling(qubit):
    report = classical_equivalence_check(qubit, 0.3, (3.0,), 3000, seed=1)
    exact, sampled = report.deterministic[0], report.monte_carlo[0]

    assert abs(sampled - exact) <= 4 * report.standard_errors[0]
    assert 0.0 < report.acceptance[0] <= 1.0
