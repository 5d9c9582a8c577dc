# -*- coding: utf-8 -*-

import math

import numpy as np
import pytest

from trajstat.errors import DomainError, ValidationError
from trajstat.generators import EnsembleKind, TiltPoint, build_T, build_W
from trajstat.generators import connection_residual, log_partition_K
from trajstat.generators import log_partition_tau, model_x_min, partition_K
from trajstat.generators import partition_tau, tilted_jump_map, transfer_power
from trajstat.model import random_model


def test_tilt_point_constructors():
    tilt = TiltPoint.x(0.5, [0.1])

    assert tilt.kind is EnsembleKind.X_ENSEMBLE
    assert tilt.c == (0.1,)
    assert tilt.with_field(0.7).field == 0.7
    assert tilt.with_c([0.2]).c == (0.2,)
    assert tilt.to_dict() == {"kind": "x_ensemble", "field": 0.5, "c": [0.1]}


def test_wrong_tilt_kind_is_refused(qubit):
    with pytest.raises(ValueError):
        build_T(qubit, TiltPoint.s(0.1))

    with pytest.raises(ValueError):
        build_W(qubit, TiltPoint.x(0.1))


def test_transfer_map_needs_an_admissible_field(decay):
    assert model_x_min(decay) == pytest.approx(0.0, abs=1e-14)

    with pytest.raises(DomainError):
        build_T(decay, TiltPoint.x(0.0))


def test_single_jump_partition_of_a_decaying_atom(decay):
    for x in (0.1, 0.5, 2.0):
        assert partition_K(decay, TiltPoint.x(x), 1) == pytest.approx(1.0 / (1.0 + x))

    assert partition_K(decay, TiltPoint.x(0.5), 2) == 0.0
    assert log_partition_K(decay, TiltPoint.x(0.5), 2) == -math.inf


def test_final_time_partition_of_a_decaying_atom(decay):
    tau, s = 1.7, 0.4
    expected = math.exp(-tau) + (1.0 - math.exp(-tau)) * math.exp(-s)

    assert partition_tau(decay, TiltPoint.s(s), tau) == pytest.approx(expected)
    assert log_partition_tau(decay, TiltPoint.s(s), tau) == pytest.approx(
        math.log(expected)
    )


def test_partition_functions_are_normalized(qubit, renewal):
    for model in (qubit, renewal):
        assert partition_tau(model, TiltPoint.s(0.0), 4.0) == pytest.approx(1.0)
        assert partition_K(model, TiltPoint.x(0.0), 6) == pytest.approx(1.0)
        assert partition_K(model, TiltPoint.x(0.3), 0) == 1.0
        assert partition_tau(model, TiltPoint.s(0.3), 0.0) == 1.0


def test_log_partition_handles_long_times(qubit):
    tilt = TiltPoint.s(0.3)
    short = log_partition_tau(qubit, tilt, 5.0)

    assert log_partition_tau(qubit, tilt, 5.0) == pytest.approx(
        math.log(partition_tau(qubit, tilt, 5.0))
    )
    assert np.isfinite(log_partition_tau(qubit, tilt, 400.0))
    assert log_partition_tau(qubit, tilt, 400.0) < short


def test_log_partition_K_matches_direct_powers(qubit):
    tilt = TiltPoint.x(0.4, [0.2])
    transfer = build_T(qubit, tilt)
    direct = transfer_power(transfer, 5, np.eye(2))
    expected = np.vdot(qubit.initial_state, direct @ qubit.initial_state).real

    assert partition_K(qubit, tilt, 5) == pytest.approx(expected)


def test_spin_field_reweights_channels(qubit):
    plain = tilted_jump_map(qubit).matrix
    tilted = tilted_jump_map(qubit, [0.0]).matrix

    np.testing.assert_allclose(plain, tilted)

    with pytest.raises(ValidationError):
        tilted_jump_map(qubit, [0.1, 0.2])


@pytest.mark.parametrize("s", [-0.4, 0.0, 0.3, 1.0])
def test_connection_between_transfer_and_generator(qubit, s):
    assert connection_residual(qubit, s, [0.1]) < 1e-8
    assert connection_residual(qubit, s, [0.1], x=0.7) < 1e-8


@pytest.mark.parametrize("seed", range(50))
def test_connection_on_random_models(seed):
    rng = np.random.default_rng(1000 + seed)
    model = random_model(2 + seed % 3, n_jumps=2, seed=seed, spin_length=1)
    s = rng.uniform(-0.5, 0.5)
    c = [rng.uniform(-0.3, 0.3)]
    x = model_x_min(model) + rng.uniform(0.2, 1.5)

    assert connection_residual(model, s, c, x=x) < 1e-9
