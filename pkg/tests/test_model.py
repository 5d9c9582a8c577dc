# -*- coding: utf-8 -*-

import json
import math

import numpy as np
import pytest

from trajstat import MODELS_DIR
from trajstat.errors import ParseError, ValidationError
from trajstat.model import LindbladModel, PhaseTransform, apply_phase_transform
from trajstat.model import check_model, effective_hamiltonian, load_model
from trajstat.model import model_from_dict, model_hash, model_to_dict
from trajstat.model import save_model, survival, waiting_time_density


def test_model_properties(qubit):
    assert qubit.dim == 2
    assert qubit.n_jumps == 2
    assert qubit.spin_length == 1
    assert np.trace(qubit.density_matrix).real == pytest.approx(1.0)
    np.testing.assert_allclose(qubit.jump_sum, np.diag([0.3, 1.0]))


def test_jump_weights(qubit):
    np.testing.assert_allclose(qubit.jump_weights(), [1.0, 1.0])
    np.testing.assert_allclose(
        qubit.jump_weights([0.5]), [math.exp(-0.5), math.exp(0.5)]
    )

    with pytest.raises(ValidationError):
        qubit.jump_weights([0.1, 0.2])


def test_non_hermitian_hamiltonian_is_rejected(decay):
    with pytest.raises(ValidationError):
        decay.replace(hamiltonian=np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_unnormalized_state_is_rejected(decay):
    with pytest.raises(ValidationError):
        decay.replace(initial_state=np.array([1.0, 1.0]))


def test_check_model_lists_every_problem(decay):
    assert check_model(decay) == []


def test_ragged_spins_are_rejected():
    with pytest.raises(ValidationError):
        LindbladModel(
            np.zeros((2, 2)),
            (np.eye(2), np.eye(2)),
            [[1.0], [1.0, 2.0]],
            np.array([1.0, 0.0]),
        )


def test_effective_hamiltonian_bounds(decay, renewal, qubit):
    assert effective_hamiltonian(decay).x_min == pytest.approx(0.0, abs=1e-14)
    assert not effective_hamiltonian(decay).is_stable
    assert effective_hamiltonian(renewal).x_min < 0.0
    assert effective_hamiltonian(qubit).is_stable


def test_bundled_models_load():
    for path in sorted(MODELS_DIR.glob("*.json")):
        model = load_model(path)
        assert model.name == path.stem
        assert check_model(model) == []


def test_saved_model_keeps_its_hash(qubit, tmp_path):
    path = tmp_path / "qubit.json"
    save_model(qubit, path)

    assert model_hash(load_model(path)) == model_hash(qubit)


def test_hash_ignores_the_name(qubit):
    assert model_hash(qubit.replace(name="other")) == model_hash(qubit)
    assert model_hash(apply_phase_transform(qubit, "P2", 0.1)) != model_hash(qubit)


def test_missing_field_is_a_parse_error(qubit):
    document = model_to_dict(qubit)
    del document["jumps"]

    with pytest.raises(ParseError):
        model_from_dict(document)


def test_mismatched_dimension_is_a_parse_error(qubit):
    document = model_to_dict(qubit)
    document["dim"] = 3

    with pytest.raises(ParseError):
        model_from_dict(document)


def test_malformed_file_is_a_parse_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{ not json")

    with pytest.raises(ParseError):
        load_model(path)


def test_spin_labels_must_share_one_length(qubit):
    document = model_to_dict(qubit)
    document["jumps"][0]["spin"] = [1.0, 2.0]

    with pytest.raises(ValidationError):
        model_from_dict(json.loads(json.dumps(document)))


def test_phase_transforms(qubit):
    rotated = apply_phase_transform(qubit, PhaseTransform.P1, 0.4)
    shifted = apply_phase_transform(qubit, PhaseTransform.P2, 0.4)

    np.testing.assert_allclose(rotated.jumps[0], np.exp(0.4j) * qubit.jumps[0])
    np.testing.assert_allclose(rotated.jump_sum, qubit.jump_sum)
    np.testing.assert_allclose(
        shifted.hamiltonian - qubit.hamiltonian, 0.4 * np.eye(2)
    )


def test_waiting_time_density_is_minus_survival_slope(qubit):
    psi, t, step = qubit.initial_state, 0.8, 1e-5
    slope = (survival(qubit, psi, t + step) - survival(qubit, psi, t - step)) / (
        2 * step
    )

    assert waiting_time_density(qubit, psi, t) == pytest.approx(-slope, rel=1e-7)


def test_decay_survival(decay):
    assert survival(decay, decay.initial_state, 1.3) == pytest.approx(math.exp(-1.3))
