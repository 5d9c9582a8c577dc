# -*- coding: utf-8 -*-

import numpy as np
import pytest

from trajstat.errors import DegenerateDominant, DomainError, SingularSolve
from trajstat.generators import deformed_generator, model_x_min
from trajstat.superop import Picture, RankingMode, Resolvent, SuperOperator
from trajstat.superop import build_R, build_jump_map, cached_resolvent
from trajstat.superop import dominant_eigenpair, resolvent_solve
from trajstat.superop import is_positive_semidefinite, matrix_exp_apply
from trajstat.superop import propagator, sandwich, stack, unstack
from trajstat.utils import ConfigManager


def _random_operator(rng, dim=3):
    return rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))


def test_sandwich_acts_on_stacked_operators():
    rng = np.random.default_rng(1)
    left, right, operator = (_random_operator(rng) for _ in range(3))

    vector = sandwich(left, right) @ stack(operator)
    np.testing.assert_allclose(unstack(vector, 3), left @ operator @ right)


def test_adjoint_is_the_hilbert_schmidt_dual(random_3):
    rng = np.random.default_rng(2)
    first, second = _random_operator(rng), _random_operator(rng)
    R = build_R(random_3)

    lhs = np.vdot(stack(first), stack(R.apply(second)))
    rhs = np.vdot(stack(R.adjoint().apply(first)), stack(second))

    assert lhs == pytest.approx(rhs)
    assert R.adjoint().picture is Picture.SCHRODINGER


def test_R_maps_identity_to_jump_sum(random_3):
    identity = np.eye(random_3.dim)
    np.testing.assert_allclose(
        build_R(random_3).apply(identity), random_3.jump_sum, atol=1e-12
    )


def test_jump_map_weights(qubit):
    jumps = build_jump_map(qubit, [2.0, 0.0])
    operator = np.array([[1.0, 2.0], [3.0, 4.0]])
    expected = 2.0 * qubit.jumps[0].conj().T @ operator @ qubit.jumps[0]

    np.testing.assert_allclose(jumps.apply(operator), expected)


def test_superoperator_rejects_wrong_shape():
    with pytest.raises(ValueError):
        SuperOperator(np.eye(3), Picture.HEISENBERG, 2)


def test_resolvent_inverts_the_shifted_map(qubit):
    R = build_R(qubit)
    resolvent = Resolvent(R, 0.4, model_x_min(qubit))
    solution = resolvent.solve(qubit.jump_sum)

    np.testing.assert_allclose(
        R.shifted(0.4).apply(solution), qubit.jump_sum, atol=1e-12
    )

    inverse = resolvent.as_superoperator()
    np.testing.assert_allclose(
        inverse.matrix @ R.shifted(0.4).matrix, np.eye(4), atol=1e-12
    )


def test_resolvent_solves_share_one_factorization(qubit):
    R = build_R(qubit)
    A = np.array([[1.0, 0.5j], [-0.5j, 2.0]])
    solution = resolvent_solve(R, 0.4, A, model_x_min(qubit))

    np.testing.assert_allclose(R.shifted(0.4).apply(solution), A, atol=1e-12)
    assert cached_resolvent(R, 0.4, model_x_min(qubit)) is cached_resolvent(
        R, 0.4, model_x_min(qubit)
    )


def test_cached_factorizations_follow_tolerance_overrides(qubit):
    R = build_R(qubit)
    x_min = model_x_min(qubit)

    assert cached_resolvent(R, 0.4, x_min).x == 0.4

    ConfigManager().override("x_min_margin", 1e3)

    with pytest.raises(DomainError):
        cached_resolvent(R, 0.4, x_min)

    ConfigManager().override("x_min_margin", 1e-8)
    ConfigManager().override("cond_max", 1.0)

    with pytest.raises(SingularSolve):
        resolvent_solve(R, 0.4, np.eye(2), x_min)


def test_resolvent_refuses_fields_below_the_bound(decay):
    with pytest.raises(DomainError):
        Resolvent(build_R(decay), 0.0, model_x_min(decay))


def test_heisenberg_evolution_is_unital(qubit):
    generator = deformed_generator(qubit, 0.0)
    identity = np.eye(2)

    np.testing.assert_allclose(
        matrix_exp_apply(generator, 3.0, identity), identity, atol=1e-12
    )
    np.testing.assert_allclose(matrix_exp_apply(generator, 0.0, identity), identity)
    np.testing.assert_allclose(propagator(generator, 0.0).matrix, np.eye(4))

    with pytest.raises(ValueError):
        matrix_exp_apply(generator, -1.0, identity)


def test_dominant_eigenpair_of_the_lindbladian(qubit):
    generator = deformed_generator(qubit, 0.0)
    pair = dominant_eigenpair(generator, RankingMode.MAX_REAL_PART)

    assert pair.value == pytest.approx(0.0, abs=1e-12)
    assert np.trace(pair.state) == pytest.approx(1.0)
    assert is_positive_semidefinite(pair.state, 1e-10)
    np.testing.assert_allclose(pair.observable, np.eye(2), atol=1e-10)


def test_degenerate_dominant_is_refused():
    G = SuperOperator(np.diag([1.0, 1.0, 0.5, 0.0]), Picture.HEISENBERG, 2)

    with pytest.raises(DegenerateDominant):
        dominant_eigenpair(G, RankingMode.SPECTRAL_RADIUS, primitive=False)


def test_positive_semidefinite_check():
    assert is_positive_semidefinite(np.diag([1.0, 0.0]), 1e-12)
    assert not is_positive_semidefinite(np.diag([1.0, -0.5]), 1e-12)
    assert not is_positive_semidefinite(np.array([[0.0, 1.0], [0.0, 0.0]]), 1e-12)
