# -*- coding: utf-8 -*-

"""Builders for the reference models shipped with trajstat."""

import numpy as np
from scipy.stats import unitary_group

from .lindblad_model import LindbladModel


def _ket(dim: int, index: int) -> np.ndarray:
    ket = np.zeros(dim, dtype=complex)
    ket[index] = 1.0
    return ket


def _transition(dim: int, target: int, source: int) -> np.ndarray:
    return np.outer(_ket(dim, target), _ket(dim, source))


def two_level_decay(kappa: float = 1.0) -> LindbladModel:
    """Spontaneous decay of an excited two-level atom."""

    return LindbladModel(
        hamiltonian=np.zeros((2, 2)),
        jumps=(np.sqrt(kappa) * _transition(2, 0, 1),),
        spins=np.zeros((1, 0)),
        initial_state=_ket(2, 1),
        name="two_level_decay",
    )


def three_level_renewal(
    omega1: float = 1.0, omega2: float = 0.2, kappa: float = 1.0
) -> LindbladModel:
    """Three-level atom driven by two lasers from its ground state.

    Only the ``|1⟩ → |0⟩`` transition is monitored, so every detection
    resets the atom to ``|0⟩`` and waiting times are independent.
    """

    hamiltonian = np.zeros((3, 3), dtype=complex)

    for level, omega in ((1, omega1), (2, omega2)):
        hamiltonian += omega * (
            _transition(3, 0, level) + _transition(3, level, 0)
        )

    return LindbladModel(
        hamiltonian=hamiltonian,
        jumps=(np.sqrt(kappa) * _transition(3, 0, 1),),
        spins=np.zeros((1, 0)),
        initial_state=_ket(3, 0),
        name="three_level_renewal",
    )


def driven_qubit(
    omega: float = 1.0, kappa: float = 1.0, gamma: float = 0.3
) -> LindbladModel:
    """Resonantly driven qubit exchanging quanta with a warm bath.

    Emissions carry spin ``+1`` and absorptions spin ``-1``, so the spin
    counting field measures the net number of emitted quanta.
    """

    hamiltonian = 0.5 * omega * (_transition(2, 0, 1) + _transition(2, 1, 0))

    return LindbladModel(
        hamiltonian=hamiltonian,
        jumps=(
            np.sqrt(kappa) * _transition(2, 0, 1),
            np.sqrt(gamma) * _transition(2, 1, 0),
        ),
        spins=np.array([[1.0], [-1.0]]),
        initial_state=_ket(2, 0),
        name="driven_qubit",
    )


def random_model(
    dim: int, n_jumps: int = 2, seed: int = 0, spin_length: int = 0
) -> LindbladModel:
    """Model with a Haar-random Hamiltonian and Gaussian jump operators."""

    rng = np.random.default_rng(seed)

    basis = unitary_group.rvs(dim, random_state=rng)
    energies = rng.normal(size=dim)
    hamiltonian = basis @ np.diag(energies) @ basis.conj().T
    hamiltonian = 0.5 * (hamiltonian + hamiltonian.conj().T)

    scale = 1.0 / np.sqrt(2.0 * dim * n_jumps)
    jumps = tuple(
        scale * (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim)))
        for _ in range(n_jumps)
    )

    spins = rng.choice([-1.0, 1.0], size=(n_jumps, spin_length))

    psi = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    psi /= np.linalg.norm(psi)

    return LindbladModel(hamiltonian, jumps, spins, psi, name=f"random_{seed}")
