# -*- coding: utf-8 -*-

# Trajstat: thermodynamics of quantum trajectories
# Copyright (C) 2025 The Trajstat Authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

from dataclasses import dataclass, field
from functools import cached_property
from locale import gettext as _
from typing import Sequence, Tuple

import numpy as np

from trajstat.errors import ValidationError
from trajstat.utils import ConfigManager


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=complex)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class LindbladModel:
    """An open quantum system monitored through its jump channels.

    Holds the Hamiltonian ``H``, the jump operators ``L_i`` with their
    spin labels ``M(i)`` and the initial pure state ``ψ``. Instances are
    immutable and validated on construction.

    Attributes:
        hamiltonian: Hermitian ``d×d`` matrix, in inverse time units.
        jumps: Tuple of ``d×d`` jump operators.
        spins: Real array of shape ``(N_L, p)`` with the spin labels.
        initial_state: Normalized complex vector of length ``d``.
    """

    hamiltonian: np.ndarray
    jumps: Tuple[np.ndarray, ...]
    spins: np.ndarray
    initial_state: np.ndarray
    name: str = field(default="model", compare=False)

    def __post_init__(self) -> None:
        jumps = tuple(_frozen(jump) for jump in self.jumps)

        try:
            spins = np.array(self.spins, dtype=float)
        except ValueError:
            raise ValidationError(_("Spin labels must share one length"))

        if spins.ndim == 1 and spins.size == 0:
            spins = np.zeros((len(jumps), 0))

        spins.setflags(write=False)

        object.__setattr__(self, "hamiltonian", _frozen(self.hamiltonian))
        object.__setattr__(self, "jumps", jumps)
        object.__setattr__(self, "spins", spins)
        object.__setattr__(self, "initial_state", _frozen(self.initial_state))

        problems = check_model(self)

        if problems:
            raise ValidationError("; ".join(problems))

    @property
    def dim(self) -> int:
        """Dimension ``d`` of the system Hilbert space."""

        return self.hamiltonian.shape[0]

    @property
    def n_jumps(self) -> int:
        """Number of jump channels ``N_L``."""

        return len(self.jumps)

    @property
    def spin_length(self) -> int:
        """Length ``p`` of the spin label vectors."""

        return self.spins.shape[1]

    @cached_property
    def density_matrix(self) -> np.ndarray:
        """Initial state as a density matrix ``|ψ⟩⟨ψ|``."""

        psi = self.initial_state
        return np.outer(psi, psi.conj())

    @cached_property
    def jump_sum(self) -> np.ndarray:
        """The positive operator ``D = Σ_i L_i†L_i``."""

        total = np.zeros((self.dim, self.dim), dtype=complex)

        for jump in self.jumps:
            total += jump.conj().T @ jump

        return total

    def jump_weights(self, c: Sequence[float] | None = None) -> np.ndarray:
        """Counting weights ``e^{-c·M(i)}`` of every channel.

        Args:
            c: Spin counting field of length ``p``. An empty or missing
                field leaves every weight at one.
        """

        c = np.zeros(self.spin_length) if c is None else np.asarray(c)

        if c.size == 0:
            return np.ones(self.n_jumps)

        if c.shape != (self.spin_length,):
            raise ValidationError(
                _("Counting field has length %d, expected %d")
                % (c.size, self.spin_length)
            )

        return np.exp(-(self.spins @ c))

    def replace(self, **changes) -> "LindbladModel":
        """Copy of this model with some fields replaced."""

        values = {
            "hamiltonian": self.hamiltonian,
            "jumps": self.jumps,
            "spins": self.spins,
            "initial_state": self.initial_state,
            "name": self.name,
        }

        values.update(changes)
        return LindbladModel(**values)


def check_model(model: LindbladModel) -> list[str]:
    """Collect every invariant violation of a model.

    Returns:
        Human readable descriptions, empty when the model is valid.
    """

    config = ConfigManager()
    tol_herm = config.get_tolerance("tol_herm")
    tol_norm = config.get_tolerance("tol_norm")
    problems = []

    hamiltonian = model.hamiltonian

    if hamiltonian.ndim != 2 or hamiltonian.shape[0] != hamiltonian.shape[1]:
        return [_("Hamiltonian is not a square matrix")]

    dim = hamiltonian.shape[0]

    if dim < 1:
        problems.append(_("Dimension must be positive"))

    defect = np.max(np.abs(hamiltonian - hamiltonian.conj().T), initial=0.0)

    if defect > tol_herm:
        problems.append(_("Hamiltonian is not Hermitian (defect %.3g)") % defect)

    if len(model.jumps) < 1:
        problems.append(_("At least one jump operator is required"))

    for index, jump in enumerate(model.jumps):
        if jump.shape != (dim, dim):
            problems.append(
                _("Jump operator %d has shape %s, expected %s")
                % (index, jump.shape, (dim, dim))
            )

    if model.spins.ndim != 2 or model.spins.shape[0] != len(model.jumps):
        problems.append(_("Every jump needs a spin label of the same length"))

    if model.initial_state.shape != (dim,):
        problems.append(_("Initial state has the wrong dimension"))
    else:
        norm = np.linalg.norm(model.initial_state)

        if abs(norm - 1.0) > tol_norm:
            problems.append(_("Initial state is not normalized (norm %.15g)") % norm)

    return problems
