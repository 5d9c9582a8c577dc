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

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np

from trajstat.model import LindbladModel, effective_hamiltonian


class Picture(str, Enum):
    """Whether a map acts on observables or on states."""

    HEISENBERG = "heisenberg"
    SCHRODINGER = "schrodinger"

    def dual(self) -> "Picture":
        if self is Picture.HEISENBERG:
            return Picture.SCHRODINGER

        return Picture.HEISENBERG


def stack(operator: np.ndarray) -> np.ndarray:
    """Column-stack a ``d×d`` operator into a ``d²`` vector."""

    return np.asarray(operator).reshape(-1, order="F")


def unstack(vector: np.ndarray, dim: int) -> np.ndarray:
    """Inverse of :func:`stack`."""

    return np.asarray(vector).reshape((dim, dim), order="F")


def sandwich(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Matrix of ``A ↦ left·A·right`` on column-stacked operators."""

    return np.kron(np.asarray(right).T, np.asarray(left))


@dataclass(frozen=True, eq=False)
class SuperOperator:
    """A linear map on ``d×d`` operators.

    The map is stored as a dense ``d²×d²`` matrix acting on operators
    stacked column by column, so that ``vec(L·A·R) = (Rᵀ⊗L)·vec(A)``.
    """

    matrix: np.ndarray
    picture: Picture
    dim: int

    def __post_init__(self) -> None:
        matrix = np.array(self.matrix, dtype=complex)
        size = self.dim * self.dim

        if matrix.shape != (size, size):
            raise ValueError(f"Expected a {size}x{size} matrix, got {matrix.shape}")

        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "picture", Picture(self.picture))

    @classmethod
    def identity(cls, dim: int, picture: Picture) -> "SuperOperator":
        return cls(np.eye(dim * dim), picture, dim)

    @classmethod
    def from_sandwiches(
        cls,
        pairs: Sequence[tuple[np.ndarray, np.ndarray]],
        picture: Picture,
        weights: Sequence[complex] | None = None,
    ) -> "SuperOperator":
        """Build ``A ↦ Σ_k w_k·left_k·A·right_k``."""

        dim = np.asarray(pairs[0][0]).shape[0]
        weights = np.ones(len(pairs)) if weights is None else weights
        matrix = np.zeros((dim * dim, dim * dim), dtype=complex)

        for weight, (left, right) in zip(weights, pairs):
            matrix += weight * sandwich(left, right)

        return cls(matrix, picture, dim)

    def apply(self, operator: np.ndarray) -> np.ndarray:
        """Evaluate the map on a ``d×d`` operator."""

        return unstack(self.matrix @ stack(operator), self.dim)

    def adjoint(self) -> "SuperOperator":
        """Hilbert–Schmidt adjoint, living in the dual picture."""

        return SuperOperator(self.matrix.conj().T, self.picture.dual(), self.dim)

    def choi(self) -> np.ndarray:
        """Choi matrix ``Σ_ij |i⟩⟨j| ⊗ G(|i⟩⟨j|)``."""

        dim = self.dim
        choi = np.zeros((dim * dim, dim * dim), dtype=complex)

        for i in range(dim):
            for j in range(dim):
                unit = np.zeros((dim, dim), dtype=complex)
                unit[i, j] = 1.0
                choi += np.kron(unit, self.apply(unit))

        return choi

    def compose(self, other: "SuperOperator") -> "SuperOperator":
        """The map ``A ↦ self(other(A))``."""

        return SuperOperator(self.matrix @ other.matrix, self.picture, self.dim)

    def shifted(self, value: complex) -> "SuperOperator":
        """The map ``self + value·Id``."""

        matrix = self.matrix + value * np.eye(self.dim * self.dim)
        return SuperOperator(matrix, self.picture, self.dim)

    def __add__(self, other: "SuperOperator") -> "SuperOperator":
        return SuperOperator(self.matrix + other.matrix, self.picture, self.dim)

    def __sub__(self, other: "SuperOperator") -> "SuperOperator":
        return SuperOperator(self.matrix - other.matrix, self.picture, self.dim)

    def __mul__(self, scalar: complex) -> "SuperOperator":
        return SuperOperator(scalar * self.matrix, self.picture, self.dim)

    __rmul__ = __mul__

    def __neg__(self) -> "SuperOperator":
        return SuperOperator(-self.matrix, self.picture, self.dim)


def build_R(model: LindbladModel) -> SuperOperator:
    """The Heisenberg map ``ℛ(A) = i·A·H_eff − i·H_eff†·A``."""

    heff = effective_hamiltonian(model).matrix
    identity = np.eye(model.dim)

    matrix = 1j * sandwich(identity, heff) - 1j * sandwich(heff.conj().T, identity)
    return SuperOperator(matrix, Picture.HEISENBERG, model.dim)


def build_jump_map(
    model: LindbladModel, weights: Sequence[complex] | None = None
) -> SuperOperator:
    """The Heisenberg map ``A ↦ Σ_i w_i·L_i†·A·L_i``."""

    pairs = [(jump.conj().T, jump) for jump in model.jumps]
    return SuperOperator.from_sandwiches(pairs, Picture.HEISENBERG, weights)
