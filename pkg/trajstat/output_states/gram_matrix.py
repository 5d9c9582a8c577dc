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

import logging
from dataclasses import dataclass

import numpy as np

from trajstat.generators import model_resolvent
from trajstat.model import LindbladModel

_logger = logging.getLogger(__name__)

# Relative eigenvalue cut defining the effective bond dimension
_RANK_CUT = 1e-12


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Inner products of the single-jump output wavefunctions.

    Entry ``[(m,m'),(m̃,m̃')]`` sits at row ``m·d + m'`` and column
    ``m̃·d + m̃'``.

    Attributes:
        entries: The ``d²×d²`` Hermitian matrix.
        eigenvalues: Its eigenvalues in decreasing order.
        bond_basis: Orthonormal eigenvectors above the rank cut, as
            columns.
    """

    entries: np.ndarray
    eigenvalues: np.ndarray
    bond_basis: np.ndarray

    @property
    def rank(self) -> int:
        """Effective bond dimension."""

        return self.bond_basis.shape[1]


def gram_matrix(model: LindbladModel) -> GramMatrix:
    """Closed-form Gram matrix through resolvent solves at ``x = 0``.

    Each column block solves
    ``ℛ(Y) = Σ_i L_i†·|m⟩⟨m̃|·L_i`` and the entries are ``⟨m'|Y|m̃'⟩``.

    Raises:
        DomainError: If ``x_min`` is zero, where the waiting-time
            integrals diverge.
    """

    dim = model.dim
    resolvent = model_resolvent(model, 0.0)
    entries = np.zeros((dim * dim, dim * dim), dtype=complex)

    for m in range(dim):
        for m_tilde in range(dim):
            source = sum(
                np.outer(jump.conj().T[:, m], jump[m_tilde, :])
                for jump in model.jumps
            )
            rows = slice(m * dim, (m + 1) * dim)
            columns = slice(m_tilde * dim, (m_tilde + 1) * dim)
            entries[rows, columns] = resolvent.solve(source)

    entries = 0.5 * (entries + entries.conj().T)
    values, vectors = np.linalg.eigh(entries)
    values, vectors = values[::-1], vectors[:, ::-1]

    keep = values > _RANK_CUT * max(values[0], 0.0)
    _logger.debug("Gram matrix rank %d of %d", int(np.sum(keep)), dim * dim)

    return GramMatrix(entries, values, vectors[:, keep])
