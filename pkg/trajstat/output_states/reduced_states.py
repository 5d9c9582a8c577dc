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
from locale import gettext as _
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from trajstat.errors import DomainError
from trajstat.generators import EnsembleKind, TiltPoint, build_T, build_W
from trajstat.generators import partition_K, partition_tau, transfer_power
from trajstat.model import LindbladModel
from trajstat.superop import matrix_exp_apply
from trajstat.thermo import dual_map, potential, trace_distance
from trajstat.trajectories import waiting_time_sampler
from trajstat.utils import ConfigManager
from .quadrature import LayerGrid, layer_grid

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReducedEnsemble:
    """A finite canonical ensemble whose output is cut at ``τ₀``.

    Attributes:
        kind: Which truncation the ensemble uses.
        field: Counting field ``s`` (possibly complex) or ``x``.
        c: Spin counting field.
        tau: Final time of an s-ensemble.
        K: Jump count of an x-ensemble.
    """

    kind: EnsembleKind
    field: complex
    c: Tuple[float, ...] = ()
    tau: Optional[float] = None
    K: Optional[int] = None

    @classmethod
    def s_ensemble(cls, tau: float, s: complex, c: Sequence[float] = ()):
        return cls(EnsembleKind.S_ENSEMBLE, s, tuple(c), tau=float(tau))

    @classmethod
    def x_ensemble(cls, K: int, x: float, c: Sequence[float] = ()):
        return cls(EnsembleKind.X_ENSEMBLE, x, tuple(c), K=int(K))

    def to_dict(self) -> dict:
        field_value = complex(self.field)

        return {
            "kind": self.kind.value,
            "field": field_value.real if field_value.imag == 0 else str(field_value),
            "c": list(self.c),
            "tau": self.tau,
            "K": self.K,
        }


@dataclass(frozen=True, eq=False)
class ReducedState:
    """Layer blocks of a reduced output state on ``[0, τ₀]``.

    Blocks are weight embedded: row and column ``X`` carry the square
    root of the quadrature weight, so traces are quadrature sums.

    Attributes:
        blocks: Mapping from ``(N, N')`` to the matrix of elements.
        sizes: Number of grid records per layer.
    """

    blocks: Dict[Tuple[int, int], np.ndarray]
    sizes: Tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.sizes) - 1

    def layer_traces(self) -> list:
        return [
            float(np.real(np.trace(self.blocks[(N, N)])))
            for N in range(len(self.sizes))
        ]

    def block_norms(self) -> dict:
        return {
            f"{N},{N_prime}": float(np.linalg.norm(block))
            for (N, N_prime), block in sorted(self.blocks.items())
        }

    def assemble(self, block_diagonal: bool = False) -> np.ndarray:
        """The full matrix over every layer up to ``n_max``."""

        offsets = np.concatenate(([0], np.cumsum(self.sizes)))
        matrix = np.zeros((offsets[-1], offsets[-1]), dtype=complex)

        for (N, N_prime), block in self.blocks.items():
            if block_diagonal and N != N_prime:
                continue

            rows = slice(offsets[N], offsets[N + 1])
            columns = slice(offsets[N_prime], offsets[N_prime + 1])
            matrix[rows, columns] = block

        return matrix

    def to_dict(self) -> dict:
        return {
            "layer_traces": self.layer_traces(),
            "block_norms": self.block_norms(),
        }


@dataclass(frozen=True, eq=False)
class LimitState:
    """Blocks of the stationary output state of the s-ensemble.

    Attributes:
        s: Counting field.
        c: Spin counting field.
        tau0: Length of the observed window.
        state: Blocks built from ``E_{s,c}``.
        x_state: Diagonal blocks rebuilt from ``F_{x,c}`` at the dual
            point ``x = θ(s,c)``.
        x_mismatch: Largest difference between the diagonal blocks of
            the two constructions.
    """

    s: float
    c: Tuple[float, ...]
    tau0: float
    state: ReducedState
    x_state: ReducedState
    x_mismatch: float = 0.0

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "c": list(self.c),
            "tau0": self.tau0,
            "x_mismatch": self.x_mismatch,
            **self.state.to_dict(),
        }


def _grids(model: LindbladModel, tau0: float, n_max: int, nodes=None) -> list:
    return [layer_grid(N, float(tau0), model.n_jumps, nodes) for N in range(n_max + 1)]


def layer_amplitudes(
    model: LindbladModel,
    grid: LayerGrid,
    s: complex = 0.0,
    c: Sequence[float] = (),
    x: complex = 0.0,
    trailing: bool = True,
) -> np.ndarray:
    """Weighted amplitudes ``√w·V[X]ψ`` of every record on a grid.

    ``V[X]`` chains the no-jump evolution between jumps with the jump
    operators and, when ``trailing``, the evolution up to ``τ₀``. The
    tilt factor is ``e^{−sN/2 − c·M/2 − xT/2}``.

    Returns:
        Array ``(points, d)`` with one amplitude per row.
    """

    sampler = waiting_time_sampler(model)
    amplitudes = np.empty((grid.size, model.dim), dtype=complex)

    for index in range(grid.size):
        phi = np.array(model.initial_state, dtype=complex)
        clock = 0.0

        for time, channel in zip(grid.times[index], grid.channels[index]):
            phi = model.jumps[channel] @ sampler.evolve(phi, time - clock)
            clock = time

        if trailing:
            phi = sampler.evolve(phi, grid.tau0 - clock)

        amplitudes[index] = phi

    exponent = -0.5 * s * grid.N - 0.5 * x * _last_times(grid)

    if len(c) and grid.N > 0:
        spins = model.spins[grid.channels].sum(axis=1)
        exponent = exponent - 0.5 * spins @ np.asarray(c, dtype=float)

    factors = np.exp(exponent) * np.sqrt(grid.weights)

    return amplitudes * factors[:, None]


def _last_times(grid: LayerGrid) -> np.ndarray:
    if grid.N == 0:
        return np.zeros(grid.size)

    return grid.times[:, -1]


def _sandwich_block(left: np.ndarray, middle: np.ndarray, right: np.ndarray):
    """Elements ``a(X')†·middle·a(X)`` arranged as ``[X, X']``."""

    return left @ middle.T @ right.conj().T


def _s_blocks(model, ensemble, tau0, grids) -> dict:
    if ensemble.tau < tau0:
        raise DomainError(_("The window τ₀ must not exceed the final time"))

    real_tilt = TiltPoint.s(np.real(ensemble.field), ensemble.c)
    generator = build_W(model, real_tilt)
    middle = matrix_exp_apply(generator, ensemble.tau - tau0, np.eye(model.dim))
    middle = middle / partition_tau(model, real_tilt, ensemble.tau)

    amplitudes = [
        layer_amplitudes(model, grid, ensemble.field, ensemble.c) for grid in grids
    ]

    return {
        (N, N_prime): _sandwich_block(amplitudes[N], middle, amplitudes[N_prime])
        for N in range(len(grids))
        for N_prime in range(len(grids))
    }


def _x_diagonal_block(model, ensemble, grid: LayerGrid) -> np.ndarray:
    K, x, c = ensemble.K, float(np.real(ensemble.field)), ensemble.c
    tilt = TiltPoint.x(x, c)
    normalization = partition_K(model, tilt, K)

    if grid.N > K:
        return np.zeros((grid.size, grid.size), dtype=complex)

    if grid.N == K:
        amplitudes = layer_amplitudes(model, grid, 0.0, c, x, trailing=False)
        block = _sandwich_block(amplitudes, np.eye(model.dim), amplitudes)
        return block / normalization

    amplitudes = layer_amplitudes(model, grid, 0.0, c)
    middle = transfer_power(build_T(model, tilt), K - grid.N, np.eye(model.dim))
    middle = middle * np.exp(-x * grid.tau0) / normalization

    return _sandwich_block(amplitudes, middle, amplitudes)


def _x_blocks(model, ensemble, grids) -> dict:
    blocks = {}

    for N, grid in enumerate(grids):
        for N_prime, other in enumerate(grids):
            if N == N_prime:
                blocks[(N, N)] = _x_diagonal_block(model, ensemble, grid)
            else:
                blocks[(N, N_prime)] = np.zeros((grid.size, other.size), dtype=complex)

    return blocks


def reduced_state_finite(
    model: LindbladModel,
    ensemble: ReducedEnsemble,
    tau0: float,
    n_max: Optional[int] = None,
    nodes: Optional[int] = None,
) -> ReducedState:
    """Every layer block of a finite ensemble's reduced output state.

    x-ensemble blocks between different layers are zero: a record of
    fixed total count can only be completed after ``τ₀`` in one way.

    Raises:
        DomainError: If the ensemble is not admissible.
        QuadratureOverflow: If a layer grid is too large.
    """

    if n_max is None:
        n_max = int(ConfigManager().get_tolerance("n_max"))

    grids = _grids(model, tau0, n_max, nodes)

    if ensemble.kind is EnsembleKind.S_ENSEMBLE:
        blocks = _s_blocks(model, ensemble, tau0, grids)
    else:
        blocks = _x_blocks(model, ensemble, grids)

    return ReducedState(blocks, tuple(grid.size for grid in grids))


def reduced_block_finite(
    model: LindbladModel,
    ensemble: ReducedEnsemble,
    tau0: float,
    N: int,
    N_prime: int,
    nodes: Optional[int] = None,
) -> np.ndarray:
    """Reduced-state elements between records of layers ``N`` and ``N'``."""

    if ensemble.kind is EnsembleKind.X_ENSEMBLE and N != N_prime:
        grids = _grids(model, tau0, max(N, N_prime), nodes)
        return np.zeros((grids[N].size, grids[N_prime].size), dtype=complex)

    state = reduced_state_finite(model, ensemble, tau0, max(N, N_prime), nodes)
    return state.blocks[(N, N_prime)]


def limit_state(
    model: LindbladModel,
    s: float,
    c: Sequence[float] = (),
    tau0: float = 1.0,
    n_max: Optional[int] = None,
    nodes: Optional[int] = None,
) -> LimitState:
    """Reduced output state of the s-ensemble as ``τ → ∞``.

    Elements are ``e^{−τ₀θ}·a(X')†·E·a(X)/tr[ρE]`` with the tilted
    amplitudes ``a``. The same diagonal blocks are rebuilt from the
    x-ensemble at ``x = θ(s,c)``, where they become
    ``e^{−xτ₀−sN}·a₀(X')†·F·a₀(X)/tr[ρF]``.

    Raises:
        DegenerateDominant: If ``θ(s,c)`` is not isolated.
        DomainError: If ``θ(s,c)`` is not above ``x_min``.
    """

    if n_max is None:
        n_max = int(ConfigManager().get_tolerance("n_max"))

    grids = _grids(model, tau0, n_max, nodes)
    rho = model.density_matrix

    s_report = potential(model, TiltPoint.s(s, c))
    E = s_report.right_eig
    prefactor = np.exp(-tau0 * s_report.potential) / np.trace(rho @ E)

    amplitudes = [layer_amplitudes(model, grid, s, c) for grid in grids]
    blocks = {
        (N, N_prime): prefactor * _sandwich_block(amplitudes[N], E, amplitudes[N_prime])
        for N in range(n_max + 1)
        for N_prime in range(n_max + 1)
    }

    x_report = potential(model, dual_map(model, s_report.tilt))
    F = x_report.right_eig
    x_prefactor = np.exp(-x_report.tilt.field * tau0) / np.trace(rho @ F)

    x_blocks = {}

    for N, grid in enumerate(grids):
        bare = layer_amplitudes(model, grid, 0.0, c)
        scale = x_prefactor * np.exp(-x_report.potential * N)
        x_blocks[(N, N)] = scale * _sandwich_block(bare, F, bare)

    mismatch = max(
        float(np.max(np.abs(x_blocks[key] - blocks[key]), initial=0.0))
        for key in x_blocks
    )

    _logger.debug("Limit state built", extra={"s": s, "x_mismatch": mismatch})
    sizes = tuple(grid.size for grid in grids)

    return LimitState(
        s=float(s),
        c=tuple(float(v) for v in c),
        tau0=float(tau0),
        state=ReducedState(blocks, sizes),
        x_state=ReducedState(x_blocks, sizes),
        x_mismatch=mismatch,
    )


def reduced_trace_distance(
    first: ReducedState, second: ReducedState, block_diagonal: bool = False
) -> float:
    """Trace distance of two reduced states on their common grid."""

    return trace_distance(
        first.assemble(block_diagonal),
        second.assemble(block_diagonal),
    )


def reduced_convergence(
    model: LindbladModel,
    s: float,
    c: Sequence[float] = (),
    tau0: float = 1.0,
    taus: Sequence[float] = (),
    Ks: Sequence[int] = (),
    n_max: Optional[int] = None,
    nodes: Optional[int] = None,
) -> dict:
    """Distance of finite ensembles to the limit state.

    s-ensembles at each final time in ``taus`` and x-ensembles at the
    dual field for each count in ``Ks`` are compared layer by layer with
    the limit state; the x-ensembles only against its diagonal blocks.
    """

    limit = limit_state(model, s, c, tau0, n_max, nodes)
    x = dual_map(model, TiltPoint.s(s, c)).field

    def row(ensemble: ReducedEnsemble, key: str, value) -> dict:
        state = reduced_state_finite(model, ensemble, tau0, limit.state.n_max, nodes)
        diagonal = ensemble.kind is EnsembleKind.X_ENSEMBLE
        distance = reduced_trace_distance(state, limit.state, diagonal)

        return {key: value, "trace_distance": distance, **state.to_dict()}

    return {
        "limit": limit.to_dict(),
        "x": x,
        "s_ensemble": [
            row(ReducedEnsemble.s_ensemble(tau, s, c), "tau", tau) for tau in taus
        ],
        "x_ensemble": [
            row(ReducedEnsemble.x_ensemble(K, x, c), "K", K) for K in Ks
        ],
    }
