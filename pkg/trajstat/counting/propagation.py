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
import math
from locale import gettext as _
from typing import Optional, Sequence

import numpy as np
import scipy.integrate
import scipy.linalg
import scipy.sparse
import scipy.sparse.linalg

from trajstat.errors import NumericalError, TailMassExceeded
from trajstat.generators import TiltPoint, deformed_generator, model_R
from trajstat.generators import model_x_min, partition_K, partition_tau
from trajstat.generators import tilted_jump_map
from trajstat.model import LindbladModel
from trajstat.superop import matrix_exp_apply, stack, unstack
from trajstat.thermo import potential
from trajstat.utils import ConfigManager
from .count_resolved_state import CountResolvedState

_logger = logging.getLogger(__name__)

# Dense exponentials are used up to this many unknowns
_DENSE_LIMIT = 2048

# Never resolve more jump counts than this
_K_LIMIT = 1 << 14

# Number of intervals of the Laplace quadrature grid
_LAPLACE_INTERVALS = 1 << 14


def _is_tilted(c: Sequence[float]) -> bool:
    return bool(np.any(np.asarray(c, dtype=float) != 0.0))


def _no_jump_generator(model: LindbladModel) -> np.ndarray:
    """Schrödinger generator ``ρ ↦ −i(H_eff·ρ − ρ·H_eff†)``."""

    return -model_R(model).adjoint().matrix


def _jump_generator(model: LindbladModel, c: Sequence[float]) -> np.ndarray:
    """Schrödinger jump map ``ρ ↦ Σ_i e^{-c·M(i)}·L_i·ρ·L_i†``."""

    return tilted_jump_map(model, c).adjoint().matrix


def _block_generator(model: LindbladModel, n_blocks: int, c: Sequence[float]):
    """Lower bidiagonal generator of the count resolved states."""

    diagonal = scipy.sparse.csr_matrix(_no_jump_generator(model))
    lower = scipy.sparse.csr_matrix(_jump_generator(model, c))

    rows = [
        [
            diagonal if row == column else lower if row == column + 1 else None
            for column in range(n_blocks)
        ]
        for row in range(n_blocks)
    ]

    return scipy.sparse.bmat(rows, format="csc", dtype=complex)


def _initial_vector(model: LindbladModel, n_blocks: int) -> np.ndarray:
    size = model.dim ** 2
    vector = np.zeros(n_blocks * size, dtype=complex)
    vector[:size] = stack(model.density_matrix)

    return vector


def _unstack_blocks(vector: np.ndarray, dim: int) -> np.ndarray:
    chunks = vector.reshape(-1, dim * dim)
    blocks = np.stack([unstack(chunk, dim) for chunk in chunks])

    return 0.5 * (blocks + np.conj(np.swapaxes(blocks, 1, 2)))


def _propagate_blocks(
    model: LindbladModel, tau: float, n_blocks: int, c: Sequence[float]
) -> np.ndarray:
    vector = _initial_vector(model, n_blocks)

    if tau > 0:
        generator = _block_generator(model, n_blocks, c)

        if vector.size <= _DENSE_LIMIT:
            vector = scipy.linalg.expm(tau * generator.toarray()) @ vector
        else:
            vector = scipy.sparse.linalg.expm_multiply(tau * generator, vector)

    return _unstack_blocks(vector, model.dim)


def _jump_rate(model: LindbladModel) -> float:
    """Stationary jump rate, or the fastest jump rate if that fails."""

    try:
        rate = potential(model, TiltPoint.s(0.0)).intensive.k
    except NumericalError:
        rate = 0.0

    if rate > 1e-12:
        return rate

    return float(np.max(np.linalg.eigvalsh(model.jump_sum)))


def initial_k_max(model: LindbladModel, tau: float) -> int:
    """First guess of the count truncation for a propagation time."""

    mean = _jump_rate(model) * tau
    return math.ceil(3.0 + 2.0 * mean + 6.0 * math.sqrt(mean))


def count_resolved_propagate(
    model: LindbladModel,
    tau: float,
    K_max: Optional[int] = None,
    c: Sequence[float] = (),
) -> CountResolvedState:
    """Propagate the states resolved by the number of jumps.

    Integrates ``dρ_k/dt = 𝓛₀ρ_k + 𝒥_c ρ_{k−1}`` for ``k = 0..K_max``
    with a single exponential of the block generator. Blocks up to
    ``K_max`` are exact; what escapes beyond is reported as tail mass.

    Args:
        model: The open quantum system.
        tau: Final time.
        K_max: Largest resolved count. When omitted it starts from the
            stationary jump rate and doubles until the tail is small.
        c: Spin counting field weighting every jump.

    Raises:
        TailMassExceeded: If the tail mass exceeds ``tail_mass``.
    """

    if tau < 0:
        raise ValueError(_("Final time must be nonnegative"))

    if K_max is not None and K_max < 0:
        raise ValueError(_("Jump count must be nonnegative"))

    tolerance = ConfigManager().get_tolerance("tail_mass")
    automatic = K_max is None
    tilted = _is_tilted(c)

    if automatic:
        K_max = initial_k_max(model, tau)

    while True:
        blocks = _propagate_blocks(model, tau, K_max + 1, c)
        untilted = _propagate_blocks(model, tau, K_max + 1, ()) if tilted else blocks
        mass = float(np.sum(np.real(np.trace(untilted, axis1=1, axis2=2))))
        tail_mass = max(0.0, 1.0 - mass)

        if tail_mass <= tolerance:
            break

        if not automatic or K_max >= _K_LIMIT:
            raise TailMassExceeded(
                _("Tail mass %.3g beyond K_max = %d") % (tail_mass, K_max),
                tail_mass,
                2 * max(K_max, 1),
            )

        K_max *= 2

    _logger.debug(
        "Count resolved propagation",
        extra={"tau": tau, "K_max": K_max, "tail_mass": tail_mass},
    )

    return CountResolvedState(tau, blocks, K_max, tail_mass, tuple(c))


def generating_function_check(
    model: LindbladModel, s: float, c: Sequence[float], tau: float
) -> float:
    """Compare the count resolved and tilted routes to ``Z_τ(s,c)``.

    For negative ``s`` the truncated sum is weighted towards large
    counts, so the truncation is enlarged until the sum settles.

    Returns:
        ``|Σ_K e^{-sK}·tr ρ_K(τ) − Z_τ(s,c)|``.
    """

    state = count_resolved_propagate(model, tau, None, c)
    total = state.generating(s)

    while s < 0 and state.K_max < _K_LIMIT:
        state = count_resolved_propagate(model, tau, 2 * state.K_max, c)
        previous, total = total, state.generating(s)

        if abs(total - previous) <= 1e-13 * abs(total):
            break

    reference = partition_tau(model, TiltPoint.s(s, c), tau)

    return abs(total - reference)


def fft_counting_distribution(
    model: LindbladModel,
    tau: float,
    n_points: Optional[int] = None,
    c: Sequence[float] = (),
) -> np.ndarray:
    """Counting statistics by inverting ``Z_τ`` on a phase grid.

    Evaluates ``Z_τ(−iφ, c)`` at ``n_points`` equispaced phases and
    returns its discrete Fourier inverse. Entry ``K`` holds the sum of
    ``P_τ(K')`` over every ``K' ≡ K`` modulo ``n_points``.
    """

    if n_points is None:
        n_points = int(ConfigManager().get_tolerance("fft_points"))

    psi = model.initial_state
    identity = np.eye(model.dim)
    values = np.empty(n_points, dtype=complex)

    for index in range(n_points):
        phase = 2.0 * np.pi * index / n_points
        generator = deformed_generator(model, -1j * phase, c)
        operator = matrix_exp_apply(generator, tau, identity)
        values[index] = np.vdot(psi, operator @ psi)

    return np.real(np.fft.fft(values)) / n_points


def _jump_time_scan(
    model: LindbladModel, K: int, T_grid: Sequence[float], c: Sequence[float]
):
    """Density of the K-th jump and the mass still waiting for it."""

    if K < 1:
        raise ValueError(_("The jump index must be at least one"))

    grid = np.asarray(T_grid, dtype=float)

    if np.any(grid < 0) or np.any(np.diff(grid) < 0):
        raise ValueError(_("Time grid must be nonnegative and increasing"))

    dim = model.dim
    size = dim * dim
    jumps = _jump_generator(model, c)
    generator = _block_generator(model, K, c).toarray()

    diagonal = np.arange(dim) * (dim + 1)
    vector = _initial_vector(model, K)
    propagators = {}
    current = 0.0

    density = np.empty(grid.size)
    waiting = np.empty(grid.size)

    for index, time in enumerate(grid):
        step = time - current

        if step > 0:
            key = round(step, 12)

            if key not in propagators:
                propagators[key] = scipy.linalg.expm(step * generator)

            vector = propagators[key] @ vector
            current = time

        last = jumps @ vector[-size:]
        blocks = vector.reshape(K, size)

        density[index] = np.real(np.sum(last[diagonal]))
        waiting[index] = np.real(np.sum(blocks[:, diagonal]))

    return density, waiting


def jump_time_density(
    model: LindbladModel, K: int, T_grid: Sequence[float], c: Sequence[float] = ()
) -> np.ndarray:
    """Density ``p_K(T) = tr[𝒥_c ρ_{K−1}(T)]`` of the K-th jump time.

    Only counts below ``K`` are propagated, and those are exact, so no
    truncation error enters the density.

    Raises:
        ValueError: If ``K < 1`` or the grid is not increasing.
    """

    density, _waiting = _jump_time_scan(model, K, T_grid, c)
    return density


def laplace_check(
    model: LindbladModel, K: int, x: float, c: Sequence[float] = ()
) -> dict:
    """Integrate ``e^{-xT}·p_K(T)`` and compare it with ``Z_K(x,c)``.

    The horizon doubles until the weight left beyond it is negligible;
    the integral is evaluated with Simpson's rule. For ``x < 0`` the
    tail estimate carries the factor ``1 + |x|/(x − x_min)`` since the
    waiting mass decays like ``e^{x_min·T}``.

    Returns:
        Mapping with the quadrature, the partition function, the
        absolute difference and the horizon used.
    """

    reference = partition_K(model, TiltPoint.x(x, c), K)
    rate = max(_jump_rate(model), 1e-3)
    horizon = max(20.0, 4.0 * K / rate)
    growth = 1.0 + max(-x, 0.0) / (x - model_x_min(model))

    for _attempt in range(16):
        grid = np.linspace(0.0, horizon, _LAPLACE_INTERVALS + 1)
        density, waiting = _jump_time_scan(model, K, grid, c)
        remainder = growth * math.exp(-x * horizon) * waiting[-1]

        if remainder < 1e-10 * max(reference, 1e-300):
            break

        horizon *= 2.0

    integral = scipy.integrate.simpson(np.exp(-x * grid) * density, x=grid)

    return {
        "K": K,
        "x": x,
        "integral": float(integral),
        "partition": float(reference),
        "error": float(abs(integral - reference)),
        "horizon": horizon,
    }
