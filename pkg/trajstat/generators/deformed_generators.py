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

from functools import lru_cache
from locale import gettext as _
from typing import Sequence

import numpy as np

from trajstat.model import LindbladModel, effective_hamiltonian
from trajstat.superop import Picture, Resolvent, SuperOperator, RankingMode
from trajstat.superop import build_R, build_jump_map, cached_resolvent
from trajstat.superop import dominant_eigenpair
from trajstat.utils import tolerance_cache
from .tilt_point import EnsembleKind, TiltPoint


@lru_cache(maxsize=32)
def model_R(model: LindbladModel) -> SuperOperator:
    """The map ℛ of a model, built once per model."""

    return build_R(model)


@tolerance_cache("tol_eig")
def model_x_min(model: LindbladModel) -> float:
    """Stability bound of a model, computed once per model."""

    return effective_hamiltonian(model).x_min


def model_resolvent(model: LindbladModel, x: float) -> Resolvent:
    """Cached factorization of ``x·Id + ℛ`` for a model.

    Raises:
        DomainError: If ``x`` is not above ``x_min``.
    """

    return cached_resolvent(model_R(model), x, model_x_min(model))


def _require(tilt: TiltPoint, kind: EnsembleKind) -> None:
    if tilt.kind is not kind:
        message = _("Expected a %s tilt, got %s")
        raise ValueError(message % (kind.value, tilt.kind.value))


def tilted_jump_map(
    model: LindbladModel, c: Sequence[float] = (), scale: complex = 1.0
) -> SuperOperator:
    """``A ↦ scale·Σ_i e^{-c·M(i)}·L_i†·A·L_i`` in the Heisenberg picture."""

    weights = scale * model.jump_weights(c)
    return build_jump_map(model, weights)


def build_T(model: LindbladModel, tilt: TiltPoint) -> SuperOperator:
    """Deformed transfer map ``𝕋_{x,c} = (x·Id + ℛ)^{-1} ∘ 𝒥_c``.

    The single factorization of ``x·Id + ℛ`` is solved against every
    column of the tilted jump map at once.

    Raises:
        DomainError: If ``x`` is not above the stability bound.
    """

    _require(tilt, EnsembleKind.X_ENSEMBLE)

    resolvent = model_resolvent(model, tilt.field)
    jumps = tilted_jump_map(model, tilt.c)
    matrix = resolvent.solve_matrix(jumps.matrix)

    return SuperOperator(matrix, Picture.HEISENBERG, model.dim)


def deformed_generator(
    model: LindbladModel, s: complex, c: Sequence[float] = ()
) -> SuperOperator:
    """``−ℛ + e^{-s}·𝒥_c`` for a possibly complex counting field."""

    jumps = tilted_jump_map(model, c, np.exp(-s))
    return jumps - model_R(model)


def build_W(model: LindbladModel, tilt: TiltPoint) -> SuperOperator:
    """Deformed Lindblad generator ``𝕎_{s,c}`` in the Heisenberg picture."""

    _require(tilt, EnsembleKind.S_ENSEMBLE)
    return deformed_generator(model, tilt.field, tilt.c)


def connection_residual(
    model: LindbladModel,
    s: float,
    c: Sequence[float] = (),
    x: float | None = None,
) -> float:
    """Mismatch of the identity between the deformed transfer and generator.

    ``𝕋_{x,c} − e^s·Id = e^s·(x·Id+ℛ)^{-1}∘(𝕎_{s,c} − x·Id)``

    The identity holds for every admissible pair ``(x, s)``. When ``x``
    is not given the dual field ``θ(s,c)`` is used.

    Returns:
        Frobenius norm of the difference relative to ``‖𝕋_{x,c}‖``.
    """

    generator = build_W(model, TiltPoint.s(s, c))

    if x is None:
        pair = dominant_eigenpair(generator, RankingMode.MAX_REAL_PART, False)
        x = pair.value.real

    transfer = build_T(model, TiltPoint.x(x, c))
    resolvent = model_resolvent(model, x)

    size = model.dim ** 2
    lhs = transfer.matrix - np.exp(s) * np.eye(size)
    rhs = np.exp(s) * resolvent.solve_matrix(generator.shifted(-x).matrix)

    return float(np.linalg.norm(lhs - rhs) / np.linalg.norm(transfer.matrix))
