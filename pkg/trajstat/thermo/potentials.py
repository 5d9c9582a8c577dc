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
from typing import Optional

import numpy as np

from trajstat.errors import NonPositiveEigenvector
from trajstat.generators import EnsembleKind, TiltPoint
from trajstat.generators import build_T, build_W, model_resolvent
from trajstat.generators import model_x_min
from trajstat.model import LindbladModel
from trajstat.superop import EigenPair, RankingMode, SuperOperator
from trajstat.superop import build_jump_map, check_field, dominant_eigenpair
from trajstat.utils import ConfigManager
from .potential_report import IntensiveQuantities, PotentialReport

_logger = logging.getLogger(__name__)


def _is_renewal(model: LindbladModel) -> bool:
    from trajstat.renewal import NotRenewal, detect_renewal

    return not isinstance(detect_renewal(model), NotRenewal)


def _generator(model: LindbladModel, tilt: TiltPoint):
    if tilt.kind is EnsembleKind.X_ENSEMBLE:
        return build_T(model, tilt), RankingMode.SPECTRAL_RADIUS

    return build_W(model, tilt), RankingMode.MAX_REAL_PART


def _potential_value(tilt: TiltPoint, value: complex) -> float:
    if tilt.kind is EnsembleKind.S_ENSEMBLE:
        return float(value.real)

    if value.real <= 0.0 or abs(value.imag) > 1e-10 * abs(value):
        raise NonPositiveEigenvector(
            _("Dominant eigenvalue %s of the transfer map is not positive")
            % value
        )

    return math.log(value.real)


def _contract(model: LindbladModel, tilt: TiltPoint, pair: EigenPair):
    """Derivatives of the potential from its eigenvectors.

    Uses first order perturbation of the dominant eigenvalue, so no
    extra eigen decompositions are needed.
    """

    sigma, observable = pair.left, pair.right
    spins = model.spins.T

    def overlap(operator: np.ndarray) -> complex:
        return np.trace(sigma @ operator)

    if tilt.kind is EnsembleKind.S_ENSEMBLE:
        scale = np.exp(-tilt.field) * model.jump_weights(tilt.c)
        terms = np.array([
            overlap(jump.conj().T @ observable @ jump)
            for jump in model.jumps
        ])

        k = float(np.real(np.sum(scale * terms)))
        m_tilde = tuple(float(np.real(np.sum(row * scale * terms))) for row in spins)

        return IntensiveQuantities(k=k, m_tilde=m_tilde)

    resolvent = model_resolvent(model, tilt.field)
    weights = model.jump_weights(tilt.c)

    t = float(np.real(overlap(resolvent.solve(observable))))
    m = []

    for row in spins:
        jumps = build_jump_map(model, row * weights)
        value = overlap(resolvent.solve(jumps.apply(observable)))
        m.append(float(np.real(value / pair.value)))

    return IntensiveQuantities(t=t, m=tuple(m))


def potential(
    model: LindbladModel, tilt: TiltPoint, primitive: Optional[bool] = None
) -> PotentialReport:
    """Thermodynamic potential ``g(x,c)`` or ``θ(s,c)`` at one tilt.

    For the x-ensemble the potential is the logarithm of the spectral
    radius of ``𝕋_{x,c}``; for the s-ensemble it is the eigenvalue of
    ``𝕎_{s,c}`` with largest real part.

    Args:
        model: The open quantum system.
        tilt: Where to evaluate.
        primitive: Require a positive semidefinite dominant eigenvector.
            By default this holds except for x-ensemble renewal models,
            whose rank one transfer map is not primitive.

    Raises:
        DomainError: If an x-ensemble field is below the stability bound.
        DegenerateDominant: If the dominant eigenvalue is not isolated.
        NonPositiveEigenvector: If positivity was required and fails.
    """

    if primitive is None:
        primitive = True

        if tilt.kind is EnsembleKind.X_ENSEMBLE and _is_renewal(model):
            _logger.debug("Renewal model, primitivity check waived")
            primitive = False

    generator, mode = _generator(model, tilt)
    pair = dominant_eigenpair(generator, mode, primitive)
    dual = dominant_eigenpair(generator.adjoint(), mode, primitive)

    value = _potential_value(tilt, pair.value)
    intensive = _contract(model, tilt, pair)

    return PotentialReport(
        tilt=tilt,
        potential=value,
        right_eig=pair.right,
        left_eig_heis=pair.left,
        left_eig_schr=dual.state,
        gap=pair.gap,
        intensive=intensive,
        eigenvalue=pair.value,
    )


def dual_map(model: LindbladModel, tilt: TiltPoint) -> TiltPoint:
    """Map a tilt to its dual in the other ensemble.

    ``s ↦ x = θ(s,c)`` and ``x ↦ s = g(x,c)``. The spin field ``c`` is
    carried over unchanged.

    Raises:
        DomainError: If the dual of an s-tilt lands at or below
            ``x_min``.
    """

    value = potential(model, tilt).potential

    if tilt.kind is EnsembleKind.S_ENSEMBLE:
        check_field(value, model_x_min(model))
        return TiltPoint.x(value, tilt.c)

    return TiltPoint.s(value, tilt.c)


def intensive_quantities(model: LindbladModel, tilt: TiltPoint) -> IntensiveQuantities:
    """``t`` and ``m`` in the x-ensemble, ``k`` and ``m̃`` in the s-ensemble."""

    return potential(model, tilt).intensive


def finite_difference_intensive(
    model: LindbladModel, tilt: TiltPoint, step: Optional[float] = None
) -> IntensiveQuantities:
    """Intensive quantities by central differences of the potential.

    Slower and less accurate than :func:`intensive_quantities`; used to
    cross-check the analytic contractions.
    """

    if step is None:
        step = ConfigManager().get_tolerance("fd_step")

    def value_at(point: TiltPoint) -> float:
        return potential(model, point).potential

    def derivative(lower: TiltPoint, upper: TiltPoint) -> float:
        return -(value_at(upper) - value_at(lower)) / (2.0 * step)

    rate = derivative(
        tilt.with_field(tilt.field - step),
        tilt.with_field(tilt.field + step),
    )

    spin = []

    for index in range(len(tilt.c)):
        shift = np.zeros(len(tilt.c))
        shift[index] = step
        spin.append(derivative(
            tilt.with_c(tilt.c_vector - shift),
            tilt.with_c(tilt.c_vector + shift),
        ))

    if tilt.kind is EnsembleKind.X_ENSEMBLE:
        return IntensiveQuantities(t=rate, m=tuple(spin))

    return IntensiveQuantities(k=rate, m_tilde=tuple(spin))


def schrodinger_generator(model: LindbladModel, tilt: TiltPoint) -> SuperOperator:
    """The Schrödinger-picture map dual to the tilt's Heisenberg map."""

    generator, _mode = _generator(model, tilt)
    return generator.adjoint()

