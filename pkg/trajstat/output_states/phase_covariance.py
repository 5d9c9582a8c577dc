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
from dataclasses import asdict, dataclass
from typing import Dict, Optional

import numpy as np

from trajstat.generators import TiltPoint
from trajstat.model import LindbladModel, PhaseTransform, apply_phase_transform
from trajstat.thermo import potential
from trajstat.trajectories import Scheme, Trajectory
from trajstat.trajectories import sample_fixed_time, trajectory_amplitude
from .reduced_states import ReducedEnsemble, ReducedState, reduced_state_finite

_logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PhaseContext:
    """Ensembles on which a phase transformation is checked.

    Attributes:
        s: Counting field of the s-ensemble.
        tau: Final time of the s-ensemble.
        K: Jump count of the x-ensemble.
        x: Time field of the x-ensemble.
        tau0: Observed window of the reduced states.
        n_max: Highest layer kept, ``None`` for the configured one.
        nodes: Quadrature nodes per time, ``None`` for the configured.
        n_pairs: Sampled record pairs for trajectory elements.
        seed: Root seed of the sampled records.
    """

    s: float = 0.3
    tau: float = 5.0
    K: int = 4
    x: float = 0.3
    tau0: float = 1.0
    n_max: Optional[int] = None
    nodes: Optional[int] = None
    n_pairs: int = 100
    seed: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class PhaseCovarianceReport:
    """Largest deviations from each law a transformation must obey.

    Attributes:
        kind: Transformation that was applied.
        phi: Its phase.
        errors: Deviation per law, keyed by law name.
        context: Ensembles the laws were checked on.
    """

    kind: PhaseTransform
    phi: float
    errors: Dict[str, float]
    context: PhaseContext

    def passed(self, tol: float = 1e-10) -> bool:
        return all(error <= tol for error in self.errors.values())

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "phi": self.phi,
            "errors": dict(self.errors),
            "passed": self.passed(),
            "context": self.context.to_dict(),
        }


def _max_difference(first: ReducedState, second: ReducedState, law=None) -> float:
    """Largest entrywise gap after mapping each block of ``first``."""

    worst = 0.0

    for key, block in first.blocks.items():
        expected = block if law is None else law(key, block)
        gap = np.abs(second.blocks[key] - expected)
        worst = max(worst, float(np.max(gap, initial=0.0)))

    return worst


def _reduced_pair(model, transformed, ensemble, context: PhaseContext):
    states = [
        reduced_state_finite(m, ensemble, context.tau0, context.n_max, context.nodes)
        for m in (model, transformed)
    ]

    return states[0], states[1]


def _sampled_pairs(model: LindbladModel, context: PhaseContext) -> list:
    """Records cut at their last jump, paired two by two."""

    batch = sample_fixed_time(model, context.tau, 2 * context.n_pairs, context.seed)
    records = [
        Trajectory(record.times, record.channels, Scheme.FIXED_COUNT)
        for record in batch.trajectories
    ]

    return list(zip(records[0::2], records[1::2]))


def _element(model, first: Trajectory, second: Trajectory, x: complex) -> complex:
    """Trajectory density matrix element ``⟨X'|ρ|X⟩`` at field ``x``."""

    return complex(
        np.vdot(
            trajectory_amplitude(model, second, x=x),
            trajectory_amplitude(model, first, x=x),
        )
    )


def _p1_errors(model, transformed, phi, context: PhaseContext) -> dict:
    s_ensemble = ReducedEnsemble.s_ensemble(context.tau, context.s)
    x_ensemble = ReducedEnsemble.x_ensemble(context.K, context.x)

    before, after = _reduced_pair(model, transformed, s_ensemble, context)
    shifted = reduced_state_finite(
        model,
        ReducedEnsemble.s_ensemble(context.tau, context.s - 2j * phi),
        context.tau0,
        context.n_max,
        context.nodes,
    )

    def phase_law(key, block):
        return np.exp(1j * phi * (key[0] - key[1])) * block

    x_before, x_after = _reduced_pair(model, transformed, x_ensemble, context)

    tilt = TiltPoint.x(context.x)
    potential_gap = abs(
        potential(transformed, tilt).potential - potential(model, tilt).potential
    )

    return {
        "s_phase_law": _max_difference(before, after, phase_law),
        "s_complex_shift": _max_difference(shifted, after),
        "x_invariance": _max_difference(x_before, x_after),
        "x_potential": float(potential_gap),
    }


def _p2_errors(model, transformed, phi, context: PhaseContext) -> dict:
    s_ensemble = ReducedEnsemble.s_ensemble(context.tau, context.s)
    x_ensemble = ReducedEnsemble.x_ensemble(context.K, context.x)

    before, after = _reduced_pair(model, transformed, s_ensemble, context)
    x_before, x_after = _reduced_pair(model, transformed, x_ensemble, context)

    # Records of the last layer end at their last jump, only X = X' is fixed
    def diagonal_only(key, block):
        if key[0] < context.K:
            return block

        expected = x_after.blocks[key].copy()
        np.fill_diagonal(expected, np.diag(block))
        return expected

    phase_law, complex_shift, scale = 0.0, 0.0, 0.0

    for first, second in _sampled_pairs(model, context):
        element = _element(model, first, second, context.x)
        moved = _element(transformed, first, second, context.x)
        shifted = _element(model, first, second, context.x + 2j * phi)

        expected = np.exp(-1j * phi * (first.T - second.T)) * element
        phase_law = max(phase_law, abs(moved - expected))
        complex_shift = max(complex_shift, abs(moved - shifted))
        scale = max(scale, abs(element))

    scale = scale if scale > 0.0 else 1.0

    return {
        "s_invariance": _max_difference(before, after),
        "x_invariance": _max_difference(x_before, x_after, diagonal_only),
        "x_phase_law": phase_law / scale,
        "x_complex_shift": complex_shift / scale,
    }


def phase_covariance_check(
    model: LindbladModel,
    kind: PhaseTransform | str,
    phi: float,
    context: Optional[PhaseContext] = None,
) -> PhaseCovarianceReport:
    """Check how one phase transformation acts on both ensembles.

    A rotation of the jump operators leaves every x-ensemble output
    unchanged and multiplies the s-ensemble block ``(N, N')`` by
    ``e^{iφ(N−N')}``, the same as the complex field ``s − 2iφ``. A
    shift of the Hamiltonian leaves the s-ensemble unchanged and turns
    the x-ensemble element between records ``X`` and ``X'`` by
    ``e^{−iφ(T−T')}``, the same as the complex field ``x + 2iφ``.

    Raises:
        DomainError: If an ensemble of the context is not admissible.
    """

    kind = PhaseTransform(kind)
    context = context or PhaseContext()
    transformed = apply_phase_transform(model, kind, phi)

    if kind is PhaseTransform.P1:
        errors = _p1_errors(model, transformed, phi, context)
    else:
        errors = _p2_errors(model, transformed, phi, context)

    _logger.info(
        "Phase covariance checked",
        extra={"kind": kind.value, "phi": phi, **errors},
    )

    return PhaseCovarianceReport(kind, float(phi), errors, context)
