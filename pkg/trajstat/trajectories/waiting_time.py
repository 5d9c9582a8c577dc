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
from locale import gettext as _
from typing import NamedTuple

import numpy as np
import scipy.linalg
import scipy.optimize

from trajstat.errors import DarkState
from trajstat.model import LindbladModel, effective_hamiltonian
from trajstat.utils import ConfigManager, tolerance_cache

_logger = logging.getLogger(__name__)

# Eigenbases worse conditioned than this fall back to matrix exponentials
_COND_LIMIT = 1e8


class WaitingTime(NamedTuple):
    """Outcome of one detection: when, through which channel, and after."""

    time: float
    channel: int
    state: np.ndarray


class WaitingTimeSampler:
    """Draws waiting times from the exact no-jump survival of a model.

    The survival ``S_ψ(t) = ‖e^{−itH_eff}ψ‖²`` is written through the
    eigen decomposition of ``H_eff`` as a sum of damped oscillations, so
    draws are found by root bracketing on an exact expression.

    Args:
        model: The open quantum system.
    """

    def __init__(self, model: LindbladModel) -> None:
        heff = effective_hamiltonian(model)

        self._model = model
        self._matrix = heff.matrix
        self._values = heff.eigenvalues
        self._vectors = heff.eigenvectors
        self._gram = self._vectors.conj().T @ self._vectors

        tol_eig = ConfigManager().get_tolerance("tol_eig")
        scale = max(1.0, float(np.max(np.abs(self._values))))
        self._dark = np.abs(self._values.imag) <= tol_eig * scale

        self._condition = float(np.linalg.cond(self._vectors))
        self._exact = self._condition <= _COND_LIMIT

        if not self._exact:
            _logger.warning(
                "Ill conditioned eigenbasis, using matrix exponentials",
                extra={"condition": self._condition},
            )

        decay = -self._values.imag[~self._dark]
        self._time_scale = 1.0 / np.min(decay) if decay.size else 1.0

    def _coefficients(self, psi: np.ndarray) -> np.ndarray:
        return np.linalg.solve(self._vectors, psi)

    def evolve(self, psi: np.ndarray, t: float) -> np.ndarray:
        """Unnormalized no-jump state ``e^{−itH_eff}ψ``."""

        if not self._exact:
            return scipy.linalg.expm(-1j * t * self._matrix) @ psi

        phases = np.exp(-1j * self._values * t)
        return self._vectors @ (phases * self._coefficients(psi))

    def survival(self, psi: np.ndarray, t) -> np.ndarray:
        """``S_ψ(t)`` evaluated at one or many times."""

        times = np.atleast_1d(np.asarray(t, dtype=float))

        if not self._exact:
            values = [np.linalg.norm(self.evolve(psi, ti)) ** 2 for ti in times]
            return np.asarray(values).reshape(np.shape(t))

        a = self._coefficients(psi)
        weights = np.conj(a)[:, None] * a[None, :] * self._gram
        rates = 1j * (np.conj(self._values)[:, None] - self._values[None, :])

        terms = weights[None, :, :] * np.exp(rates[None, :, :] * times[:, None, None])
        values = np.real(np.sum(terms, axis=(1, 2)))

        return values.reshape(np.shape(t))

    def survival_limit(self, psi: np.ndarray) -> float:
        """``S_∞``, the probability that no jump ever happens."""

        if not np.any(self._dark):
            return 0.0

        a = self._coefficients(psi)
        dark = self._dark
        weights = np.conj(a[dark])[:, None] * a[dark][None, :]

        value = np.sum(weights * self._gram[np.ix_(dark, dark)])

        return max(0.0, float(np.real(value)))

    def sample(self, psi: np.ndarray, rng: np.random.Generator) -> WaitingTime:
        """Draw the next jump time, its channel and the post-jump state.

        Raises:
            DarkState: If the draw falls on the never-jumping fraction.
        """

        u = 1.0 - rng.random()
        limit = self.survival_limit(psi)

        if u <= limit:
            raise DarkState(
                _("No further jump occurs (survival limit %.3g)") % limit,
                limit,
            )

        def residual(t: float) -> float:
            return float(self.survival(psi, t)) - u

        upper = self._time_scale

        while residual(upper) > 0:
            upper *= 2.0

        time = scipy.optimize.brentq(residual, 0.0, upper, xtol=1e-12)
        phi = self.evolve(psi, time)

        outputs = [jump @ phi for jump in self._model.jumps]
        weights = np.array([np.vdot(out, out).real for out in outputs])

        if not np.sum(weights) > 0:
            raise DarkState(_("Jump landed on a dark state"), limit)

        channel = int(rng.choice(len(outputs), p=weights / np.sum(weights)))
        state = outputs[channel] / np.sqrt(weights[channel])

        return WaitingTime(time, channel, state)


@tolerance_cache("tol_eig")
def waiting_time_sampler(model: LindbladModel) -> WaitingTimeSampler:
    """Shared sampler for a model."""

    return WaitingTimeSampler(model)


def sample_waiting_time(
    model: LindbladModel, psi: np.ndarray, rng: np.random.Generator
) -> WaitingTime:
    """Draw one detection starting from the normalized state ``psi``.

    Raises:
        DarkState: If no further jump ever occurs.
    """

    return waiting_time_sampler(model).sample(psi, rng)
