# -*- coding: utf-8 -*-

import itertools
from dataclasses import dataclass
from locale import gettext as _
from typing import Optional

import numpy as np

from trajstat.errors import QuadratureOverflow
from trajstat.utils import ConfigManager, tolerance_cache


@dataclass(frozen=True, eq=False)
class LayerGrid:
    """Quadrature over records with exactly ``N`` jumps in ``[0, τ₀]``.

    Jump times live on the ordered simplex ``0 < t_1 < … < t_N < τ₀``,
    reached from the unit cube by ``t_k = τ₀·Π_{j≥k} u_j`` with Gauss
    Legendre nodes along every ``u_j``. Every time tuple is paired with
    every channel tuple.

    Attributes:
        N: Number of jumps.
        tau0: Length of the window.
        times: Array ``(points, N)`` of ordered jump times.
        channels: Array ``(points, N)`` of zero based channels.
        weights: Quadrature weights including the simplex Jacobian.
    """

    N: int
    tau0: float
    times: np.ndarray
    channels: np.ndarray
    weights: np.ndarray

    @property
    def size(self) -> int:
        return self.weights.size


def _simplex_nodes(N: int, tau0: float, nodes: int):
    points, weights = np.polynomial.legendre.leggauss(nodes)
    points = 0.5 * (points + 1.0)
    weights = 0.5 * weights

    grid = np.array(list(itertools.product(points, repeat=N)))
    mass = np.prod(np.array(list(itertools.product(weights, repeat=N))), axis=1)

    times = tau0 * np.cumprod(grid[:, ::-1], axis=1)[:, ::-1]
    powers = np.arange(N)
    jacobian = tau0 ** N * np.prod(grid ** powers, axis=1)

    return times, mass * jacobian


@tolerance_cache("quadrature_nodes", "cap_nodes", maxsize=64)
def layer_grid(
    N: int, tau0: float, n_jumps: int, nodes: Optional[int] = None
) -> LayerGrid:
    """Quadrature grid of layer ``N`` for a model with ``n_jumps`` channels.

    Raises:
        QuadratureOverflow: If ``nodes^N`` exceeds ``cap_nodes``.
    """

    config = ConfigManager()

    if nodes is None:
        nodes = int(config.get_tolerance("quadrature_nodes"))

    cap = int(config.get_tolerance("cap_nodes"))

    if N < 0 or tau0 < 0:
        raise ValueError(_("Layer and window must be nonnegative"))

    if nodes ** N > cap:
        raise QuadratureOverflow(
            _("Layer %d needs %d nodes, above the cap of %d")
            % (N, nodes ** N, cap)
        )

    if N == 0:
        empty = np.zeros((1, 0))
        return LayerGrid(0, tau0, empty, empty.astype(int), np.ones(1))

    times, weights = _simplex_nodes(N, tau0, nodes)
    channel_tuples = np.array(list(itertools.product(range(n_jumps), repeat=N)))

    n_times, n_channels = len(times), len(channel_tuples)

    return LayerGrid(
        N=N,
        tau0=tau0,
        times=np.repeat(times, n_channels, axis=0),
        channels=np.tile(channel_tuples, (n_times, 1)),
        weights=np.repeat(weights, n_channels),
    )
