# -*- coding: utf-8 -*-

from dataclasses import dataclass
from typing import Tuple

import numpy as np


@dataclass(frozen=True, eq=False)
class CountResolvedState:
    """Unnormalized states conditioned on the number of jumps so far.

    Attributes:
        time: Propagation time ``τ``.
        blocks: Array of shape ``(K_max + 1, d, d)`` with ``ρ_k(τ)``.
        K_max: Largest resolved jump count.
        tail_mass: Probability of more than ``K_max`` jumps.
        c: Spin counting field the jumps were weighted with.
    """

    time: float
    blocks: np.ndarray
    K_max: int
    tail_mass: float
    c: Tuple[float, ...] = ()

    @property
    def dim(self) -> int:
        return self.blocks.shape[1]

    def weights(self) -> np.ndarray:
        """``tr ρ_k(τ)`` per count, the distribution ``P_τ(K)`` when ``c = 0``."""

        return np.real(np.trace(self.blocks, axis1=1, axis2=2))

    def generating(self, s: complex) -> complex:
        """``Σ_K e^{-sK}·tr ρ_K(τ)`` over the resolved counts."""

        counts = np.arange(self.K_max + 1)
        traces = np.trace(self.blocks, axis1=1, axis2=2)

        return complex(np.sum(np.exp(-s * counts) * traces))

    def mean_count(self) -> float:
        weights = self.weights()
        return float(np.dot(np.arange(self.K_max + 1), weights) / np.sum(weights))

    def to_rows(self) -> list:
        return [
            {"K": int(count), "P_tau_K": float(weight)}
            for count, weight in enumerate(self.weights())
        ]
