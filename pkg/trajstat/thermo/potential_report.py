# -*- coding: utf-8 -*-

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from trajstat.generators import EnsembleKind, TiltPoint


@dataclass(frozen=True)
class IntensiveQuantities:
    """First derivatives of a potential, one per conjugate field.

    Only the pair that belongs to the ensemble is filled in: ``t`` and
    ``m`` for the x-ensemble, ``k`` and ``m_tilde`` for the s-ensemble.
    """

    t: Optional[float] = None
    m: Optional[Tuple[float, ...]] = None
    k: Optional[float] = None
    m_tilde: Optional[Tuple[float, ...]] = None

    @property
    def rate(self) -> float:
        """The intensive quantity conjugate to the main field."""

        return self.t if self.t is not None else self.k

    @property
    def spin(self) -> Tuple[float, ...]:
        """The intensive quantities conjugate to ``c``."""

        return self.m if self.m is not None else self.m_tilde

    def to_dict(self) -> dict:
        return {
            key: (list(value) if isinstance(value, tuple) else value)
            for key, value in vars(self).items()
            if value is not None
        }


@dataclass(frozen=True, eq=False)
class PotentialReport:
    """Thermodynamic potential at one tilt with its eigenvectors.

    Attributes:
        tilt: Where the potential was evaluated.
        potential: ``g(x,c)`` or ``θ(s,c)``.
        right_eig: Dominant observable ``F_{x,c}`` or ``E_{s,c}``.
        left_eig_heis: Left Heisenberg eigenvector ``σ``, unit trace.
        left_eig_schr: Dominant eigenvector of the Schrödinger map,
            unit trace.
        gap: Spectral gap of the dominant eigenvalue.
        intensive: Derivatives of the potential.
        eigenvalue: Raw dominant eigenvalue, ``e^g`` or ``θ``.
    """

    tilt: TiltPoint
    potential: float
    right_eig: np.ndarray
    left_eig_heis: np.ndarray
    left_eig_schr: np.ndarray
    gap: float
    intensive: IntensiveQuantities = field(default_factory=IntensiveQuantities)
    eigenvalue: complex = 0.0

    @property
    def kind(self) -> EnsembleKind:
        return self.tilt.kind

    def to_dict(self) -> dict:
        """Scalar columns of a potentials table."""

        return {
            **self.tilt.to_dict(),
            "log_partition_rate": self.potential,
            "gap": self.gap,
            **self.intensive.to_dict(),
        }
