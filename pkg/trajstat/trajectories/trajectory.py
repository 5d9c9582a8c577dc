# -*- coding: utf-8 -*-

from dataclasses import dataclass, field
from enum import Enum
from locale import gettext as _
from typing import Optional, Tuple

import numpy as np


class Scheme(str, Enum):
    """How a jump record is terminated."""

    FIXED_COUNT = "fixed_count"
    FIXED_TIME = "fixed_time"


@dataclass(frozen=True)
class Trajectory:
    """An ordered record of detected jumps.

    Channels are zero based. Under the fixed count scheme the record
    stops at its last jump; under the fixed time scheme it runs until
    ``tau`` and the final jump-free stretch is implicit.

    Attributes:
        times: Strictly increasing jump times.
        channels: Channel of each jump.
        scheme: Termination scheme.
        tau: Final time of a fixed time record.
        spin: Total spin ``M[X]`` collected along the record.
    """

    times: Tuple[float, ...]
    channels: Tuple[int, ...]
    scheme: Scheme
    tau: Optional[float] = None
    spin: Tuple[float, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        object.__setattr__(self, "times", tuple(float(t) for t in self.times))
        object.__setattr__(self, "channels", tuple(int(i) for i in self.channels))

        if len(self.times) != len(self.channels):
            raise ValueError(_("Each jump needs a time and a channel"))

        if np.any(np.diff(self.times) <= 0) or any(t < 0 for t in self.times):
            raise ValueError(_("Jump times must be positive and increasing"))

        if self.scheme is Scheme.FIXED_TIME:
            if self.tau is None or (self.times and self.times[-1] > self.tau):
                raise ValueError(_("Jumps must not exceed the final time"))

    @property
    def K(self) -> int:
        return len(self.times)

    @property
    def T(self) -> float:
        """Time of the last jump, zero for an empty record."""

        return self.times[-1] if self.times else 0.0

    @property
    def duration(self) -> float:
        """Length of the observation window."""

        return self.tau if self.scheme is Scheme.FIXED_TIME else self.T

    @property
    def waiting_times(self) -> np.ndarray:
        return np.diff(np.concatenate(([0.0], self.times)))

    def to_dict(self) -> dict:
        return {
            "jumps": [[t, i + 1] for t, i in zip(self.times, self.channels)],
            "T": self.T,
            "K": self.K,
            "M": list(self.spin),
        }


@dataclass(frozen=True)
class Estimate:
    """Monte Carlo estimate with its uncertainty.

    Attributes:
        mean: Sample or self-normalized weighted mean.
        standard_error: Standard error of ``mean``.
        ess: Effective sample size of the weights.
        n: Number of samples.
    """

    mean: float
    standard_error: float
    ess: float
    n: int

    def within(self, value: float, sigmas: float = 3.0) -> bool:
        return abs(self.mean - value) <= sigmas * self.standard_error

    def to_dict(self) -> dict:
        return vars(self).copy()


@dataclass(frozen=True, eq=False)
class SampleBatch:
    """Trajectories drawn under one scheme from one seed.

    Attributes:
        trajectories: The sampled records, ordered by index.
        scheme: Termination scheme.
        parameter: ``K`` for fixed count, ``τ`` for fixed time.
        seed: Root seed of the per-trajectory streams.
        model_hash: Digest of the sampled model.
        rejected: Realizations discarded because they went dark.
    """

    trajectories: Tuple[Trajectory, ...]
    scheme: Scheme
    parameter: float
    seed: int
    model_hash: str
    rejected: int = 0

    def __len__(self) -> int:
        return len(self.trajectories)

    def counts(self) -> np.ndarray:
        return np.array([x.K for x in self.trajectories], dtype=int)

    def final_times(self) -> np.ndarray:
        return np.array([x.T for x in self.trajectories], dtype=float)

    def spins(self) -> np.ndarray:
        return np.array([x.spin for x in self.trajectories], dtype=float)

    def header(self) -> dict:
        return {
            "scheme": self.scheme.value,
            "parameter": self.parameter,
            "seed": self.seed,
            "model_hash": self.model_hash,
            "n_samples": len(self.trajectories),
            "rejected": self.rejected,
        }
