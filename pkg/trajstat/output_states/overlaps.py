# -*- coding: utf-8 -*-

import math
from typing import Optional

import numpy as np

from trajstat.generators import TiltPoint, build_T, log_partition_K
from trajstat.model import LindbladModel


def canonical_overlap(
    model: LindbladModel, K: int, first: TiltPoint, second: TiltPoint
) -> float:
    """Overlap of two normalized canonical K-jump output states.

    ``tr[ρ·𝕋_{x̄,c̄}^K(I)]/√(Z_K(x,c)·Z_K(x',c'))`` with the midpoint
    tilt ``x̄ = (x+x')/2`` and ``c̄ = (c+c')/2``.

    Fields and spin counting fields are real, so the midpoint transfer
    map is completely positive and the overlap is a real number in
    ``(0, 1]``. It is returned as a ``float``.

    Raises:
        DomainError: If any of the three tilts is not admissible.
    """

    if K == 0:
        return 1.0

    length = max(len(first.c), len(second.c))
    spins = [
        tilt.c_vector if tilt.c else np.zeros(length) for tilt in (first, second)
    ]

    middle = TiltPoint.x(0.5 * (first.field + second.field), 0.5 * sum(spins))

    log_value = log_partition_K(model, middle, K)
    log_value -= 0.5 * log_partition_K(model, first, K)
    log_value -= 0.5 * log_partition_K(model, second, K)

    return math.exp(log_value)


def propagate_state_K(
    model: LindbladModel, K: int, rho: Optional[np.ndarray] = None
) -> np.ndarray:
    """System state ``𝕋_*^K(ρ)`` left after the K-th jump."""

    state = model.density_matrix if rho is None else np.asarray(rho, dtype=complex)
    transfer = build_T(model, TiltPoint.x(0.0)).adjoint()

    for _step in range(K):
        state = transfer.apply(state)

    return state
