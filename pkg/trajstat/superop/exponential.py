# -*- coding: utf-8 -*-

import numpy as np
import scipy.linalg

from .super_operator import SuperOperator, stack, unstack


def propagator(G: SuperOperator, t: float) -> SuperOperator:
    """The map ``e^{tG}`` computed by scaling and squaring."""

    if t < 0:
        raise ValueError(f"Propagation time must be nonnegative, got {t}")

    return SuperOperator(scipy.linalg.expm(t * G.matrix), G.picture, G.dim)


def matrix_exp_apply(G: SuperOperator, t: float, A: np.ndarray) -> np.ndarray:
    """Evaluate ``e^{tG}(A)``; at ``t = 0`` this returns ``A`` unchanged."""

    if t < 0:
        raise ValueError(f"Propagation time must be nonnegative, got {t}")

    if t == 0:
        return np.array(A, dtype=complex)

    vector = scipy.linalg.expm(t * G.matrix) @ stack(A)
    return unstack(vector, G.dim)
