# -*- coding: utf-8 -*-

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence

import numpy as np

from trajstat.counting import concentration_report, count_resolved_propagate
from trajstat.generators import EnsembleKind, TiltPoint, model_x_min
from trajstat.model import LindbladModel, three_level_renewal
from trajstat.thermo import duality_row, eigenvector_angle, legendre_rate, potential
from trajstat.thermo import schrodinger_eigvec_relation_residual
from trajstat.trajectories import classical_equivalence_check
from .renewal import analytic_potential, renewal_product_checks, require_renewal

_logger = logging.getLogger(__name__)

DEFAULT_S_GRID = tuple(np.linspace(-0.5, 0.5, 21))
DEFAULT_X_GRID = tuple(np.round(np.arange(1, 11) / 10, 12))


@dataclass(frozen=True, eq=False)
class RenewalDemo:
    """Every artifact of the renewal walkthrough.

    Attributes:
        model: The three level model the artifacts belong to.
        tables: Row lists keyed by artifact name, written as CSV.
        reports: Nested mappings keyed by artifact name, written as JSON.
    """

    model: LindbladModel
    tables: Dict[str, List[dict]] = field(default_factory=dict)
    reports: Dict[str, dict] = field(default_factory=dict)


def _analytics_rows(model, structure, x_grid) -> list:
    rows = []

    for x in x_grid:
        closed = analytic_potential(structure, x)
        report = potential(model, TiltPoint.x(x))

        rows.append(
            {
                "x": float(x),
                "g_analytic": closed.g,
                "g_numeric": report.potential,
                "error": abs(closed.g - report.potential),
                "eig_angle": eigenvector_angle(closed.F, report.right_eig),
            }
        )

    return rows


def _potential_rows(model, s_grid) -> tuple:
    reports = [potential(model, TiltPoint.s(s)) for s in s_grid]
    rate = legendre_rate(
        s_grid,
        [report.potential for report in reports],
        EnsembleKind.S_ENSEMBLE,
        [-report.intensive.k for report in reports],
    )

    return [report.to_dict() for report in reports], rate.to_dict()


def _counting_rows(model, tau_list) -> list:
    rows = []

    for tau in tau_list:
        state = count_resolved_propagate(model, tau)
        rows.extend({"tau": float(tau), **row} for row in state.to_rows())

    return rows


def renewal_demo(
    omega1: float = 1.0,
    omega2: float = 0.2,
    kappa: float = 1.0,
    s: float = 0.3,
    s_grid: Sequence[float] = DEFAULT_S_GRID,
    x_grid: Sequence[float] = DEFAULT_X_GRID,
    tau_list: Sequence[float] = (3.0, 6.0, 11.0),
    K_range: Sequence[int] = (4, 8, 16, 32),
    n_samples: int = 0,
    seed: int = 0,
) -> RenewalDemo:
    """Run the renewal walkthrough on the driven three level atom.

    Produces the s-ensemble potential with its rate function, the
    closed-form against numerical x-ensemble potential, the duality
    table, counting distributions, the concentration trend, the
    ensemble equivalence exponents and the product form facts.

    Raises:
        DomainError: If the parameters give a non renewal model or an
            ``x_min`` that is not strictly negative.
    """

    model = three_level_renewal(omega1, omega2, kappa)
    structure = require_renewal(model)

    _logger.info(
        "Renewal demo started",
        extra={"omega1": omega1, "omega2": omega2, "kappa": kappa},
    )

    potentials, rate = _potential_rows(model, s_grid)
    x = potential(model, TiltPoint.s(s)).potential
    product = renewal_product_checks(structure, n_samples=n_samples, seed=seed)

    tables = {
        "potentials": potentials,
        "analytic": _analytics_rows(model, structure, x_grid),
        "duality": [duality_row(model, value) for value in s_grid],
        "counting": _counting_rows(model, tau_list),
    }

    reports = {
        "parameters": {
            "omega1": omega1,
            "omega2": omega2,
            "kappa": kappa,
            "x_min": model_x_min(model),
            **structure.to_dict(),
        },
        "rate_function": rate,
        "schrodinger_relation": {
            "s": s,
            "x": x,
            "residual": schrodinger_eigvec_relation_residual(model, s),
        },
        "concentration": concentration_report(model, s, (), K_range).to_dict(),
        "equivalence": classical_equivalence_check(
            model, s, tau_list, n_samples, seed
        ).to_dict(),
        "product": product,
    }

    return RenewalDemo(model, tables, reports)
