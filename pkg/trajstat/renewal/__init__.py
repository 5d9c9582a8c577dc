# -*- coding: utf-8 -*-

from .renewal_structure import NotRenewal, RenewalStructure
from .renewal import AnalyticPotential, analytic_potential, detect_renewal
from .renewal import renewal_product_checks, require_renewal
from .renewal_demo import RenewalDemo, renewal_demo

__all__ = [
    "AnalyticPotential",
    "NotRenewal",
    "RenewalDemo",
    "RenewalStructure",
    "analytic_potential",
    "detect_renewal",
    "renewal_demo",
    "renewal_product_checks",
    "require_renewal",
]
