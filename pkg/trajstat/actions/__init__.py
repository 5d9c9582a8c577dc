# -*- coding: utf-8 -*-

from .action_provider import ActionProvider
from .action_registry import ActionRegistry
from .action_result import ActionResult, Artifact, ArtifactKind
from .counting_provider import CountingProvider
from .model_provider import ModelProvider
from .output_provider import OutputProvider
from .renewal_provider import RenewalProvider
from .report_provider import ReportProvider
from .sampling_provider import SamplingProvider
from .thermo_provider import ThermoProvider

__all__ = [
    "ActionProvider",
    "ActionRegistry",
    "ActionResult",
    "Artifact",
    "ArtifactKind",
    "CountingProvider",
    "ModelProvider",
    "OutputProvider",
    "RenewalProvider",
    "ReportProvider",
    "SamplingProvider",
    "ThermoProvider",
]
