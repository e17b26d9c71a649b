"""Visible-light inter-satellite link model.

Solar background through Fraunhofer-line filters, LOS channel gain,
receiver noise and link budget, analytic IM/DD BER, and Reed-Solomon
coded 16-QAM performance.
"""
from .channel import ConcentratorSpec, DetectorSpec, LinkGeometry, TransmitterSpec
from .modulation import ModulationScheme
from .noise import AmplifierSpec, LinkScenario

__version__ = "0.1.0"

__all__ = [
    "AmplifierSpec",
    "ConcentratorSpec",
    "DetectorSpec",
    "LinkGeometry",
    "LinkScenario",
    "ModulationScheme",
    "TransmitterSpec",
]
