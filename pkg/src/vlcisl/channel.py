"""Line-of-sight optical channel between two satellites.

All angles are in degrees at the interface. The emitter is a single
Lambertian source; the receiver is a hemispherical concentrator over a
PIN photodiode behind a narrow-band filter.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from scipy.constants import c as SPEED_OF_LIGHT

DOPPLER_SIGNIFICANCE_NM = 1e-3


@dataclass(frozen=True)
class TransmitterSpec:
    semi_angle_deg: float = 30.0
    peak_wavelength_nm: float = 656.2808
    power_w: float = 2.0

    def __post_init__(self):
        if not 0 < self.semi_angle_deg < 90:
            raise ValueError(f"semi-angle must lie in (0, 90) deg, got {self.semi_angle_deg}")
        if self.power_w < 0:
            raise ValueError(f"optical power must be non-negative, got {self.power_w}")

    @property
    def lambertian_order(self) -> float:
        return lambertian_order(self.semi_angle_deg)


@dataclass(frozen=True)
class ConcentratorSpec:
    refractive_index: float = 1.5
    fov_deg: float = 35.0
    radius_m: float = 0.02
    detector_radius_m: float | None = None

    def __post_init__(self):
        if not self.refractive_index > 1:
            raise ValueError(f"refractive index must exceed 1, got {self.refractive_index}")
        if not 0 < self.fov_deg <= 90:
            raise ValueError(f"FOV semi-angle must lie in (0, 90] deg, got {self.fov_deg}")
        if not self.radius_m > 0:
            raise ValueError(f"concentrator radius must be positive, got {self.radius_m}")
        if self.detector_radius_m is not None and not self.detector_radius_m > 0:
            raise ValueError(f"detector radius must be positive, got {self.detector_radius_m}")

    def check_hemisphere_size(self, detector_area_m2: float) -> bool:
        """Warn and return False unless the hemisphere radius exceeds ``n^2 * r``.

        The detector radius defaults to that of a disc of the given area.
        """
        r = self.detector_radius_m
        if r is None:
            r = math.sqrt(detector_area_m2 / math.pi)
        needed = self.refractive_index**2 * r
        if self.radius_m > needed:
            return True
        warnings.warn(
            f"concentrator radius {self.radius_m:.4g} m does not exceed n^2 r = {needed:.4g} m; "
            "the gain n^2/sin^2(fov) may be optimistic",
            stacklevel=2,
        )
        return False


@dataclass(frozen=True)
class DetectorSpec:
    area_m2: float = 7.84e-4
    responsivity: float = 0.51
    filter_transmission: float = 1.0

    def __post_init__(self):
        if not self.area_m2 > 0:
            raise ValueError(f"detector area must be positive, got {self.area_m2}")
        if not 0 < self.responsivity <= 1.2:
            raise ValueError(f"responsivity must lie in (0, 1.2] A/W, got {self.responsivity}")
        if not 0 <= self.filter_transmission <= 1:
            raise ValueError(f"filter transmission must lie in [0, 1], got {self.filter_transmission}")


@dataclass(frozen=True)
class LinkGeometry:
    """Emitter-receiver separation and pointing.

    ``irradiance_deg`` is measured off the emitter axis and enters the
    Lambertian pattern; ``incidence_deg`` is measured off the receiver axis
    and enters the concentrator gain and the projected detector area.
    """

    distance_m: float = 500.0
    irradiance_deg: float = 15.0
    incidence_deg: float = 30.0

    def __post_init__(self):
        if not self.distance_m > 0:
            raise ValueError(f"distance must be positive, got {self.distance_m}")
        for name in ("irradiance_deg", "incidence_deg"):
            v = getattr(self, name)
            if not 0 <= v < 90:
                raise ValueError(f"{name} must lie in [0, 90) deg, got {v}")


def lambertian_order(semi_angle_deg: float) -> float:
    if not 0 < semi_angle_deg < 90:
        raise ValueError(f"semi-angle must lie in (0, 90) deg, got {semi_angle_deg}")
    return -math.log(2) / math.log(math.cos(math.radians(semi_angle_deg)))


def concentrator_gain(psi_deg: float, conc: ConcentratorSpec) -> float:
    if psi_deg < 0:
        raise ValueError(f"incidence angle must be non-negative, got {psi_deg}")
    if psi_deg > conc.fov_deg:
        return 0.0
    return conc.refractive_index**2 / math.sin(math.radians(conc.fov_deg)) ** 2


def channel_dc_gain(
    geom: LinkGeometry,
    tx: TransmitterSpec,
    rx: DetectorSpec,
    conc: ConcentratorSpec,
) -> float:
    """LOS channel DC gain H(0); zero outside the concentrator field of view."""
    g = concentrator_gain(geom.incidence_deg, conc)
    if g == 0.0:
        return 0.0
    m = tx.lambertian_order
    return (
        (m + 1) / (2 * math.pi * geom.distance_m**2)
        * rx.area_m2
        * math.cos(math.radians(geom.irradiance_deg)) ** m
        * rx.filter_transmission
        * g
        * math.cos(math.radians(geom.incidence_deg))
    )


def path_loss_db(h0: float) -> float:
    """Optical path loss ``-10 log10 H(0)``; ``inf`` for a blocked link."""
    if h0 < 0:
        raise ValueError(f"channel gain must be non-negative, got {h0}")
    if h0 == 0:
        return math.inf
    return -10 * math.log10(h0)


def received_power(p_t: float, h0: float) -> float:
    if p_t < 0:
        raise ValueError(f"transmit power must be non-negative, got {p_t}")
    return h0 * p_t


def effective_area(psi_deg: float, rx: DetectorSpec, fov_deg: float = 90.0) -> float:
    if abs(psi_deg) >= fov_deg:
        raise ValueError(f"|psi| = {abs(psi_deg)} deg is outside the {fov_deg} deg field of view")
    return rx.area_m2 * math.cos(math.radians(psi_deg))


@dataclass(frozen=True)
class DopplerShift:
    shift_nm: float
    significant: bool


def doppler_shift(lambda_s_nm: float, range_rate_m_s: float) -> DopplerShift:
    """Wavelength shift for a given range rate; below 0.001 nm it is flagged insignificant."""
    if not lambda_s_nm > 0:
        raise ValueError(f"wavelength must be positive, got {lambda_s_nm}")
    shift = lambda_s_nm / SPEED_OF_LIGHT * abs(range_rate_m_s)
    return DopplerShift(shift, shift >= DOPPLER_SIGNIFICANCE_NM)
