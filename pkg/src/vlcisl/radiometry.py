"""Solar background radiometry.

The Sun is treated as a 5780 K blackbody. Band irradiance at 1 AU is the
Planck exitance integrated over the filter passband and scaled by the
squared ratio of solar radius to orbital distance (``GEOMETRIC_SCALE``).

Wavelengths are nm at every public interface and metres internally.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy import constants, integrate

PLANCK_H = constants.h
SPEED_OF_LIGHT = constants.c
BOLTZMANN_K = constants.k
STEFAN_BOLTZMANN = constants.sigma

GEOMETRIC_SCALE = 2.15039e-5
QUAD_RTOL = 1e-9
QUAD_SUBDIVISIONS = 200


@dataclass(frozen=True)
class BlackbodySource:
    temperature_k: float = 5780.0

    def __post_init__(self):
        if not self.temperature_k > 0:
            raise ValueError(f"temperature must be positive, got {self.temperature_k}")


@dataclass(frozen=True)
class IrradianceScaling:
    """Day-of-year (``day_factor``) and time-of-day (``time_factor``) multipliers.

    ``time_factor`` is capped at 1.0, its maximum.
    """

    day_factor: float = 1.0
    time_factor: float = 1.0
    geometric_scale: float = GEOMETRIC_SCALE

    def __post_init__(self):
        if not self.day_factor > 0:
            raise ValueError(f"day_factor must be positive, got {self.day_factor}")
        if not 0 < self.time_factor <= 1.0:
            raise ValueError(f"time_factor must lie in (0, 1], got {self.time_factor}")

    @property
    def factor(self) -> float:
        return self.geometric_scale * self.day_factor * self.time_factor


SUN = BlackbodySource()
FULL_SUN = IrradianceScaling()


def planck_spectral_irradiance(wavelength_m, source: BlackbodySource = SUN):
    """Blackbody spectral exitance, W/m^2 per metre of wavelength.

    Accepts scalars or arrays of wavelengths in metres.
    """
    lam = np.asarray(wavelength_m, dtype=float)
    if np.any(lam <= 0):
        raise ValueError("wavelength must be positive")
    x = PLANCK_H * SPEED_OF_LIGHT / (lam * BOLTZMANN_K * source.temperature_k)
    with np.errstate(over="ignore"):
        w = 2 * math.pi * PLANCK_H * SPEED_OF_LIGHT**2 / lam**5 / np.expm1(x)
    return float(w) if w.ndim == 0 else w


def _planck_integral(a_m: float, b_m: float, temperature_k: float) -> float:
    # Integrate in log-wavelength: bands here span up to 1000:1.
    c1 = 2 * math.pi * PLANCK_H * SPEED_OF_LIGHT**2
    c2 = PLANCK_H * SPEED_OF_LIGHT / (BOLTZMANN_K * temperature_k)

    def integrand(u):
        lam = math.exp(u)
        x = c2 / lam
        if x > 700:
            return 0.0
        return c1 / lam**4 / math.expm1(x)

    value, _ = integrate.quad(
        integrand, math.log(a_m), math.log(b_m),
        epsabs=0.0, epsrel=QUAD_RTOL, limit=QUAD_SUBDIVISIONS,
    )
    return value


def band_irradiance(
    lambda_a_nm: float,
    lambda_b_nm: float,
    scaling: IrradianceScaling = FULL_SUN,
    source: BlackbodySource = SUN,
) -> float:
    """Solar irradiance (W/m^2) falling inside the band ``[lambda_a_nm, lambda_b_nm]``."""
    if not lambda_a_nm > 0:
        raise ValueError(f"lower wavelength must be positive, got {lambda_a_nm}")
    if lambda_b_nm < lambda_a_nm:
        raise ValueError(f"inverted band: [{lambda_a_nm}, {lambda_b_nm}] nm")
    if lambda_b_nm == lambda_a_nm:
        return 0.0
    return scaling.factor * _planck_integral(lambda_a_nm * 1e-9, lambda_b_nm * 1e-9, source.temperature_k)


def stefan_boltzmann_irradiance(
    scaling: IrradianceScaling = FULL_SUN, source: BlackbodySource = SUN
) -> float:
    """Closed-form all-wavelength irradiance, ``scale * sigma * T^4``."""
    return scaling.factor * STEFAN_BOLTZMANN * source.temperature_k**4


class SolarBand(NamedTuple):
    number: int
    lower_nm: float
    upper_nm: float
    observed: str
    blackbody_ref: float
    model_ref: float


# Reference solar flux comparison at 1 AU (W/m^2): observed Wehrli 1985
# spectrum, NASA blackbody Sun, and the published band-integrated model.
SOLAR_BANDS: tuple[SolarBand, ...] = (
    SolarBand(1, 240, 400, "118", 158, 157.18),
    SolarBand(2, 400, 800, "643", 630, 627.98),
    SolarBand(3, 800, 1310, "348", 349, 347.68),
    SolarBand(4, 1310, 1860, "148", 123, 122.92),
    SolarBand(5, 1860, 2480, "52", 51, 50.61),
    SolarBand(6, 2480, 3240, "29", 24, 24.13),
    SolarBand(7, 3240, 4500, "17", 14, 13.95),
    SolarBand(8, 4500, 8000, "neglected", 7.7, 7.70),
    SolarBand(9, 8000, 12000, "dust band", 1.3, 1.30),
    SolarBand(10, 12000, 24000, "15 um CO2 band", 0.9, 0.50),
    SolarBand(11, 24000, 60000, "neglected", 0, 0.07),
    SolarBand(12, 60000, 1000000, "neglected", 0, 0.00),
)
REFERENCE_MODEL_TOTAL = 1354.0


@dataclass(frozen=True)
class SolarValidation:
    bands: tuple[SolarBand, ...]
    computed: tuple[float, ...]

    @property
    def total(self) -> float:
        return math.fsum(self.computed)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["band", "lower_nm", "upper_nm", "observed_w_m2", "blackbody_ref_w_m2",
                    "model_ref_w_m2", "computed_w_m2", "delta_vs_model_w_m2", "delta_vs_model_pct"])
        for b, v in zip(self.bands, self.computed):
            delta = v - b.model_ref
            pct = 100 * delta / b.model_ref if b.model_ref else float("nan")
            w.writerow([b.number, f"{b.lower_nm:g}", f"{b.upper_nm:g}", b.observed,
                        f"{b.blackbody_ref:g}", f"{b.model_ref:.2f}", f"{v:.4f}",
                        f"{delta:.4f}", f"{pct:.3f}"])
        total_ref = math.fsum(b.model_ref for b in self.bands)
        w.writerow(["total", "", "", "", "", f"{total_ref:.2f}", f"{self.total:.4f}",
                    f"{self.total - total_ref:.4f}", f"{100 * (self.total - total_ref) / total_ref:.3f}"])
        return buf.getvalue()


def validate_solar_model(
    scaling: IrradianceScaling = FULL_SUN, source: BlackbodySource = SUN
) -> SolarValidation:
    computed = tuple(band_irradiance(b.lower_nm, b.upper_nm, scaling, source) for b in SOLAR_BANDS)
    return SolarValidation(SOLAR_BANDS, computed)


@dataclass(frozen=True)
class FraunhoferLine:
    center_nm: float
    width_nm: float
    bandwidth_ghz: float
    element: str
    color: str

    @property
    def lower_nm(self) -> float:
        return self.center_nm - self.width_nm / 2

    @property
    def upper_nm(self) -> float:
        return self.center_nm + self.width_nm / 2

    def implied_bandwidth_ghz(self) -> float:
        """Frequency width implied by the spectral width, ``c * dl / l^2``."""
        return SPEED_OF_LIGHT * self.width_nm * 1e-9 / (self.center_nm * 1e-9) ** 2 / 1e9


_LINES = (
    (381.5851, 0.1272, 262.1, "Fe", "Violet"),
    (382.0436, 0.1712, 351.9, "Fe", "Violet"),
    (382.5891, 0.1519, 311.3, "Fe", "Violet"),
    (383.2310, 0.1685, 344.2, "Mg", "Violet"),
    (383.8302, 0.1920, 391.0, "Mg", "Violet"),
    (385.9922, 0.1554, 312.9, "Fe", "Violet"),
    (393.3682, 2.0253, 3926.6, "Ca", "Blue"),
    (396.8492, 1.5467, 2946.3, "Ca", "Blue"),
    (410.1748, 0.3133, 558.7, "H", "Blue"),
    (434.0475, 0.2855, 454.6, "H", "Blue"),
    (486.1342, 0.3680, 467.2, "H", "Blue"),
    (656.2808, 0.4020, 280.0, "H", "Red"),
)


def line_catalog() -> list[FraunhoferLine]:
    """The intense solar Fraunhofer lines wider than 250 GHz, shortest wavelength first."""
    return [FraunhoferLine(*row) for row in _LINES]


def find_line(center_nm: float, tol_nm: float = 1e-3) -> FraunhoferLine:
    for line in line_catalog():
        if abs(line.center_nm - center_nm) <= tol_nm:
            return line
    raise KeyError(f"no cataloged Fraunhofer line at {center_nm} nm")


def catalog_csv() -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["center_nm", "width_nm", "bandwidth_ghz", "element", "color"])
    for line in line_catalog():
        w.writerow([f"{line.center_nm:.4f}", f"{line.width_nm:.4f}", f"{line.bandwidth_ghz:.1f}",
                    line.element, line.color])
    return buf.getvalue()
