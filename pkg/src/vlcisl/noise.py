"""Receiver noise, electrical SNR and the dB link budget.

Noise is the sum of a shot term (signal plus filtered solar background)
and a FET-preamplifier thermal term. Dark current and intersymbol
interference are not modelled.
"""
from __future__ import annotations

import csv
import dataclasses
import io
import math
from dataclasses import dataclass, field
from functools import lru_cache

from scipy.constants import e as ELECTRON_CHARGE
from scipy.constants import k as BOLTZMANN_K

from . import channel, radiometry
from .channel import ConcentratorSpec, DetectorSpec, LinkGeometry, TransmitterSpec

FRAUNHOFER_FLOOR = 0.10
REFERENCE_SUPPRESSION = 0.05


@dataclass(frozen=True)
class AmplifierSpec:
    open_loop_gain: float = 10.0
    transconductance_s: float = 30e-3
    channel_noise_factor: float = 1.5
    capacitance_f_per_m2: float = 38e-12 / 1e-4
    temperature_k: float = 300.0
    i2: float = 0.562
    i3: float = 0.0868

    def __post_init__(self):
        for f in dataclasses.fields(self):
            v = getattr(self, f.name)
            if not v > 0:
                raise ValueError(f"{f.name} must be positive, got {v}")


@dataclass(frozen=True)
class NoiseEnvironment:
    """Background irradiance seen through the filter and the receiver bandwidth.

    ``suppression`` is the fraction of the continuum irradiance that
    survives inside a Fraunhofer line (1.0 means no dip).
    """

    filter_irradiance: float
    suppression: float = REFERENCE_SUPPRESSION
    bandwidth_hz: float = 0.5e6
    charge: float = ELECTRON_CHARGE

    def __post_init__(self):
        if self.filter_irradiance < 0:
            raise ValueError(f"filter irradiance must be non-negative, got {self.filter_irradiance}")
        if not 0 <= self.suppression <= 1:
            raise ValueError(f"suppression must lie in [0, 1], got {self.suppression}")
        if not self.bandwidth_hz > 0:
            raise ValueError(f"bandwidth must be positive, got {self.bandwidth_hz}")


def background_power(env: NoiseEnvironment, rx: DetectorSpec, conc: ConcentratorSpec) -> float:
    return env.suppression * env.filter_irradiance * rx.filter_transmission * rx.area_m2 * conc.refractive_index**2


def shot_noise_variance(p_r: float, p_bg: float, responsivity: float, env: NoiseEnvironment,
                        i2: float = AmplifierSpec.i2) -> float:
    if p_r < 0 or p_bg < 0:
        raise ValueError("optical powers must be non-negative")
    return 2 * env.charge * responsivity * (p_r + i2 * p_bg) * env.bandwidth_hz


def thermal_noise_terms(amp: AmplifierSpec, rx: DetectorSpec, bandwidth_hz: float) -> tuple[float, float]:
    """Feedback-resistor (B^2) and FET channel (B^3) contributions, A^2."""
    kt = BOLTZMANN_K * amp.temperature_k
    cap = amp.capacitance_f_per_m2 * rx.area_m2
    first = 8 * math.pi * kt / amp.open_loop_gain * cap * amp.i2 * bandwidth_hz**2
    second = (16 * math.pi**2 * kt * amp.channel_noise_factor / amp.transconductance_s
              * cap**2 * amp.i3 * bandwidth_hz**3)
    return first, second


def thermal_noise_variance(amp: AmplifierSpec, rx: DetectorSpec, bandwidth_hz: float) -> float:
    return sum(thermal_noise_terms(amp, rx, bandwidth_hz))


def electrical_snr(p_r: float, responsivity: float, noise_total: float) -> float:
    if not noise_total > 0:
        raise ValueError(f"noise variance must be positive, got {noise_total}")
    return (responsivity * p_r) ** 2 / noise_total


def snr_per_bit(snr: float, bandwidth_hz: float, bit_rate_bps: float) -> float:
    if not bit_rate_bps > 0:
        raise ValueError(f"bit rate must be positive, got {bit_rate_bps}")
    return snr * bandwidth_hz / bit_rate_bps


def to_db(x: float) -> float:
    return 10 * math.log10(x) if x > 0 else -math.inf


def from_db(x_db: float) -> float:
    return 10 ** (x_db / 10)


@lru_cache(maxsize=64)
def _filter_irradiance(lower_nm, upper_nm, scaling, source):
    return radiometry.band_irradiance(lower_nm, upper_nm, scaling, source)


@dataclass(frozen=True)
class LinkScenario:
    """One transmitter, one receiver, one operating point.

    Defaults reproduce the 0.5 km, 656.28 nm H-alpha reference link.
    """

    transmitter: TransmitterSpec = field(default_factory=TransmitterSpec)
    concentrator: ConcentratorSpec = field(default_factory=ConcentratorSpec)
    detector: DetectorSpec = field(default_factory=DetectorSpec)
    geometry: LinkGeometry = field(default_factory=LinkGeometry)
    amplifier: AmplifierSpec = field(default_factory=AmplifierSpec)
    filter_lower_nm: float = 656.0798
    filter_upper_nm: float = 656.4818
    suppression: float = REFERENCE_SUPPRESSION
    bandwidth_hz: float = 0.5e6
    bit_rate_bps: float = 0.5e6
    source: radiometry.BlackbodySource = radiometry.SUN
    scaling: radiometry.IrradianceScaling = radiometry.FULL_SUN
    margin_db: float = 0.0

    def __post_init__(self):
        if not 0 < self.filter_lower_nm < self.filter_upper_nm:
            raise ValueError(f"filter band must satisfy 0 < lower < upper, got "
                             f"[{self.filter_lower_nm}, {self.filter_upper_nm}] nm")
        if not 0 <= self.suppression <= 1:
            raise ValueError(f"suppression must lie in [0, 1], got {self.suppression}")
        if not self.bandwidth_hz > 0:
            raise ValueError(f"bandwidth must be positive, got {self.bandwidth_hz}")
        if not self.bit_rate_bps > 0:
            raise ValueError(f"bit rate must be positive, got {self.bit_rate_bps}")

    def replace(self, **changes) -> LinkScenario:
        return dataclasses.replace(self, **changes)

    @property
    def filter_irradiance(self) -> float:
        return _filter_irradiance(self.filter_lower_nm, self.filter_upper_nm, self.scaling, self.source)

    @property
    def environment(self) -> NoiseEnvironment:
        return NoiseEnvironment(self.filter_irradiance, self.suppression, self.bandwidth_hz)

    @property
    def channel_gain(self) -> float:
        return channel.channel_dc_gain(self.geometry, self.transmitter, self.detector, self.concentrator)

    @property
    def background_power(self) -> float:
        return background_power(self.environment, self.detector, self.concentrator)

    @property
    def thermal_noise(self) -> float:
        return thermal_noise_variance(self.amplifier, self.detector, self.bandwidth_hz)

    def received_power(self, power_w: float | None = None) -> float:
        p_t = self.transmitter.power_w if power_w is None else power_w
        return channel.received_power(p_t, self.channel_gain)

    def noise_variance(self, power_w: float | None = None) -> float:
        shot = shot_noise_variance(self.received_power(power_w), self.background_power,
                                   self.detector.responsivity, self.environment, self.amplifier.i2)
        return shot + self.thermal_noise

    def snr(self, power_w: float | None = None) -> float:
        """Electrical SNR (linear) at ``power_w``, defaulting to the transmitter power."""
        return electrical_snr(self.received_power(power_w), self.detector.responsivity,
                              self.noise_variance(power_w))

    def snr_db(self, power_w: float | None = None) -> float:
        return to_db(self.snr(power_w))


@dataclass(frozen=True)
class LinkBudgetReport:
    responsivity_db: float
    channel_gain_db: float
    tx_power_db: float
    bandwidth_db: float
    noise_db: float
    bit_rate_db: float
    margin_db: float = 0.0
    optical_path_loss_db: float = math.nan

    TERMS = ("responsivity_db", "channel_gain_db", "tx_power_db", "bandwidth_db",
             "noise_db", "bit_rate_db", "margin_db")

    @property
    def total_db(self) -> float:
        return math.fsum(getattr(self, t) for t in self.TERMS)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["term", "value_db"])
        for t in self.TERMS:
            w.writerow([t.removesuffix("_db"), f"{getattr(self, t):.6f}"])
        w.writerow(["total_snr_per_bit", f"{self.total_db:.6f}"])
        return buf.getvalue()

    def to_text(self) -> str:
        labels = {
            "responsivity_db": "10 log10 gamma^2",
            "channel_gain_db": "10 log10 H(0)^2",
            "tx_power_db": "10 log10 Pt^2",
            "bandwidth_db": "10 log10 B",
            "noise_db": "-10 log10 N",
            "bit_rate_db": "-10 log10 Rb",
            "margin_db": "- link margin",
        }
        lines = ["Link budget (electrical dB)", "-" * 40]
        for t in self.TERMS:
            lines.append(f"{labels[t]:<24}{getattr(self, t):>14.3f} dB")
        lines.append("-" * 40)
        lines.append(f"{'SNR per bit (Eb/No)':<24}{self.total_db:>14.3f} dB")
        lines.append(f"{'optical path loss':<24}{self.optical_path_loss_db:>14.3f} optical dB")
        return "\n".join(lines) + "\n"


def link_budget(scenario: LinkScenario, power_w: float | None = None) -> LinkBudgetReport:
    """Decompose ``10 log10(Eb/No)`` into additive dB terms."""
    p_t = scenario.transmitter.power_w if power_w is None else power_w
    h0 = scenario.channel_gain
    return LinkBudgetReport(
        responsivity_db=20 * math.log10(scenario.detector.responsivity),
        channel_gain_db=20 * math.log10(h0) if h0 > 0 else -math.inf,
        tx_power_db=20 * math.log10(p_t) if p_t > 0 else -math.inf,
        bandwidth_db=10 * math.log10(scenario.bandwidth_hz),
        noise_db=-10 * math.log10(scenario.noise_variance(p_t)),
        bit_rate_db=-10 * math.log10(scenario.bit_rate_bps),
        margin_db=-scenario.margin_db or 0.0,
        optical_path_loss_db=channel.path_loss_db(h0),
    )


def required_rx_power(target_snr: float, responsivity: float, bandwidth_hz: float,
                      background_w: float, thermal_variance: float,
                      i2: float = AmplifierSpec.i2, charge: float = ELECTRON_CHARGE) -> float:
    """Received optical power at which the electrical SNR equals ``target_snr``.

    Positive root of ``g^2 P^2 - s 2qgB P - s (2qg I2 Pbg B + th) = 0``.
    """
    if target_snr < 0:
        raise ValueError(f"target SNR must be non-negative, got {target_snr}")
    if target_snr == 0:
        return 0.0
    a = responsivity**2
    b = target_snr * 2 * charge * responsivity * bandwidth_hz
    c = target_snr * (2 * charge * responsivity * i2 * background_w * bandwidth_hz + thermal_variance)
    root = (b + math.sqrt(b * b + 4 * a * c)) / (2 * a)
    if not root > 0:
        raise ArithmeticError(f"no positive received power reaches SNR {target_snr}")
    return root


def required_tx_power(target_snr: float, scenario: LinkScenario) -> float:
    h0 = scenario.channel_gain
    if h0 == 0:
        return math.inf
    p_r = required_rx_power(target_snr, scenario.detector.responsivity, scenario.bandwidth_hz,
                            scenario.background_power, scenario.thermal_noise, scenario.amplifier.i2)
    return p_r / h0
