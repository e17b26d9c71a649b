"""Scenario configuration: a sectioned INI file plus ``--set key=value`` overrides.

Every key has a default taken from the reference 0.5 km H-alpha link
(LED semi-angle 30 deg, 35 deg concentrator FOV, 7.84 cm^2 Si PIN,
0.5 MHz bandwidth). Unknown keys are rejected; values are validated per
key so errors can name the offending setting.
"""
from __future__ import annotations

import configparser
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Mapping

from . import radiometry
from .channel import ConcentratorSpec, DetectorSpec, LinkGeometry, TransmitterSpec
from .modulation import REFERENCE_SCHEMES, ModulationScheme
from .noise import AmplifierSpec, LinkScenario


class ConfigError(ValueError):
    def __init__(self, key: str, message: str):
        super().__init__(f"{key}: {message}")
        self.key = key


def _positive(v):
    return v > 0


def _nonneg(v):
    return v >= 0


def _fraction(v):
    return 0 <= v <= 1


@dataclass(frozen=True)
class Param:
    key: str
    default: object
    check: Callable[[object], bool] | None
    requirement: str
    doc: str
    kind: type = float


PARAMS: tuple[Param, ...] = (
    Param("transmitter.semi_angle_deg", 30.0, lambda v: 0 < v < 90, "in (0, 90)", "LED semi-angle at half power"),
    Param("transmitter.peak_wavelength_nm", 656.2808, _positive, "> 0", "LED peak wavelength (H-alpha line)"),
    Param("transmitter.power_w", 2.0, _nonneg, ">= 0", "transmitted optical power"),
    Param("concentrator.fov_deg", 35.0, lambda v: 0 < v <= 90, "in (0, 90]", "concentrator FOV semi-angle"),
    Param("concentrator.refractive_index", 1.5, lambda v: v > 1, "> 1", "hemispherical lens refractive index"),
    Param("concentrator.radius_m", 0.02, _positive, "> 0", "hemisphere radius"),
    Param("filter.transmission", 1.0, _fraction, "in [0, 1]", "optical filter transmission coefficient"),
    Param("filter.lower_nm", 656.0798, _positive, "> 0", "filter lower band edge"),
    Param("filter.upper_nm", 656.4818, _positive, "> 0", "filter upper band edge"),
    Param("detector.area_m2", 7.84e-4, _positive, "> 0", "PIN photodiode active area"),
    Param("detector.responsivity", 0.51, lambda v: 0 < v <= 1.2, "in (0, 1.2]", "responsivity, A/W"),
    Param("amplifier.open_loop_gain", 10.0, _positive, "> 0", "open-loop voltage gain G"),
    Param("amplifier.transconductance_s", 30e-3, _positive, "> 0", "FET transconductance g_m"),
    Param("amplifier.channel_noise_factor", 1.5, _positive, "> 0", "FET channel noise factor (0.82 or 1.5)"),
    Param("amplifier.capacitance_f_per_m2", 38e-12 / 1e-4, _positive, "> 0", "detector capacitance per area (38 pF/cm^2)"),
    Param("amplifier.temperature_k", 300.0, _positive, "> 0", "absolute temperature T_A"),
    Param("amplifier.i2", 0.562, _positive, "> 0", "noise bandwidth factor, white noise"),
    Param("amplifier.i3", 0.0868, _positive, "> 0", "noise bandwidth factor, f^2 noise"),
    Param("link.distance_m", 500.0, _positive, "> 0", "link distance"),
    Param("link.irradiance_angle_deg", 15.0, lambda v: 0 <= v < 90, "in [0, 90)", "angle off the emitter axis"),
    Param("link.incidence_angle_deg", 30.0, lambda v: 0 <= v < 90, "in [0, 90)", "angle off the receiver axis"),
    Param("link.bandwidth_hz", 0.5e6, _positive, "> 0", "electrical (noise) bandwidth"),
    Param("link.bit_rate_bps", 0.5e6, _positive, "> 0", "bit rate"),
    Param("link.suppression", 0.05, _fraction, "in [0, 1]", "background fraction left inside the Fraunhofer line"),
    Param("link.margin_db", 0.0, _nonneg, ">= 0", "link margin subtracted in the budget"),
    Param("solar.temperature_k", 5780.0, _positive, "> 0", "blackbody temperature of the Sun"),
    Param("solar.day_factor", 1.0, _positive, "> 0", "day-of-year coefficient"),
    Param("solar.time_factor", 1.0, lambda v: 0 < v <= 1, "in (0, 1]", "time-of-day coefficient"),
    Param("modulation.schemes", ",".join(REFERENCE_SCHEMES), None, "", "comma-separated scheme list", str),
    Param("modulation.target_ber", 1e-6, lambda v: 0 < v < 0.5, "in (0, 0.5)", "target BER"),
    Param("modulation.ofdm_subcarriers", 64, lambda v: v >= 8 and v & (v - 1) == 0, "power of two >= 8",
          "OFDM size N", int),
    Param("modulation.ofdm_guard", 16, _nonneg, ">= 0", "OFDM guard length N_g", int),
)
BY_KEY = {p.key: p for p in PARAMS}


@dataclass(frozen=True)
class ScenarioConfig:
    values: Mapping[str, object]

    def __getitem__(self, key: str):
        return self.values[key]

    @property
    def scenario(self) -> LinkScenario:
        v = self.values
        return LinkScenario(
            transmitter=TransmitterSpec(v["transmitter.semi_angle_deg"], v["transmitter.peak_wavelength_nm"],
                                        v["transmitter.power_w"]),
            concentrator=ConcentratorSpec(v["concentrator.refractive_index"], v["concentrator.fov_deg"],
                                          v["concentrator.radius_m"]),
            detector=DetectorSpec(v["detector.area_m2"], v["detector.responsivity"], v["filter.transmission"]),
            geometry=LinkGeometry(v["link.distance_m"], v["link.irradiance_angle_deg"],
                                  v["link.incidence_angle_deg"]),
            amplifier=AmplifierSpec(v["amplifier.open_loop_gain"], v["amplifier.transconductance_s"],
                                    v["amplifier.channel_noise_factor"], v["amplifier.capacitance_f_per_m2"],
                                    v["amplifier.temperature_k"], v["amplifier.i2"], v["amplifier.i3"]),
            filter_lower_nm=v["filter.lower_nm"],
            filter_upper_nm=v["filter.upper_nm"],
            suppression=v["link.suppression"],
            bandwidth_hz=v["link.bandwidth_hz"],
            bit_rate_bps=v["link.bit_rate_bps"],
            source=radiometry.BlackbodySource(v["solar.temperature_k"]),
            scaling=radiometry.IrradianceScaling(v["solar.day_factor"], v["solar.time_factor"]),
            margin_db=v["link.margin_db"],
        )

    @property
    def schemes(self) -> list[ModulationScheme]:
        n, g = self.values["modulation.ofdm_subcarriers"], self.values["modulation.ofdm_guard"]
        labels = [s for s in str(self.values["modulation.schemes"]).split(",") if s.strip()]
        return [ModulationScheme.parse(s, n, g) for s in labels]

    def with_overrides(self, overrides: Mapping[str, str]) -> ScenarioConfig:
        return build_config({**{k: _format(v) for k, v in self.values.items()}, **overrides})

    def dump(self) -> str:
        cp = configparser.ConfigParser(interpolation=None)
        for p in PARAMS:
            section, name = p.key.split(".", 1)
            if not cp.has_section(section):
                cp.add_section(section)
            cp.set(section, name, _format(self.values[p.key]))
        buf = io.StringIO()
        cp.write(buf)
        return buf.getvalue()


def _format(v) -> str:
    return repr(v) if isinstance(v, float) else str(v)


def _convert(p: Param, raw: str):
    text = raw.strip()
    try:
        if p.kind is int:
            value = int(text)
        elif p.kind is float:
            value = float(text)
        else:
            value = text
    except ValueError:
        raise ConfigError(p.key, f"cannot parse {raw!r} as {p.kind.__name__}") from None
    if p.check is not None and not p.check(value):
        raise ConfigError(p.key, f"value {value!r} violates requirement {p.requirement}")
    return value


def build_config(raw: Mapping[str, str]) -> ScenarioConfig:
    """Validate flat ``section.key -> text`` pairs and fill in defaults."""
    values = {p.key: p.default for p in PARAMS}
    for key, text in raw.items():
        if key not in BY_KEY:
            raise ConfigError(key, "unknown configuration key")
        values[key] = _convert(BY_KEY[key], str(text))
    if not values["filter.lower_nm"] < values["filter.upper_nm"]:
        raise ConfigError("filter.upper_nm", "upper band edge must exceed the lower edge")
    if values["modulation.ofdm_guard"] >= values["modulation.ofdm_subcarriers"]:
        raise ConfigError("modulation.ofdm_guard", "guard length must be below the OFDM size")
    cfg = ScenarioConfig(values)
    try:
        cfg.schemes
    except ValueError as exc:
        raise ConfigError("modulation.schemes", str(exc)) from None
    return cfg


def read_config_file(path: str | Path) -> dict[str, str]:
    cp = configparser.ConfigParser(interpolation=None)
    cp.optionxform = str
    try:
        with open(path) as fh:
            cp.read_file(fh)
    except configparser.Error as exc:
        raise ConfigError(str(path), f"unreadable config: {exc}") from None
    return {f"{s}.{k}": v for s in cp.sections() for k, v in cp.items(s)}


def parse_overrides(items: Iterable[str]) -> dict[str, str]:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep:
            raise ConfigError(item, "override must look like key=value")
        out[key.strip()] = value.strip()
    return out


def parse_config(path: str | Path | None = None, overrides: Iterable[str] = ()) -> ScenarioConfig:
    raw = read_config_file(path) if path else {}
    raw.update(parse_overrides(overrides))
    return build_config(raw)
