"""Analytic BER and bandwidth requirements for IM/DD modulation schemes.

BER is expressed as a function of electrical SNR for OOK-NRZ, L-PPM,
DPIM and the two unipolar optical OFDM variants (square M-QAM on the
subcarriers). DCO- and ACO-OFDM share a BER curve and differ only in
bandwidth efficiency and DC bias.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from scipy import optimize, special

from .noise import LinkScenario, from_db, required_tx_power, to_db

OOK = "OOK-NRZ"
PPM = "L-PPM"
DPIM = "DPIM"
DCO_OFDM = "DCO-OFDM"
ACO_OFDM = "ACO-OFDM"
KINDS = (OOK, PPM, DPIM, DCO_OFDM, ACO_OFDM)
_PULSE = (PPM, DPIM)
_OFDM = (DCO_OFDM, ACO_OFDM)

SNR_CEILING = 1e8

erfc = special.erfc


def _log_erfc(x):
    # erfc(x) = 2 Q(x sqrt 2); log_ndtr stays finite far into the tail.
    return math.log(2) + special.log_ndtr(-np.asarray(x, dtype=float) * math.sqrt(2))


def _is_power_of_two(n: int) -> bool:
    return n >= 2 and n & (n - 1) == 0


@dataclass(frozen=True)
class ModulationScheme:
    """A modulation format and its order.

    ``order`` is the symbol length L for PPM/DPIM and the square QAM
    constellation size M for OFDM; it is ignored for OOK.
    """

    kind: str
    order: int = 2
    subcarriers: int = 64
    guard: int = 16

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown modulation {self.kind!r}; expected one of {KINDS}")
        if self.kind in _PULSE and not _is_power_of_two(self.order):
            raise ValueError(f"{self.kind} order must be a power of two >= 2, got {self.order}")
        if self.kind in _OFDM:
            if not (_is_power_of_two(self.order) and math.isqrt(self.order) ** 2 == self.order
                    and self.order >= 4):
                raise ValueError(f"{self.kind} needs a square QAM order >= 4, got {self.order}")
            if not (_is_power_of_two(self.subcarriers) and self.subcarriers >= 8):
                raise ValueError(f"OFDM size must be a power of two >= 8, got {self.subcarriers}")
            if not 0 <= self.guard < self.subcarriers:
                raise ValueError(f"guard length must lie in [0, N), got {self.guard}")

    @classmethod
    def parse(cls, text: str, subcarriers: int = 64, guard: int = 16) -> ModulationScheme:
        """Parse labels like ``OOK-NRZ``, ``L-PPM:8``, ``DPIM:4``, ``ACO-OFDM:16``."""
        kind, _, order = text.strip().partition(":")
        kind = kind.strip().upper()
        aliases = {"OOK": OOK, "PPM": PPM, "DCO": DCO_OFDM, "ACO": ACO_OFDM}
        kind = aliases.get(kind, kind)
        if kind == OOK:
            return cls(OOK, 2, subcarriers, guard)
        if not order:
            raise ValueError(f"{kind} needs an order, e.g. {kind}:4")
        return cls(kind, int(order), subcarriers, guard)

    @property
    def label(self) -> str:
        return OOK if self.kind == OOK else f"{self.kind}:{self.order}"

    @property
    def average_symbol_length(self) -> float:
        """Mean DPIM symbol length in slots: L data slots plus one guard slot, averaged."""
        return (self.order + 3) / 2

    def _pulse_gain(self) -> float:
        bits = math.log2(self.order)
        length = self.order if self.kind == PPM else self.average_symbol_length
        return length / 2 * bits

    def _qam_prefactor(self) -> float:
        root = math.sqrt(self.order)
        return (root - 1) / (root * math.log2(root))


def ber(scheme: ModulationScheme, snr):
    """Bit error probability at electrical SNR (linear); scalar or array."""
    s = np.asarray(snr, dtype=float)
    if np.any(s < 0):
        raise ValueError("SNR must be non-negative")
    if scheme.kind == OOK:
        out = 0.5 * erfc(np.sqrt(s) / (2 * math.sqrt(2)))
    elif scheme.kind in _PULSE:
        out = 0.5 * erfc(np.sqrt(s * scheme._pulse_gain()) / (2 * math.sqrt(2)))
    else:
        m = scheme.order
        out = scheme._qam_prefactor() * erfc(np.sqrt(3 * s / (2 * (m - 1))))
    return float(out) if out.ndim == 0 else out


def log_ber(scheme: ModulationScheme, snr):
    s = np.asarray(snr, dtype=float)
    if scheme.kind == OOK:
        out = math.log(0.5) + _log_erfc(np.sqrt(s) / (2 * math.sqrt(2)))
    elif scheme.kind in _PULSE:
        out = math.log(0.5) + _log_erfc(np.sqrt(s * scheme._pulse_gain()) / (2 * math.sqrt(2)))
    else:
        m = scheme.order
        out = math.log(scheme._qam_prefactor()) + _log_erfc(np.sqrt(3 * s / (2 * (m - 1))))
    return float(out) if np.ndim(out) == 0 else out


def bandwidth_requirement(scheme: ModulationScheme, bit_rate_bps: float) -> float:
    if not bit_rate_bps > 0:
        raise ValueError(f"bit rate must be positive, got {bit_rate_bps}")
    if scheme.kind == OOK:
        return bit_rate_bps
    if scheme.kind == PPM:
        return bit_rate_bps * scheme.order / math.log2(scheme.order)
    if scheme.kind == DPIM:
        return bit_rate_bps * scheme.average_symbol_length / math.log2(scheme.order)
    n, ng = scheme.subcarriers, scheme.guard
    data_carriers = n / 2 - 1 if scheme.kind == DCO_OFDM else n / 4 - 1
    return bit_rate_bps * (n + ng) / (data_carriers * math.log2(scheme.order))


def required_snr(scheme: ModulationScheme, target_ber: float) -> float:
    """Electrical SNR (linear) at which the BER equals ``target_ber``.

    Solved on the monotone log-BER curve, so the returned point meets the
    target to better than 1e-9 relative.
    """
    ceiling = ber(scheme, 0.0)
    if not 0 < target_ber < ceiling:
        raise ValueError(f"target BER {target_ber} unattainable for {scheme.label} "
                         f"(must lie in (0, {ceiling:g}))")
    goal = math.log(target_ber)
    if log_ber(scheme, SNR_CEILING) > goal:
        raise ValueError(f"target BER {target_ber} needs SNR above {SNR_CEILING:g}")

    def f(u):
        return log_ber(scheme, math.exp(u)) - goal

    u = optimize.brentq(f, math.log(1e-12), math.log(SNR_CEILING), xtol=1e-14, rtol=1e-15, maxiter=500)
    return math.exp(u)


REFERENCE_SCHEMES: tuple[str, ...] = (
    "OOK-NRZ",
    "L-PPM:2", "L-PPM:4", "L-PPM:8",
    "DPIM:2", "DPIM:4", "DPIM:8",
    "DCO-OFDM:4", "DCO-OFDM:16", "DCO-OFDM:64",
    "ACO-OFDM:4", "ACO-OFDM:16", "ACO-OFDM:64",
)

SWEEP_POWER_W = 4.0
SWEEP_BANDWIDTH_HZ = 2.5e6


class PowerRow(NamedTuple):
    scheme: str
    order: str
    snr_db: float
    tx_power_w: float
    note: str


def power_table(schemes: Iterable[ModulationScheme], scenario: LinkScenario,
                target_ber: float = 1e-6) -> list[PowerRow]:
    """Required SNR and transmit optical power per scheme at ``target_ber``."""
    rows = []
    for sch in schemes:
        snr = required_snr(sch, target_ber)
        order = "" if sch.kind == OOK else ("L=" if sch.kind in _PULSE else "M=") + str(sch.order)
        note = "+ DC bias, not included in tx power" if sch.kind == DCO_OFDM else ""
        rows.append(PowerRow(sch.kind, order, to_db(snr), required_tx_power(snr, scenario), note))
    return rows


def power_table_csv(rows: Sequence[PowerRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["scheme", "order", "snr_db", "tx_power_w", "note"])
    for r in rows:
        w.writerow([r.scheme, r.order, f"{r.snr_db:.2f}", f"{r.tx_power_w:.4f}", r.note])
    return buf.getvalue()


class BerPoint(NamedTuple):
    snr: float
    ber: float


@dataclass(frozen=True)
class BerSeries:
    scheme: ModulationScheme
    axis: str
    x: tuple[float, ...]
    points: tuple[BerPoint, ...]


SWEEP_AXES = ("snr_db", "power_w", "bit_rate_bps")


def ber_sweep(schemes: Iterable[ModulationScheme], scenario: LinkScenario, values: Sequence[float],
              axis: str = "snr_db", power_w: float = SWEEP_POWER_W,
              bandwidth_hz: float = SWEEP_BANDWIDTH_HZ) -> list[BerSeries]:
    """BER curves for each scheme along ``axis``.

    ``snr_db``: x is the electrical SNR directly. ``power_w``: x is the
    transmit power at ``bandwidth_hz``. ``bit_rate_bps``: x is the data rate,
    the receiver bandwidth follows each scheme's requirement and the link
    runs at ``power_w``.
    """
    if axis not in SWEEP_AXES:
        raise ValueError(f"unknown sweep axis {axis!r}; expected one of {SWEEP_AXES}")
    out = []
    for sch in schemes:
        if axis == "snr_db":
            snrs = [from_db(v) for v in values]
        elif axis == "power_w":
            sc = scenario.replace(bandwidth_hz=bandwidth_hz)
            snrs = [sc.snr(p) for p in values]
        else:
            snrs = [scenario.replace(bandwidth_hz=bandwidth_requirement(sch, rb)).snr(power_w)
                    for rb in values]
        bers = ber(sch, np.array(snrs, dtype=float)) if snrs else np.array([])
        pts = tuple(BerPoint(s, float(b)) for s, b in zip(snrs, bers))
        out.append(BerSeries(sch, axis, tuple(float(v) for v in values), pts))
    return out


def ber_sweep_csv(series: Sequence[BerSeries]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["scheme", "order", "x_value", "ber"])
    for s in series:
        order = "" if s.scheme.kind == OOK else s.scheme.order
        for x, p in zip(s.x, s.points):
            w.writerow([s.scheme.kind, order, f"{x:.6g}", f"{p.ber:.6e}"])
    return buf.getvalue()
