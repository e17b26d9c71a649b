"""Command-line entry point.

Exit codes: 0 success, 1 configuration/validation error, 2 computation error.
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

from . import channel, modulation, noise, radiometry
from .config import ConfigError, parse_config
from .fec import montecarlo
from .fec.reed_solomon import rs_generator

EXIT_OK, EXIT_CONFIG, EXIT_COMPUTE = 0, 1, 2

SWEEP_ALIASES = {
    "fov": "concentrator.fov_deg",
    "distance": "link.distance_m",
    "power": "transmitter.power_w",
    "bandwidth": "link.bandwidth_hz",
    "suppression": "link.suppression",
    "area": "detector.area_m2",
}


def _floats(text: str) -> list[float]:
    """``a,b,c`` or ``start:stop:step`` (stop inclusive)."""
    if text.count(":") == 2:
        start, stop, step = (float(x) for x in text.split(":"))
        if step <= 0:
            raise ValueError("range step must be positive")
        n = int(round((stop - start) / step))
        return [start + i * step for i in range(n + 1)]
    return [float(x) for x in text.split(",") if x.strip()]


def _csv_rows(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_solar_validate(cfg, args) -> str:
    sc = cfg.scenario
    return radiometry.validate_solar_model(sc.scaling, sc.source).to_csv()


def cmd_lines(cfg, args) -> str:
    return radiometry.catalog_csv()


def cmd_snr(cfg, args) -> str:
    if not args.sweep:
        sc = cfg.scenario
        report = noise.link_budget(sc)
        return (f"electrical SNR: {sc.snr_db():.3f} dB\n"
                f"channel gain H(0): {sc.channel_gain:.6e}\n"
                f"background power: {sc.background_power:.6e} W\n\n" + report.to_text())
    name, _, values = args.sweep.partition("=")
    key = SWEEP_ALIASES.get(name.strip(), name.strip())
    rows = []
    for v in _floats(values):
        sc = cfg.with_overrides({key: repr(v)}).scenario
        snr = sc.snr()
        rows.append([key, f"{v:g}", f"{noise.to_db(snr):.6f}",
                     f"{noise.to_db(noise.snr_per_bit(snr, sc.bandwidth_hz, sc.bit_rate_bps)):.6f}",
                     f"{sc.channel_gain:.6e}", f"{sc.background_power:.6e}"])
    return _csv_rows(["parameter", "value", "snr_db", "snr_per_bit_db", "channel_gain", "background_w"], rows)


def cmd_budget(cfg, args) -> str:
    report = noise.link_budget(cfg.scenario)
    return report.to_csv() if args.format == "csv" else report.to_text()


def cmd_power_table(cfg, args) -> str:
    rows = modulation.power_table(cfg.schemes, cfg.scenario, cfg["modulation.target_ber"])
    return modulation.power_table_csv(rows)


def cmd_ber_sweep(cfg, args) -> str:
    values = _floats(args.values) if args.values else {
        "snr_db": _floats("0:30:0.5"),
        "power_w": _floats("0.25:8:0.25"),
        "bit_rate_bps": _floats("0.25e6:10e6:0.25e6"),
    }[args.axis]
    series = modulation.ber_sweep(cfg.schemes, cfg.scenario, values, axis=args.axis,
                                  power_w=args.power, bandwidth_hz=args.bandwidth)
    return modulation.ber_sweep_csv(series)


def cmd_coded_ber(cfg, args) -> str:
    ebno = _floats(args.ebno)
    points = montecarlo.coded_ber_curve(None, ebno, args.bits, args.seed, args.workers)
    for k in args.codes:
        points += montecarlo.coded_ber_curve(rs_generator(15, k), ebno, args.bits, args.seed, args.workers)
    return montecarlo.curves_csv(points)


def cmd_doppler(cfg, args) -> str:
    lam = args.wavelength if args.wavelength is not None else cfg["transmitter.peak_wavelength_nm"]
    rows = []
    for v in _floats(args.range_rate):
        d = channel.doppler_shift(lam, v)
        rows.append([f"{lam:g}", f"{v:g}", f"{d.shift_nm:.6f}", "yes" if d.significant else "no"])
    return _csv_rows(["wavelength_nm", "range_rate_m_s", "shift_nm", "significant"], rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="INI scenario file")
    common.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
                        help="override one config key, e.g. link.distance_m=1000 (repeatable)")
    common.add_argument("--out", type=Path, help="write output here instead of stdout")
    common.add_argument("--dump-config", action="store_true", help="print the resolved config and exit")

    parser = argparse.ArgumentParser(prog="vlcisl", description="Visible-light inter-satellite link model.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    add("solar-validate", cmd_solar_validate, "band-integrated solar flux vs reference columns")
    add("lines", cmd_lines, "Fraunhofer line catalog as CSV")
    p = add("snr", cmd_snr, "SNR and link budget, optionally swept over one parameter")
    p.add_argument("--sweep", help="NAME=v1,v2,... or NAME=start:stop:step; NAME is a config key or "
                                   + "/".join(SWEEP_ALIASES))
    p = add("budget", cmd_budget, "dB link budget report")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    add("power-table", cmd_power_table, "required SNR and transmit power per scheme")
    p = add("ber-sweep", cmd_ber_sweep, "BER curves per scheme")
    p.add_argument("--axis", choices=modulation.SWEEP_AXES, default="snr_db")
    p.add_argument("--values", help="comma list or start:stop:step")
    p.add_argument("--power", type=float, default=modulation.SWEEP_POWER_W, help="transmit power, W")
    p.add_argument("--bandwidth", type=float, default=modulation.SWEEP_BANDWIDTH_HZ, help="bandwidth, Hz")
    p = add("coded-ber", cmd_coded_ber, "Monte Carlo 16-QAM BER, uncoded and RS-coded")
    p.add_argument("--seed", type=int, default=2018)
    p.add_argument("--bits", type=int, default=2_000_000, help="information bits per point")
    p.add_argument("--ebno", default="7:12:1", help="Eb/No points in dB")
    p.add_argument("--codes", type=lambda s: [int(x) for x in s.split(",")], default=[11, 13],
                   help="RS(15,k) message lengths")
    p.add_argument("--workers", type=int, default=1)
    p = add("doppler", cmd_doppler, "Doppler wavelength shift for given range rates")
    p.add_argument("--wavelength", type=float, help="emitted wavelength, nm (default: LED peak)")
    p.add_argument("--range-rate", required=True, help="range rate(s), m/s")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = parse_config(args.config, args.overrides)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    if args.dump_config:
        text = cfg.dump()
    else:
        try:
            text = args.func(cfg, args)
        except ConfigError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        except (ValueError, ArithmeticError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_COMPUTE

    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
