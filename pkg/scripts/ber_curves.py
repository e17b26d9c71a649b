"""BER curves for all schemes, vs SNR and vs transmit power (4 W, 2.5 MHz defaults)."""
import argparse
from pathlib import Path

import numpy as np

from vlcisl import modulation
from vlcisl.noise import LinkScenario


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", type=Path, default=Path("."))
    args = ap.parse_args()
    schemes = [modulation.ModulationScheme.parse(s) for s in modulation.REFERENCE_SCHEMES]
    sc = LinkScenario()
    grids = {"snr_db": np.arange(0, 30.5, 0.5), "power_w": np.arange(0.25, 8.25, 0.25)}
    for axis, grid in grids.items():
        path = args.outdir / f"ber_vs_{axis}.csv"
        path.write_text(modulation.ber_sweep_csv(modulation.ber_sweep(schemes, sc, grid, axis=axis)))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
