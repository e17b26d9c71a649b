"""Band-integrated solar irradiance against the reference columns, plus the closure check."""
import argparse
from pathlib import Path

from scipy.constants import Stefan_Boltzmann

from vlcisl import radiometry


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()
    v = radiometry.validate_solar_model()
    text = v.to_csv()
    if args.out:
        args.out.write_text(text)
    else:
        print(text, end="")
    full = radiometry.band_irradiance(1.0, 1e7)
    print(f"# full-range integral {full:.3f} W/m2, "
          f"closed form {radiometry.GEOMETRIC_SCALE * Stefan_Boltzmann * 5780**4:.3f} W/m2")


if __name__ == "__main__":
    main()
