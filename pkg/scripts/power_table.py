"""Required SNR and transmit power per scheme at BER 1e-6, for both FET noise factors."""
import argparse

from vlcisl import modulation
from vlcisl.noise import AmplifierSpec, LinkScenario


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--suppression", type=float, default=0.05)
    ap.add_argument("--target-ber", type=float, default=1e-6)
    args = ap.parse_args()
    schemes = [modulation.ModulationScheme.parse(s) for s in modulation.REFERENCE_SCHEMES]
    for gamma in (0.82, 1.5):
        sc = LinkScenario(amplifier=AmplifierSpec(channel_noise_factor=gamma), suppression=args.suppression)
        print(f"# FET channel noise factor {gamma}")
        print(modulation.power_table_csv(modulation.power_table(schemes, sc, args.target_ber)), end="")


if __name__ == "__main__":
    main()
