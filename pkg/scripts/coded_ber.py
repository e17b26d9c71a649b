"""Monte Carlo BER of uncoded, RS(15,13) and RS(15,11) coded Gray 16-QAM."""
import argparse
from pathlib import Path

import numpy as np

from vlcisl.fec import montecarlo as mc
from vlcisl.fec import rs_generator


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=2018)
    ap.add_argument("--bits", type=int, default=20_000_000)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()
    ebno = np.arange(6.0, 13.0, 1.0)
    points = mc.coded_ber_curve(None, ebno, args.bits, args.seed, args.workers)
    for k in (13, 11):
        points += mc.coded_ber_curve(rs_generator(15, k), ebno, args.bits, args.seed, args.workers)
    text = mc.curves_csv(points)
    if args.out:
        args.out.write_text(text)
    else:
        print(text, end="")
    for e in ebno:
        print(f"# Eb/No {e:g} dB: approximation {float(mc.qam16_ber_approx(e)):.3e}")


if __name__ == "__main__":
    main()
