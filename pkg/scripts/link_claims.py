"""FOV, distance and DPIM bandwidth claims at the 2 W / 0.5 km / 0.5 MHz operating point."""
from vlcisl.channel import ConcentratorSpec, LinkGeometry
from vlcisl.modulation import ModulationScheme, bandwidth_requirement, required_snr
from vlcisl.noise import LinkScenario, link_budget, to_db


def main():
    sc = LinkScenario()
    print(link_budget(sc).to_text())
    for fov in (35, 45, 60, 90):
        print(f"FOV {fov:>2} deg: SNR {sc.replace(concentrator=ConcentratorSpec(fov_deg=fov)).snr_db():7.3f} dB")
    for d in (250, 500, 1000, 2000):
        print(f"d = {d:>4} m: SNR {sc.replace(geometry=LinkGeometry(distance_m=d)).snr_db():7.3f} dB")
    dpim8 = ModulationScheme.parse("DPIM:8")
    bw = bandwidth_requirement(dpim8, 2e6)
    print(f"DPIM(8) at 2 Mbit/s: bandwidth {bw / 1e6:.4f} MHz, "
          f"SNR at 4 W {sc.replace(bandwidth_hz=bw).snr_db(4.0):.2f} dB, "
          f"needed {to_db(required_snr(dpim8, 1e-6)):.2f} dB")


if __name__ == "__main__":
    main()
