import math

import numpy as np
import pytest

from vlcisl.fec import montecarlo as mc
from vlcisl.fec import rs_generator


def test_constellation_unit_energy_and_gray():
    pts = mc.qam16_modulate(np.arange(16))
    assert np.mean(np.abs(pts) ** 2) == pytest.approx(1.0)
    d_min = 2 / math.sqrt(10)
    for a in range(16):
        for b in range(16):
            if a != b and abs(abs(pts[a] - pts[b]) - d_min) < 1e-12:
                assert bin(a ^ b).count("1") == 1


def test_modulate_demodulate_roundtrip():
    s = np.arange(16, dtype=np.uint8)
    assert np.array_equal(mc.qam16_demodulate(mc.qam16_modulate(s)), s)


def test_approximation_value():
    assert mc.qam16_ber_approx(12) == pytest.approx(1.4e-4, rel=0.02)


def test_same_seed_identical():
    a = mc.qam16_roundtrip_ber(8, 200_000, seed=42)
    b = mc.qam16_roundtrip_ber(8, 200_000, seed=42)
    c = mc.qam16_roundtrip_ber(8, 200_000, seed=43)
    assert a == b
    assert a.bit_errors != c.bit_errors


def test_worker_count_does_not_change_results():
    serial = mc.coded_ber_curve(rs_generator(15, 13), [6, 7], 300_000, seed=9, workers=1)
    parallel = mc.coded_ber_curve(rs_generator(15, 13), [6, 7], 300_000, seed=9, workers=2)
    assert serial == parallel
    assert mc.qam16_roundtrip_ber(6, 300_000, 9, workers=1) == mc.qam16_roundtrip_ber(6, 300_000, 9, workers=3)


def test_high_snr_no_errors():
    assert mc.qam16_roundtrip_ber(30, 100_000, seed=1).bit_errors == 0


def test_uncoded_matches_approximation():
    p = mc.qam16_roundtrip_ber(12, 2_000_000, seed=77)
    lo, hi = p.ci95
    approx = float(mc.qam16_ber_approx(12))
    assert approx / 3 <= p.ber <= approx * 3
    assert lo <= p.ber <= hi


@pytest.mark.parametrize("k", [11, 13])
def test_noiseless_coded_ber_is_zero(k):
    p = mc.coded_ber_point(rs_generator(15, k), math.inf, 100_000, seed=3)
    assert p.bit_errors == 0 and p.decode_failures == 0


def test_bit_counts_round_up():
    p = mc.coded_ber_point(rs_generator(15, 11), 20, 45, seed=0)
    assert p.n_bits == 88
    assert mc.qam16_roundtrip_ber(20, 5, seed=0).n_bits == 8


def test_csv_columns():
    pts = mc.coded_ber_curve(None, [10], 40_000, seed=1)
    rows = mc.curves_csv(pts).splitlines()
    assert rows[0] == "ebno_db,scheme_label,ber,ci_low,ci_high,n_bits"
    assert rows[1].split(",")[1] == mc.UNCODED_LABEL
    assert rows[1].split(",")[-1] == "40000"
