"""16-QAM over AWGN, uncoded and Reed-Solomon coded, by Monte Carlo.

Each GF(16) symbol maps to one Gray-labelled 16-QAM point with unit
average energy. Coded curves are indexed by information-bit Eb/No, so
the channel sees ``Es/No = 4 (k/n) Eb/No``.

Randomness comes from Philox (a counter-based generator) keyed by
``SeedSequence(seed, spawn_key=(stream, ebno_key, chunk))``. Work is cut
into fixed-size chunks, so the error counts are identical whether the
chunks run serially or on any number of worker processes.
"""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import special, stats

from .reed_solomon import RsCode, decode_batch, encode_batch, rs_generator

BITS_PER_SYMBOL = 4
CHUNK_SYMBOLS = 1 << 15
UNCODED_LABEL = "uncoded-16QAM"

# Gray code per axis: label bits -> amplitude level.
_GRAY_LEVELS = np.array([-3.0, -1.0, 3.0, 1.0])  # 00, 01, 10, 11
_LEVEL_TO_BITS = np.array([0, 1, 3, 2], dtype=np.uint8)  # level index (-3,-1,1,3) -> label
_SCALE = 1 / math.sqrt(10.0)


def qam16_modulate(symbols: np.ndarray) -> np.ndarray:
    s = np.asarray(symbols, dtype=np.uint8)
    i = _GRAY_LEVELS[s >> 2]
    q = _GRAY_LEVELS[s & 3]
    return (i + 1j * q) * _SCALE


def _slice_axis(x: np.ndarray) -> np.ndarray:
    idx = np.clip(np.floor(x / _SCALE / 2 + 2), 0, 3).astype(np.intp)
    return _LEVEL_TO_BITS[idx]


def qam16_demodulate(received: np.ndarray) -> np.ndarray:
    """Minimum-distance hard decisions back to 4-bit symbols."""
    y = np.asarray(received)
    return (_slice_axis(y.real) << 2) | _slice_axis(y.imag)


def qam16_ber_approx(ebno_db):
    """Gray 16-QAM bit error rate, ``(3/4) Q(sqrt(0.8 Eb/No))``."""
    ebno = 10 ** (np.asarray(ebno_db, dtype=float) / 10)
    return 0.75 * 0.5 * special.erfc(np.sqrt(0.8 * ebno) / math.sqrt(2))


_POPCOUNT = np.array([bin(i).count("1") for i in range(16)], dtype=np.int64)


def _ebno_key(ebno_db: float) -> int:
    if math.isinf(ebno_db) and ebno_db > 0:
        return 0  # noiseless channel
    return int(round(ebno_db * 1000)) + (1 << 20)


def _rng(seed: int, stream: int, ebno_db: float, chunk: int) -> np.random.Generator:
    ss = np.random.SeedSequence(seed, spawn_key=(stream, _ebno_key(ebno_db), chunk))
    return np.random.Generator(np.random.Philox(ss))


def _awgn(rng: np.random.Generator, shape, es_no: float) -> np.ndarray:
    sigma = math.sqrt(1 / (2 * es_no)) if math.isfinite(es_no) else 0.0
    return sigma * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def _uncoded_chunk(args) -> int:
    seed, ebno_db, chunk, n_sym = args
    rng = _rng(seed, 0, ebno_db, chunk)
    tx = rng.integers(0, 16, n_sym, dtype=np.uint8)
    es_no = BITS_PER_SYMBOL * 10 ** (ebno_db / 10)
    rx = qam16_demodulate(qam16_modulate(tx) + _awgn(rng, n_sym, es_no))
    return int(_POPCOUNT[tx ^ rx].sum())


def _coded_chunk(args) -> tuple[int, int]:
    seed, ebno_db, chunk, n_blocks, k = args
    code = rs_generator(15, k)
    rng = _rng(seed, k, ebno_db, chunk)
    msgs = rng.integers(0, 16, (n_blocks, k), dtype=np.uint8)
    cw = encode_batch(code, msgs)
    es_no = BITS_PER_SYMBOL * code.rate * 10 ** (ebno_db / 10)
    rx = qam16_demodulate(qam16_modulate(cw) + _awgn(rng, cw.shape, es_no))
    decoded, failures = decode_batch(code, rx)
    return int(_POPCOUNT[decoded ^ msgs].sum()), failures


def _run(fn, tasks, workers: int):
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


@dataclass(frozen=True)
class CurvePoint:
    ebno_db: float
    label: str
    bit_errors: int
    n_bits: int
    decode_failures: int = 0

    @property
    def ber(self) -> float:
        return self.bit_errors / self.n_bits

    @property
    def ci95(self) -> tuple[float, float]:
        ci = stats.binomtest(self.bit_errors, self.n_bits).proportion_ci(0.95, method="wilson")
        return float(ci.low), float(ci.high)


def _chunks(total: int, size: int) -> list[int]:
    full, rest = divmod(total, size)
    return [size] * full + ([rest] if rest else [])


def qam16_roundtrip_ber(ebno_db: float, n_bits: int, seed: int, workers: int = 1) -> CurvePoint:
    """Uncoded Gray 16-QAM over AWGN; ``n_bits`` is rounded up to whole symbols."""
    n_sym = -(-int(n_bits) // BITS_PER_SYMBOL)
    tasks = [(seed, ebno_db, i, n) for i, n in enumerate(_chunks(n_sym, CHUNK_SYMBOLS))]
    errors = sum(_run(_uncoded_chunk, tasks, workers))
    return CurvePoint(ebno_db, UNCODED_LABEL, errors, n_sym * BITS_PER_SYMBOL)


def coded_ber_point(code: RsCode, ebno_db: float, n_bits: int, seed: int, workers: int = 1) -> CurvePoint:
    """Message-bit error rate after RS decoding; ``n_bits`` is rounded up to whole blocks."""
    bits_per_block = code.k * BITS_PER_SYMBOL
    n_blocks = -(-int(n_bits) // bits_per_block)
    per_chunk = max(1, CHUNK_SYMBOLS // code.n)
    tasks = [(seed, ebno_db, i, n, code.k) for i, n in enumerate(_chunks(n_blocks, per_chunk))]
    results = _run(_coded_chunk, tasks, workers)
    return CurvePoint(ebno_db, code.label, sum(r[0] for r in results),
                      n_blocks * bits_per_block, sum(r[1] for r in results))


def coded_ber_curve(code: RsCode | None, ebno_range: Sequence[float], n_bits: int, seed: int,
                    workers: int = 1) -> list[CurvePoint]:
    """BER vs information-bit Eb/No; ``code=None`` gives the uncoded reference."""
    if code is None:
        return [qam16_roundtrip_ber(e, n_bits, seed, workers) for e in ebno_range]
    return [coded_ber_point(code, e, n_bits, seed, workers) for e in ebno_range]


def curves_csv(points: Sequence[CurvePoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["ebno_db", "scheme_label", "ber", "ci_low", "ci_high", "n_bits"])
    for p in points:
        lo, hi = p.ci95
        w.writerow([f"{p.ebno_db:g}", p.label, f"{p.ber:.6e}", f"{lo:.6e}", f"{hi:.6e}", p.n_bits])
    return buf.getvalue()
