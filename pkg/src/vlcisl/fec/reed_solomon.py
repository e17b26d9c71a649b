"""Systematic Reed-Solomon codes of length 15 over GF(16).

Codewords are the k message symbols followed by n - k parity symbols,
read as a polynomial with the first symbol as the highest-degree
coefficient. Generator roots are alpha^1 .. alpha^(n-k).

Decoding is bounded-distance: syndromes, Berlekamp-Massey for the error
locator, Chien search for its roots, Forney for the magnitudes.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from . import gf16
from .gf16 import MUL, alpha_pow, poly_divmod, poly_eval

N = 15
SUPPORTED_K = (11, 13)


@dataclass(frozen=True)
class RsCode:
    n: int
    k: int
    generator: tuple[int, ...]

    @property
    def t(self) -> int:
        return (self.n - self.k) // 2

    @property
    def parity_len(self) -> int:
        return self.n - self.k

    @property
    def rate(self) -> float:
        return self.k / self.n

    @property
    def label(self) -> str:
        return f"RS({self.n},{self.k})"


def rs_generator(n: int = N, k: int = 11) -> RsCode:
    """Generator polynomial ``prod_{i=1..n-k} (X + alpha^i)``."""
    if n != N or k not in SUPPORTED_K:
        raise ValueError(f"unsupported code RS({n},{k}); supported: " +
                         ", ".join(f"RS({N},{kk})" for kk in SUPPORTED_K))
    g = [1]
    for i in range(1, n - k + 1):
        g = gf16.poly_mul(g, [1, alpha_pow(i)])
    return RsCode(n, k, tuple(g))


def _check_symbols(symbols: Sequence[int], length: int, what: str) -> list[int]:
    out = [int(s) for s in symbols]
    if len(out) != length:
        raise ValueError(f"{what} must have {length} symbols, got {len(out)}")
    for s in out:
        if not 0 <= s <= 15:
            raise ValueError(f"{s} is not a GF(16) symbol")
    return out


def rs_encode(code: RsCode, message: Sequence[int]) -> list[int]:
    msg = _check_symbols(message, code.k, "message")
    _, rem = poly_divmod(msg + [0] * code.parity_len, list(code.generator))
    return msg + rem


def syndromes(code: RsCode, received: Sequence[int]) -> list[int]:
    r = list(received)
    return [poly_eval(r, alpha_pow(j)) for j in range(1, code.parity_len + 1)]


def _berlekamp_massey(synd: list[int]) -> list[int]:
    """Error locator Lambda(x), lowest degree first, with Lambda(0) = 1."""
    lam = [1]
    prev = [1]
    length = 0
    shift = 1
    prev_disc = 1
    for r, _ in enumerate(synd):
        disc = synd[r]
        for i in range(1, length + 1):
            if i < len(lam):
                disc ^= MUL[lam[i]][synd[r - i]]
        if disc == 0:
            shift += 1
            continue
        coef = gf16.div(disc, prev_disc)
        update = [0] * shift + [MUL[coef][c] for c in prev]
        new = [a ^ b for a, b in zip(lam + [0] * (len(update) - len(lam)),
                                     update + [0] * (len(lam) - len(update)))]
        if 2 * length <= r:
            prev = lam
            length = r + 1 - length
            prev_disc = disc
            shift = 1
        else:
            shift += 1
        lam = new
    while len(lam) > 1 and lam[-1] == 0:
        lam.pop()
    return lam


def _eval_low(p: list[int], x: int) -> int:
    row = MUL[x]
    y = 0
    for a in reversed(p):
        y = row[y] ^ a
    return y


class DecodeResult(NamedTuple):
    message: list[int]
    corrected: int
    ok: bool


def rs_decode(code: RsCode, received: Sequence[int]) -> DecodeResult:
    """Correct up to ``t`` symbol errors.

    On a detected decoding failure ``ok`` is False and the systematic part
    of the received word is returned unchanged. More than ``t`` errors can
    also be silently miscorrected into a different codeword; that is the
    nature of bounded-distance decoding.
    """
    r = _check_symbols(received, code.n, "received word")
    synd = syndromes(code, r)
    if not any(synd):
        return DecodeResult(r[:code.k], 0, True)

    fail = DecodeResult(r[:code.k], 0, False)
    lam = _berlekamp_massey(synd)
    n_err = len(lam) - 1
    if n_err == 0 or n_err > code.t:
        return fail

    # Chien search: symbol index i carries X^(n-1-i); its locator is alpha^(n-1-i).
    positions = []
    for i in range(code.n):
        x_inv = alpha_pow(-(code.n - 1 - i))
        if _eval_low(lam, x_inv) == 0:
            positions.append(i)
    if len(positions) != n_err:
        return fail

    # Omega(x) = S(x) Lambda(x) mod x^(2t), S(x) = sum S_j x^(j-1).
    omega = [0] * code.parity_len
    for i, s in enumerate(synd):
        for j, l in enumerate(lam):
            if i + j < code.parity_len:
                omega[i + j] ^= MUL[s][l]
    lam_deriv = [lam[j] if j % 2 == 1 else 0 for j in range(1, len(lam))]

    out = list(r)
    for i in positions:
        x_inv = alpha_pow(-(code.n - 1 - i))
        denom = _eval_low(lam_deriv, x_inv)
        if denom == 0:
            return fail
        out[i] ^= gf16.div(_eval_low(omega, x_inv), denom)

    if any(syndromes(code, out)):
        return fail
    return DecodeResult(out[:code.k], n_err, True)


def divides_x15_minus_1(code: RsCode) -> bool:
    _, rem = poly_divmod([1] + [0] * 14 + [1], list(code.generator))
    return not any(rem)


# --- batch helpers for simulation -----------------------------------------

def parity_matrix(code: RsCode) -> np.ndarray:
    """Parity of each unit message, shape (k, n-k); encoding is linear over GF(16)."""
    rows = []
    for i in range(code.k):
        unit = [0] * code.k
        unit[i] = 1
        rows.append(rs_encode(code, unit)[code.k:])
    return np.array(rows, dtype=np.uint8)


def encode_batch(code: RsCode, messages: np.ndarray) -> np.ndarray:
    """Encode an (m, k) array of message symbols into (m, n) codewords."""
    msgs = np.asarray(messages, dtype=np.uint8)
    par_rows = parity_matrix(code)
    parity = np.zeros((msgs.shape[0], code.parity_len), dtype=np.uint8)
    for i in range(code.k):
        parity ^= gf16.MUL_TABLE[msgs[:, i][:, None], par_rows[i][None, :]]
    return np.concatenate([msgs, parity], axis=1)


def syndromes_batch(code: RsCode, words: np.ndarray) -> np.ndarray:
    """Syndromes of an (m, n) array of received words, shape (m, n-k)."""
    w = np.asarray(words, dtype=np.uint8)
    out = np.zeros((w.shape[0], code.parity_len), dtype=np.uint8)
    for j in range(1, code.parity_len + 1):
        powers = np.array([alpha_pow(j * (code.n - 1 - i)) for i in range(code.n)], dtype=np.uint8)
        terms = gf16.MUL_TABLE[w, powers[None, :]]
        out[:, j - 1] = np.bitwise_xor.reduce(terms, axis=1)
    return out


def decode_batch(code: RsCode, words: np.ndarray) -> tuple[np.ndarray, int]:
    """Decode an (m, n) array; returns (m, k) messages and the count of detected failures."""
    w = np.asarray(words, dtype=np.uint8)
    out = w[:, :code.k].copy()
    dirty = np.flatnonzero(syndromes_batch(code, w).any(axis=1))
    failures = 0
    for idx in dirty:
        res = rs_decode(code, w[idx].tolist())
        out[idx] = res.message
        failures += not res.ok
    return out, failures
