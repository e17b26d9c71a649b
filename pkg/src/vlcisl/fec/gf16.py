"""Arithmetic in GF(2^4) with primitive polynomial p(X) = X^4 + X + 1.

Elements are ints 0..15 in polynomial basis (bit i is the coefficient of
alpha^i). Polynomials are lists of coefficients, highest degree first.
"""
from __future__ import annotations

import numpy as np

PRIMITIVE_POLY = 0b10011
ORDER = 15
ALPHA = 2


def _build_tables():
    exp = [0] * (2 * ORDER)
    log = [0] * 16
    x = 1
    for i in range(ORDER):
        exp[i] = x
        log[x] = i
        x <<= 1
        if x & 0x10:
            x ^= PRIMITIVE_POLY
    for i in range(ORDER, 2 * ORDER):
        exp[i] = exp[i - ORDER]
    return exp, log


EXP, LOG = _build_tables()


def _check(a: int) -> int:
    if not 0 <= a <= 15:
        raise ValueError(f"{a} is not an element of GF(16)")
    return a


def add(a: int, b: int) -> int:
    return _check(a) ^ _check(b)


sub = add


def mul(a: int, b: int) -> int:
    if _check(a) == 0 or _check(b) == 0:
        return 0
    return EXP[LOG[a] + LOG[b]]


def inv(a: int) -> int:
    if _check(a) == 0:
        raise ZeroDivisionError("0 has no inverse in GF(16)")
    return EXP[(ORDER - LOG[a]) % ORDER]


def div(a: int, b: int) -> int:
    return mul(a, inv(b))


def alpha_pow(i: int) -> int:
    return EXP[i % ORDER]


def power(a: int, e: int) -> int:
    if _check(a) == 0:
        if e == 0:
            return 1
        if e < 0:
            raise ZeroDivisionError("0 has no inverse in GF(16)")
        return 0
    return EXP[(LOG[a] * e) % ORDER]


# Unchecked lookup for hot loops: MUL[a][b] == mul(a, b).
MUL = [[mul(a, b) for b in range(16)] for a in range(16)]
MUL_TABLE = np.array(MUL, dtype=np.uint8)


def poly_add(p: list[int], q: list[int]) -> list[int]:
    n = max(len(p), len(q))
    p = [0] * (n - len(p)) + list(p)
    q = [0] * (n - len(q)) + list(q)
    return [a ^ b for a, b in zip(p, q)]


def poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] ^= MUL[a][b]
    return out


def poly_scale(p: list[int], c: int) -> list[int]:
    return [mul(a, c) for a in p]


def poly_eval(p: list[int], x: int) -> int:
    row = MUL[x]
    y = 0
    for a in p:
        y = row[y] ^ a
    return y


def poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Long division; ``den`` must have a nonzero leading coefficient."""
    if not den or den[0] == 0:
        raise ValueError("divisor must have a nonzero leading coefficient")
    out = list(num)
    lead_inv = inv(den[0])
    steps = len(num) - len(den) + 1
    if steps <= 0:
        return [0], out
    for i in range(steps):
        coef = mul(out[i], lead_inv)
        out[i] = coef
        if coef:
            for j in range(1, len(den)):
                out[i + j] ^= MUL[den[j]][coef]
    sep = steps
    return out[:sep], out[sep:]
