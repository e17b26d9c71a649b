import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vlcisl.fec import gf16, rs_decode, rs_encode, rs_generator
from vlcisl.fec import reed_solomon as rs

from test_gf16 import slow_mul

RS11, RS13 = rs_generator(15, 11), rs_generator(15, 13)
CODES = [RS11, RS13]


def slow_inv(a):
    return next(b for b in range(1, 16) if slow_mul(a, b) == 1)


def long_division_remainder(num, den):
    # schoolbook division, independent of the library's table arithmetic
    num = list(num)
    lead_inv = slow_inv(den[0])
    for i in range(len(num) - len(den) + 1):
        coef = slow_mul(num[i], lead_inv)
        for j, d in enumerate(den):
            num[i + j] ^= slow_mul(coef, d)
    return num[-(len(den) - 1):]


def test_generators():
    assert RS11.generator == (1, 13, 12, 8, 7)
    assert RS13.generator == (1, 6, 8)
    assert (RS11.t, RS13.t) == (2, 1)
    assert RS11.label == "RS(15,11)" and RS11.rate == pytest.approx(11 / 15)


@pytest.mark.parametrize("code", CODES, ids=lambda c: c.label)
def test_generator_roots(code):
    for i in range(1, code.parity_len + 1):
        assert gf16.poly_eval(list(code.generator), gf16.alpha_pow(i)) == 0


@pytest.mark.parametrize("code", CODES, ids=lambda c: c.label)
def test_generator_divides_x15_minus_1(code):
    assert rs.divides_x15_minus_1(code)
    assert not any(long_division_remainder([1] + [0] * 14 + [1], code.generator))


def test_unsupported_code():
    with pytest.raises(ValueError):
        rs_generator(15, 9)
    with pytest.raises(ValueError):
        rs_generator(7, 5)


@pytest.mark.parametrize("code", CODES, ids=lambda c: c.label)
def test_zero_message(code):
    assert rs_encode(code, [0] * code.k) == [0] * 15


def test_unit_message_long_division():
    msg = [1] + [0] * 10
    parity = rs_encode(RS11, msg)[11:]
    assert parity == long_division_remainder(msg + [0] * 4, RS11.generator)
    assert parity == [6, 8, 14, 5]


@pytest.mark.parametrize("code", CODES, ids=lambda c: c.label)
@settings(max_examples=200)
@given(data=st.data())
def test_codeword_divisible_by_generator(code, data):
    msg = data.draw(st.lists(st.integers(0, 15), min_size=code.k, max_size=code.k))
    cw = rs_encode(code, msg)
    assert cw[:code.k] == msg
    _, rem = gf16.poly_divmod(cw, list(code.generator))
    assert not any(rem)
    assert not any(rs.syndromes(code, cw))


def test_encode_rejects_bad_input():
    with pytest.raises(ValueError):
        rs_encode(RS11, [0] * 10)
    with pytest.raises(ValueError):
        rs_encode(RS11, [16] + [0] * 10)


@pytest.mark.parametrize("code", CODES, ids=lambda c: c.label)
def test_clean_decode(code):
    msg = list(range(code.k))
    res = rs_decode(code, rs_encode(code, msg))
    assert res == (msg, 0, True)


@pytest.mark.parametrize("code", CODES, ids=lambda c: c.label)
def test_every_single_error(code):
    rng = np.random.default_rng(11)
    for _ in range(20):
        msg = rng.integers(0, 16, code.k).tolist()
        cw = rs_encode(code, msg)
        for pos in range(15):
            for mag in range(1, 16):
                r = list(cw)
                r[pos] ^= mag
                res = rs_decode(code, r)
                assert res.ok and res.message == msg and res.corrected == 1


@pytest.mark.parametrize("code", CODES, ids=lambda c: c.label)
@settings(max_examples=300)
@given(data=st.data())
def test_roundtrip_up_to_t_errors(code, data):
    msg = data.draw(st.lists(st.integers(0, 15), min_size=code.k, max_size=code.k))
    n_err = data.draw(st.integers(0, code.t))
    pos = data.draw(st.lists(st.integers(0, 14), min_size=n_err, max_size=n_err, unique=True))
    r = rs_encode(code, msg)
    for p in pos:
        r[p] ^= data.draw(st.integers(1, 15))
    res = rs_decode(code, r)
    assert res.ok and res.message == msg and res.corrected == n_err


def test_rs13_two_errors_never_silently_certain():
    rng = np.random.default_rng(5)
    miscorrected = failed = 0
    for _ in range(3000):
        msg = rng.integers(0, 16, 13).tolist()
        r = rs_encode(RS13, msg)
        for p in rng.choice(15, 2, replace=False):
            r[p] ^= int(rng.integers(1, 16))
        res = rs_decode(RS13, r)
        assert not (res.ok and res.message == msg and res.corrected == 2)
        if res.ok:
            # a miscorrection lands on a different codeword one symbol away
            assert res.message != msg and res.corrected == 1
            miscorrected += 1
        else:
            assert res.message == r[:13]
            failed += 1
    assert miscorrected > 0 and failed > 0


def test_batch_helpers_agree_with_scalar():
    rng = np.random.default_rng(3)
    for code in CODES:
        msgs = rng.integers(0, 16, (200, code.k), dtype=np.uint8)
        cw = rs.encode_batch(code, msgs)
        assert cw.tolist() == [rs_encode(code, m) for m in msgs.tolist()]
        noisy = cw.copy()
        noisy[::3, 4] ^= 7
        synd = rs.syndromes_batch(code, noisy)
        assert synd.tolist() == [rs.syndromes(code, w) for w in noisy.tolist()]
        decoded, failures = rs.decode_batch(code, noisy)
        assert failures == 0 and np.array_equal(decoded, msgs)
