"""GF(16) arithmetic, RS(15,k) codecs and the 16-QAM Monte Carlo harness."""
from .reed_solomon import DecodeResult, RsCode, rs_decode, rs_encode, rs_generator

__all__ = ["DecodeResult", "RsCode", "rs_decode", "rs_encode", "rs_generator"]
