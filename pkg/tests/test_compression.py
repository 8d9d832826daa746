import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from magrand.compression import (
    MIN_MATCH,
    ReferenceCompressor,
    ZlibCompressor,
    compress,
    decompress,
    gamma_decode,
    gamma_encode,
    gamma_len,
    lz_decode,
    lz_encode,
    rle_decode,
    rle_encode,
)
from magrand.errors import FormatError

bitstrings = st.lists(st.integers(0, 1), max_size=600).map(lambda b: np.array(b, dtype=np.uint8))


def structured(draw_kind: int, n: int, rng) -> np.ndarray:
    if draw_kind == 0:
        return np.resize(rng.integers(0, 2, rng.integers(1, 40), dtype=np.uint8), n)
    if draw_kind == 1:
        return (rng.random(n) < 0.05).astype(np.uint8)
    return np.repeat(rng.integers(0, 2, n // 8 + 1, dtype=np.uint8), 8)[:n]


@pytest.mark.parametrize("k, code", [(1, "1"), (2, "010"), (5, "00101"), (100, "0000001100100")])
def test_gamma_codes(k, code):
    out = bytearray()
    gamma_encode(k, out)
    assert "".join(map(str, out)) == code
    assert gamma_len(k) == len(code)
    assert gamma_decode(bytes(out), 0) == (k, len(code))


def test_gamma_truncated():
    with pytest.raises(FormatError):
        gamma_decode(bytes([0, 0, 1, 0]), 0)
    with pytest.raises(ValueError):
        gamma_encode(0, bytearray())


def test_hundred_zeros_exact_code():
    # raw-escape flag 1, stage flag 0 (no LZ), first symbol 0, gamma(100)
    expected = [1, 0, 0] + [int(c) for c in "0000001100100"]
    code = compress(np.zeros(100, dtype=np.uint8))
    assert code.tolist() == expected
    assert len(code) < 30


def test_incompressible_costs_one_flag_bit():
    rng = np.random.default_rng(5)
    for n in (0, 1, 7, 100, 5000):
        x = rng.integers(0, 2, n, dtype=np.uint8)
        assert len(compress(x)) <= n + 1


def test_round_trip_random_strings():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        x = rng.integers(0, 2, rng.integers(0, 400), dtype=np.uint8)
        assert np.array_equal(decompress(compress(x), len(x)), x)


@settings(max_examples=200, deadline=None)
@given(bitstrings)
def test_round_trip_property(x):
    assert np.array_equal(decompress(compress(x), len(x)), x)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2), st.integers(1, 4000), st.integers(0, 2**32))
def test_round_trip_structured(kind, n, seed):
    x = structured(kind, n, np.random.default_rng(seed))
    code = compress(x)
    assert np.array_equal(decompress(code, n), x)


def test_stage_round_trips():
    rng = np.random.default_rng(9)
    x = bytes(np.resize(rng.integers(0, 2, 23, dtype=np.uint8), 3000))
    rle = rle_encode(x)
    assert rle_decode(bytes(rle), 0, len(x)) == (bytearray(x), len(rle))
    lz = lz_encode(bytes(rle))
    assert lz_decode(bytes(lz), 0, len(rle)) == (rle, len(lz))
    assert len(lz) < len(rle) // 4


def test_lz_respects_minimum_match():
    s = bytes([0, 1] * 4)  # shorter than MIN_MATCH: literals only
    assert len(s) < MIN_MATCH
    assert lz_encode(s)[0] == 0


def test_compression_is_deterministic():
    x = np.resize(np.array([1, 0, 0, 1, 1], dtype=np.uint8), 2000)
    assert np.array_equal(compress(x), compress(x.copy()))


@pytest.mark.parametrize("code, n", [([], 3), ([0, 1, 1], 3), ([1, 0, 0, 1, 0], 2), ([1, 0, 0, 1, 1], 1)])
def test_decompress_rejects_malformed(code, n):
    with pytest.raises(FormatError):
        decompress(np.array(code, dtype=np.uint8), n)


def test_compressor_interface():
    x = np.zeros(1000, dtype=np.uint8)
    ref = ReferenceCompressor()
    assert ref.compressed_length(x) == len(compress(x))
    z = ZlibCompressor()
    assert z.compressed_length(x) < 200
    assert z.compressor_id.startswith("zlib")
