"""Reference bit-level compressor used for deficiency certificates.

Output layout (all fields are bits, gamma = Elias gamma)::

    0 <x>                           raw escape, |x| + 1 bits
    1 0 <rle>                       run-length stage only
    1 1 gamma(|rle|+1) <lz tokens>  run-length stage then LZ77 pass

``rle`` is the first symbol of ``x`` followed by gamma-coded run lengths.
LZ tokens are literal runs ``0 gamma(k) <k bits>`` or back references
``1 gamma(offset) gamma(length - MIN_MATCH + 1)``.  The decoder is told the
raw length ``n``; the code is not self-delimiting about ``n`` by design,
since certificates condition on the number of composite vertices.

Encoding is deterministic: identical input gives identical output.
"""

from __future__ import annotations

from typing import Protocol
import zlib

import numpy as np

from .errors import FormatError

MIN_MATCH = 16
WINDOW = 1 << 16
CHAIN = 8


def gamma_len(k: int) -> int:
    return 2 * k.bit_length() - 1


def gamma_encode(k: int, out: bytearray) -> None:
    if k < 1:
        raise ValueError(f"Elias gamma needs k >= 1, got {k}")
    nb = k.bit_length()
    out.extend(b"\x00" * (nb - 1))
    out.extend((k >> s) & 1 for s in range(nb - 1, -1, -1))


def gamma_decode(bits: bytes, pos: int) -> tuple[int, int]:
    z = 0
    n = len(bits)
    while pos < n and bits[pos] == 0:
        z += 1
        pos += 1
    if pos + z + 1 > n:
        raise FormatError("truncated gamma code")
    k = 0
    for s in bits[pos:pos + z + 1]:
        k = (k << 1) | s
    return k, pos + z + 1


def _as_bytes(x) -> bytes:
    arr = np.asarray(x, dtype=np.uint8)
    if arr.size and arr.max() > 1:
        raise ValueError("bitstring entries must be 0 or 1")
    return arr.tobytes()


# -- run-length stage -------------------------------------------------------

def rle_encode(x: bytes) -> bytearray:
    out = bytearray()
    if not x:
        return out
    arr = np.frombuffer(x, dtype=np.uint8)
    edges = np.flatnonzero(np.diff(arr)) + 1
    runs = np.diff(np.concatenate(([0], edges, [len(arr)])))
    out.append(x[0])
    for r in runs.tolist():
        gamma_encode(r, out)
    return out


def rle_decode(bits: bytes, pos: int, n: int) -> tuple[bytearray, int]:
    out = bytearray()
    if n == 0:
        return out, pos
    if pos >= len(bits):
        raise FormatError("truncated run-length stream")
    sym = bits[pos]
    pos += 1
    while len(out) < n:
        run, pos = gamma_decode(bits, pos)
        if len(out) + run > n:
            raise FormatError("run lengths overshoot the declared length")
        out.extend(bytes([sym]) * run)
        sym ^= 1
    return out, pos


# -- LZ77 stage ---------------------------------------------------------------

def _extend(s: bytes, p: int, i: int, m: int) -> int:
    """Length of the common run of s[p:] and s[i:], p < i, capped at m - i."""
    limit = m - i
    length = 0
    step = 256
    while length + step <= limit and s[p + length:p + length + step] == s[i + length:i + length + step]:
        length += step
    while length < limit and s[p + length] == s[i + length]:
        length += 1
    return length


def lz_encode(s: bytes) -> bytearray:
    out = bytearray()
    m = len(s)
    table: dict[bytes, list[int]] = {}
    lit_start = 0
    i = 0

    def flush(end: int) -> None:
        if end > lit_start:
            out.append(0)
            gamma_encode(end - lit_start, out)
            out.extend(s[lit_start:end])

    def insert(pos: int) -> None:
        if pos + MIN_MATCH <= m:
            table.setdefault(s[pos:pos + MIN_MATCH], []).append(pos)

    while i < m:
        best_len = best_off = 0
        if i + MIN_MATCH <= m:
            for p in reversed(table.get(s[i:i + MIN_MATCH], [])[-CHAIN:]):
                if i - p > WINDOW:
                    break
                length = _extend(s, p, i, m)
                if length > best_len:
                    best_len, best_off = length, i - p
        if best_len >= MIN_MATCH and 1 + gamma_len(best_off) + gamma_len(best_len - MIN_MATCH + 1) < best_len:
            flush(i)
            out.append(1)
            gamma_encode(best_off, out)
            gamma_encode(best_len - MIN_MATCH + 1, out)
            for q in range(i, i + best_len):
                insert(q)
            i += best_len
            lit_start = i
        else:
            insert(i)
            i += 1
    flush(m)
    return out


def lz_decode(bits: bytes, pos: int, m: int) -> tuple[bytearray, int]:
    out = bytearray()
    while len(out) < m:
        if pos >= len(bits):
            raise FormatError("truncated LZ token stream")
        tag = bits[pos]
        pos += 1
        if tag == 0:
            k, pos = gamma_decode(bits, pos)
            if pos + k > len(bits):
                raise FormatError("truncated literal run")
            out.extend(bits[pos:pos + k])
            pos += k
        else:
            off, pos = gamma_decode(bits, pos)
            length, pos = gamma_decode(bits, pos)
            length += MIN_MATCH - 1
            start = len(out) - off
            if start < 0:
                raise FormatError("back reference before start of stream")
            for q in range(length):
                out.append(out[start + q])
    if len(out) != m:
        raise FormatError("LZ stream overshoots the declared length")
    return out, pos


# -- full pipeline ------------------------------------------------------------

def _compress_bytes(x: bytes) -> bytearray:
    rle = rle_encode(x)
    staged = bytearray(b"\x01\x00") + rle
    lz = bytearray(b"\x01\x01")
    gamma_encode(len(rle) + 1, lz)
    lz += lz_encode(bytes(rle))
    if len(lz) < len(staged):
        staged = lz
    if len(staged) < len(x) + 1:
        return staged
    return bytearray(b"\x00") + x


def compress(x) -> np.ndarray:
    """Compress a 0/1 bitstring; never longer than ``len(x) + 1`` bits."""
    return np.frombuffer(bytes(_compress_bytes(_as_bytes(x))), dtype=np.uint8).copy()


def decompress(code, n: int) -> np.ndarray:
    """Invert :func:`compress` given the raw length ``n``."""
    y = _as_bytes(code)
    if not y:
        raise FormatError("empty code")
    if y[0] == 0:
        if len(y) != n + 1:
            raise FormatError(f"raw code carries {len(y) - 1} bits, expected {n}")
        out = y[1:]
        end = len(y)
    else:
        if len(y) < 2:
            raise FormatError("truncated stage flag")
        if y[1] == 0:
            out, end = rle_decode(y, 2, n)
        else:
            m_plus, pos = gamma_decode(y, 2)
            rle, pos = lz_decode(y, pos, m_plus - 1)
            out, used = rle_decode(bytes(rle), 0, n)
            if used != len(rle):
                raise FormatError("run-length stream has trailing bits")
            end = pos
    if end != len(y):
        raise FormatError(f"{len(y) - end} trailing bits after code")
    return np.frombuffer(bytes(out), dtype=np.uint8).copy()


class Compressor(Protocol):
    compressor_id: str

    def compressed_length(self, bits: np.ndarray) -> int: ...


class ReferenceCompressor:
    compressor_id = f"magrand-rle-gamma-lz77/1 (min_match={MIN_MATCH}, window={WINDOW}, chain={CHAIN})"

    def compressed_length(self, bits) -> int:
        return len(_compress_bytes(_as_bytes(bits)))


class ZlibCompressor:
    """zlib on the byte-packed string, plus the same 1-bit raw escape."""

    def __init__(self, level: int = 9):
        self.level = level
        self.compressor_id = f"zlib-{zlib.ZLIB_RUNTIME_VERSION}/level={level}"

    def compressed_length(self, bits) -> int:
        arr = np.asarray(bits, dtype=np.uint8)
        packed = np.packbits(arr, bitorder="little").tobytes()
        return min(arr.size, 8 * len(zlib.compress(packed, self.level))) + 1
