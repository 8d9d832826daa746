"""Characteristic bitstrings and the ``.magc`` file format.

A ``.magc`` file is a short ASCII header followed by a payload::

    MAGC 1
    p 2
    tau 8 16
    time-aspect 2
    payload bits
    <blank line>
    <C(N,2) bits packed little-endian-bit-in-byte, zero padded>

or, for human inspection, ``payload edges`` followed by ``m <count>`` and
one edge per line as ``c1 ... cp | c1' ... cp'``.
"""

from __future__ import annotations

from math import prod

import numpy as np

from .core import (
    DEFAULT_MAX_COMPOSITE,
    CompositeEdge,
    Mag,
    MagSignature,
    composite_vertex_from_index,
    composite_vertex_index,
)
from .errors import FormatError, MagError
from .pairs import pair_from_index, pair_index

__all__ = [
    "pair_index",
    "pair_from_index",
    "characteristic_string",
    "mag_from_characteristic",
    "serialize",
    "deserialize",
    "MAGIC",
]

MAGIC = b"MAGC 1"


def characteristic_string(g: Mag) -> np.ndarray:
    return g.bits.copy()


def mag_from_characteristic(sig: MagSignature, bits) -> Mag:
    arr = np.asarray(bits)
    if arr.ndim != 1 or arr.shape[0] != sig.n_pairs:
        raise FormatError(
            f"bitstring length {arr.size} does not match C({sig.n_composite}, 2) = {sig.n_pairs}"
        )
    return Mag(sig, arr)


def _header(sig: MagSignature, payload: str) -> bytes:
    ta = "none" if sig.time_aspect is None else str(sig.time_aspect)
    lines = [
        MAGIC.decode(),
        f"p {sig.order}",
        "tau " + " ".join(str(t) for t in sig.aspect_sizes),
        f"time-aspect {ta}",
        f"payload {payload}",
    ]
    return ("\n".join(lines) + "\n").encode("ascii")


def serialize(g: Mag, payload: str = "bits") -> bytes:
    sig = g.signature
    if payload == "bits":
        packed = np.packbits(g.bits, bitorder="little").tobytes()
        return _header(sig, "bits") + b"\n" + packed
    if payload == "edges":
        out = [_header(sig, "edges"), f"m {g.n_edges}\n".encode()]
        for e in g.edges():
            left = " ".join(map(str, e.a))
            right = " ".join(map(str, e.b))
            out.append(f"{left} | {right}\n".encode())
        return b"".join(out)
    raise ValueError(f"unknown payload kind {payload!r}")


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def line(self, what: str) -> tuple[str, int]:
        start = self.pos
        end = self.data.find(b"\n", start)
        if end < 0:
            raise FormatError(f"truncated header: expected {what}", start)
        self.pos = end + 1
        try:
            return self.data[start:end].decode("ascii"), start
        except UnicodeDecodeError:
            raise FormatError(f"non-ASCII header line, expected {what}", start) from None

    def keyed(self, key: str) -> tuple[list[str], int]:
        text, at = self.line(f"'{key}' line")
        parts = text.split()
        if not parts or parts[0] != key:
            raise FormatError(f"expected '{key}' line, found {text!r}", at)
        return parts[1:], at


def _ints(fields: list[str], at: int, what: str) -> list[int]:
    try:
        vals = [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"non-integer {what}: {' '.join(fields)!r}", at) from None
    return vals


def deserialize(data: bytes, max_composite: int | None = None) -> Mag:
    if not data:
        raise FormatError("empty input", 0)
    if not data.startswith(MAGIC + b"\n"):
        raise FormatError("bad magic, expected 'MAGC 1'", 0)
    r = _Reader(data)
    r.line("magic")

    fields, at = r.keyed("p")
    if len(fields) != 1:
        raise FormatError("'p' takes one value", at)
    (p,) = _ints(fields, at, "order")
    if p < 1:
        raise FormatError("order must be positive", at)

    fields, at = r.keyed("tau")
    tau = _ints(fields, at, "aspect sizes")
    if len(tau) != p:
        raise FormatError(f"declared order {p} but {len(tau)} aspect sizes", at)
    if any(t < 1 for t in tau):
        raise FormatError("aspect sizes must be positive", at)
    ceiling = DEFAULT_MAX_COMPOSITE if max_composite is None else max_composite
    if prod(tau) > ceiling:
        raise FormatError(f"aspect-size overflow: {prod(tau)} composite vertices > {ceiling}", at)

    fields, at = r.keyed("time-aspect")
    if len(fields) != 1:
        raise FormatError("time-aspect takes one value", at)
    ta: int | None = None if fields[0] == "none" else _ints(fields, at, "time aspect")[0]
    try:
        sig = MagSignature(tuple(tau), time_aspect=ta, max_composite=ceiling)
    except MagError as exc:
        raise FormatError(str(exc), at) from None

    fields, at = r.keyed("payload")
    kind = fields[0] if len(fields) == 1 else None
    if kind == "bits":
        return _read_bits(r, sig)
    if kind == "edges":
        return _read_edges(r, sig)
    raise FormatError(f"unknown payload kind {' '.join(fields)!r}", at)


def _read_bits(r: _Reader, sig: MagSignature) -> Mag:
    blank, at = r.line("blank separator")
    if blank:
        raise FormatError("expected blank line before bit payload", at)
    n_bits = sig.n_pairs
    need = (n_bits + 7) // 8
    body = r.data[r.pos:]
    if len(body) < need:
        raise FormatError(
            f"truncated payload: {len(body)} of {need} bytes for {n_bits} bits", r.pos + len(body)
        )
    if len(body) > need:
        raise FormatError(f"{len(body) - need} trailing bytes after payload", r.pos + need)
    bits = np.unpackbits(np.frombuffer(body, dtype=np.uint8), bitorder="little")
    if bits[n_bits:].any():
        raise FormatError("nonzero padding bits", r.pos + need - 1)
    return Mag(sig, bits[:n_bits])


def _read_edges(r: _Reader, sig: MagSignature) -> Mag:
    fields, at = r.keyed("m")
    if len(fields) != 1:
        raise FormatError("'m' takes one count", at)
    (m,) = _ints(fields, at, "edge count")
    n = sig.n_composite
    bits = np.zeros(sig.n_pairs, dtype=np.uint8)
    for _ in range(m):
        text, at = r.line("edge line")
        left, sep, right = text.partition("|")
        if not sep:
            raise FormatError(f"edge line missing '|': {text!r}", at)
        u = _ints(left.split(), at, "coordinate")
        v = _ints(right.split(), at, "coordinate")
        try:
            e = CompositeEdge.make(u, v, sig)
        except MagError as exc:
            raise FormatError(str(exc), at) from None
        a, b = composite_vertex_index(e.a, sig), composite_vertex_index(e.b, sig)
        bits[pair_index(a, b, n)] = 1
    if r.pos != len(r.data):
        raise FormatError("trailing data after edge list", r.pos)
    return Mag(sig, bits)


def edge_from_pair(k: int, sig: MagSignature) -> CompositeEdge:
    a, b = pair_from_index(k, sig.n_composite)
    return CompositeEdge(composite_vertex_from_index(a, sig), composite_vertex_from_index(b, sig))

