"""MultiAspect Graph types: signatures, composite vertices, frozen graphs.

Composite vertices are plain tuples of per-aspect coordinates, aspect 1
first.  They are labeled by a mixed-radix index with aspect 1 varying
fastest, so every slice of fixed aspect-``h`` coordinate is a union of
contiguous index blocks of size ``prod(tau[:h-1])``.

Aspects are numbered from 1, as in the MAG literature: aspect 1 is the
vertex set, aspect 2 is time by default, later aspects are layers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import Iterable, Iterator, NamedTuple, Sequence

import numpy as np

from .errors import (
    ConfigError,
    InvalidAspectError,
    InvalidVertexError,
    MagError,
    OutOfRangeError,
    SelfLoopError,
)
from .pairs import pair_arrays, pair_count, pair_index

CompositeVertex = tuple[int, ...]

DEFAULT_MAX_COMPOSITE = 2**16


@dataclass(frozen=True)
class MagSignature:
    """Ordered aspect sizes ``(tau_1, ..., tau_p)``.

    ``time_aspect`` defaults to 2 whenever the order is at least 2; pass
    ``None`` explicitly for a signature without a time aspect.
    """

    aspect_sizes: tuple[int, ...]
    time_aspect: int | None | str = "auto"
    max_composite: int = field(default=DEFAULT_MAX_COMPOSITE, compare=False, repr=False)

    def __post_init__(self):
        sizes = tuple(int(t) for t in self.aspect_sizes)
        object.__setattr__(self, "aspect_sizes", sizes)
        if not sizes:
            raise ConfigError("a MAG needs at least one aspect")
        if any(t < 1 for t in sizes):
            raise ConfigError(f"aspect sizes must be positive, got {sizes}")
        n = prod(sizes)
        if n > self.max_composite:
            raise ConfigError(
                f"{n} composite vertices exceeds the ceiling of {self.max_composite}"
            )
        ta = self.time_aspect
        if ta == "auto":
            ta = 2 if len(sizes) >= 2 else None
        elif ta is not None:
            ta = int(ta)
            if not 2 <= ta <= len(sizes):
                raise InvalidAspectError(
                    f"time aspect must lie in [2, {len(sizes)}], got {ta}"
                )
        object.__setattr__(self, "time_aspect", ta)

    @property
    def order(self) -> int:
        return len(self.aspect_sizes)

    @cached_property
    def n_composite(self) -> int:
        return prod(self.aspect_sizes)

    @cached_property
    def n_pairs(self) -> int:
        return pair_count(self.n_composite)

    @property
    def _index_dtype(self):
        return np.int32 if self.n_composite < 2**31 else np.int64

    @cached_property
    def _radix(self) -> tuple[np.ndarray, np.ndarray]:
        strides = [1]
        for t in self.aspect_sizes[:-1]:
            strides.append(strides[-1] * t)
        dtype = self._index_dtype
        return np.array(self.aspect_sizes, dtype=dtype), np.array(strides, dtype=dtype)

    def stride(self, h: int) -> int:
        """Index distance between consecutive coordinates of aspect ``h``."""
        self.check_aspect(h, allow_vertex=True)
        return prod(self.aspect_sizes[: h - 1])

    def check_aspect(self, h: int, allow_vertex: bool = False) -> None:
        lo = 1 if allow_vertex else 2
        if not lo <= h <= self.order:
            raise InvalidAspectError(
                f"aspect {h} outside [{lo}, {self.order}] for signature {self.aspect_sizes}"
            )

    def aspect_kind(self, h: int) -> str:
        self.check_aspect(h, allow_vertex=True)
        if h == 1:
            return "vertex"
        return "time" if h == self.time_aspect else "layer"

    def aspect_coords(self, h: int) -> np.ndarray:
        """Aspect-``h`` coordinate of every composite index, as an array."""
        self.check_aspect(h, allow_vertex=True)
        idx = np.arange(self.n_composite, dtype=np.int64)
        return idx // self.stride(h) % self.aspect_sizes[h - 1]


def check_vertex(v: Sequence[int], sig: MagSignature) -> CompositeVertex:
    v = tuple(v)
    if len(v) != sig.order:
        raise InvalidVertexError(f"vertex {v} has {len(v)} coordinates, expected {sig.order}")
    for c, t in zip(v, sig.aspect_sizes):
        if not 0 <= c < t:
            raise InvalidVertexError(f"vertex {v} out of range for aspects {sig.aspect_sizes}")
    return tuple(int(c) for c in v)


def composite_vertex_index(v: Sequence[int], sig: MagSignature) -> int:
    v = check_vertex(v, sig)
    idx = 0
    for c, t in zip(reversed(v), reversed(sig.aspect_sizes)):
        idx = idx * t + c
    return idx


def composite_vertex_from_index(i: int, sig: MagSignature) -> CompositeVertex:
    if not 0 <= i < sig.n_composite:
        raise OutOfRangeError(f"composite index {i} outside [0, {sig.n_composite})")
    coords = []
    for t in sig.aspect_sizes:
        i, c = divmod(i, t)
        coords.append(c)
    return tuple(coords)


def composite_indices(coords, sig: MagSignature) -> np.ndarray:
    """Vectorized :func:`composite_vertex_index` over rows of an ``(M, p)`` array."""
    coords = np.asarray(coords).reshape(-1, sig.order)
    sizes, strides = sig._radix
    if coords.size and (coords.min() < 0 or (coords.max(axis=0) >= sizes).any()):
        raise InvalidVertexError(f"coordinates out of range for aspects {sig.aspect_sizes}")
    return coords.astype(sizes.dtype, copy=False) @ strides


def composite_coords(indices, sig: MagSignature) -> np.ndarray:
    """Vectorized :func:`composite_vertex_from_index`; returns an ``(M, p)`` array."""
    idx = np.asarray(indices).ravel()
    if idx.size and not (0 <= idx.min() and idx.max() < sig.n_composite):
        raise OutOfRangeError(f"composite index outside [0, {sig.n_composite})")
    dtype = sig._index_dtype
    out = np.empty((sig.order, idx.size), dtype=dtype)
    q = idx.astype(dtype)
    # one scalar divisor per aspect is much faster than broadcasting a divisor array
    for j, t in enumerate(sig.aspect_sizes):
        q, out[j] = np.divmod(q, t)
    return out.T


class CompositeEdge(NamedTuple):
    """Undirected composite edge, stored with ``index(a) < index(b)``."""

    a: CompositeVertex
    b: CompositeVertex

    @classmethod
    def make(cls, u: Sequence[int], v: Sequence[int], sig: MagSignature) -> "CompositeEdge":
        u, v = check_vertex(u, sig), check_vertex(v, sig)
        iu, iv = composite_vertex_index(u, sig), composite_vertex_index(v, sig)
        if iu == iv:
            raise SelfLoopError(f"simple MAGs have no self-loops: {u}")
        return cls(u, v) if iu < iv else cls(v, u)


class Mag:
    """Frozen simple MAG: a signature plus the characteristic bitstring of
    its edge set over the colex pair space.

    ``bits`` is a read-only ``uint8`` array of 0/1 values of length
    ``N(N-1)/2``.  Use :class:`MagBuilder` to accumulate edges.
    """

    def __init__(self, signature: MagSignature, bits):
        arr = np.asarray(bits)
        if arr.ndim != 1 or arr.shape[0] != signature.n_pairs:
            raise MagError(
                f"bitstring of length {arr.size} does not match C({signature.n_composite}, 2)"
                f" = {signature.n_pairs}"
            )
        if arr.size and (arr.min() < 0 or arr.max() > 1):
            raise MagError("bitstring entries must be 0 or 1")
        arr = arr.astype(np.uint8, copy=True)
        arr.flags.writeable = False
        self.signature = signature
        self.bits = arr

    @classmethod
    def empty(cls, sig: MagSignature) -> "Mag":
        return cls(sig, np.zeros(sig.n_pairs, dtype=np.uint8))

    @classmethod
    def complete(cls, sig: MagSignature) -> "Mag":
        return cls(sig, np.ones(sig.n_pairs, dtype=np.uint8))

    @classmethod
    def from_edges(cls, sig: MagSignature, edges: Iterable[tuple[Sequence[int], Sequence[int]]]) -> "Mag":
        b = MagBuilder(sig)
        for u, v in edges:
            b.add_edge(u, v)
        return b.freeze()

    @classmethod
    def from_index_edges(cls, sig: MagSignature, edges: Iterable[tuple[int, int]]) -> "Mag":
        n = sig.n_composite
        bits = np.zeros(sig.n_pairs, dtype=np.uint8)
        for a, b in edges:
            bits[pair_index(a, b, n)] = 1
        return cls(sig, bits)

    @property
    def n_composite(self) -> int:
        return self.signature.n_composite

    @property
    def n_edges(self) -> int:
        return int(self.bits.sum())

    def __eq__(self, other):
        if not isinstance(other, Mag):
            return NotImplemented
        return self.signature == other.signature and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.signature, self.bits.tobytes()))

    def __repr__(self):
        return f"Mag(tau={self.signature.aspect_sizes}, edges={self.n_edges})"

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Dense symmetric boolean adjacency matrix over composite indices."""
        n = self.n_composite
        a, b = pair_arrays(n)
        adj = np.zeros((n, n), dtype=bool)
        on = self.bits.astype(bool)
        adj[a[on], b[on]] = True
        adj[b[on], a[on]] = True
        adj.flags.writeable = False
        return adj

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency rows packed into Python ints (bit ``j`` of row ``i``)."""
        packed = np.packbits(self.adjacency, axis=1, bitorder="little")
        return tuple(int.from_bytes(row.tobytes(), "little") for row in packed)

    def edge_indices(self) -> list[tuple[int, int]]:
        a, b = pair_arrays(self.n_composite)
        on = self.bits.astype(bool)
        return list(zip(a[on].tolist(), b[on].tolist()))

    def edges(self) -> Iterator[CompositeEdge]:
        sig = self.signature
        for a, b in self.edge_indices():
            yield CompositeEdge(composite_vertex_from_index(a, sig), composite_vertex_from_index(b, sig))


class MagBuilder:
    """Single-writer accumulator; :meth:`freeze` yields an immutable :class:`Mag`."""

    def __init__(self, signature: MagSignature):
        self.signature = signature
        self._bits = np.zeros(signature.n_pairs, dtype=np.uint8)

    def add_edge(self, u: Sequence[int], v: Sequence[int]) -> "MagBuilder":
        sig = self.signature
        iu, iv = composite_vertex_index(u, sig), composite_vertex_index(v, sig)
        self._bits[pair_index(iu, iv, sig.n_composite)] = 1
        return self

    def add_index_edge(self, a: int, b: int) -> "MagBuilder":
        self._bits[pair_index(a, b, self.signature.n_composite)] = 1
        return self

    def freeze(self) -> Mag:
        return Mag(self.signature, self._bits)


def has_edge(g: Mag, u: Sequence[int], v: Sequence[int]) -> bool:
    sig = g.signature
    iu, iv = composite_vertex_index(u, sig), composite_vertex_index(v, sig)
    if iu == iv:
        raise SelfLoopError(f"self-loop query on {tuple(u)}: simple MAGs have no self-loops")
    return bool(g.bits[pair_index(iu, iv, sig.n_composite)])


def degree(g: Mag, v: Sequence[int]) -> int:
    i = composite_vertex_index(v, g.signature)
    return int(g.adjacency[i].sum())


def degrees(g: Mag) -> np.ndarray:
    return g.adjacency.sum(axis=1)


def relabel(g: Mag, perm: Sequence[int]) -> Mag:
    """Image of ``g`` under the composite-index permutation ``i -> perm[i]``."""
    perm = np.asarray(perm, dtype=np.int64)
    n = g.n_composite
    if sorted(perm.tolist()) != list(range(n)):
        raise MagError("not a permutation of the composite indices")
    a, b = pair_arrays(n)
    on = g.bits.astype(bool)
    pa, pb = perm[a[on]], perm[b[on]]
    lo, hi = np.minimum(pa, pb), np.maximum(pa, pb)
    bits = np.zeros(g.signature.n_pairs, dtype=np.uint8)
    bits[hi * (hi - 1) // 2 + lo] = 1
    return Mag(g.signature, bits)
