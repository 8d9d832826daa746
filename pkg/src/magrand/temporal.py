"""Transtemporal and crosslayer edges.

An edge is noncontiguous in aspect ``h`` when the aspect-``h`` coordinates
of its endpoints differ by at least 2.  Coordinates are linear, with no
wraparound between the last and first instant.  For ``h`` equal to the
signature's time aspect such an edge is transtemporal, otherwise
crosslayer.

For a query ``u, v`` whose aspect-``h`` coordinates satisfy ``j > i + 2``
a witness always exists when ``u`` and ``v`` are within distance 2: the
direct edge if present, otherwise one of the two edges through any common
neighbor ``w``, because the windows ``{i-1, i, i+1}`` and ``{j-1, j, j+1}``
are disjoint and ``w``'s coordinate misses at least one of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .core import (
    CompositeEdge,
    CompositeVertex,
    Mag,
    MagSignature,
    check_vertex,
    composite_vertex_from_index,
    composite_vertex_index,
)
from .errors import HypothesisViolation, NoWitnessError
from .pairs import pair_arrays

SIZE_THRESHOLD = 8
EXHAUSTIVE_LIMIT = 10**6
SAMPLE_SIZE = 10**5


def edge_kind(sig: MagSignature, h: int) -> str:
    sig.check_aspect(h)
    return "transtemporal" if h == sig.time_aspect else "crosslayer"


def is_noncontiguous_edge(e: CompositeEdge, sig: MagSignature, h: int) -> bool:
    sig.check_aspect(h)
    a, b = check_vertex(e[0], sig), check_vertex(e[1], sig)
    return abs(a[h - 1] - b[h - 1]) >= 2


def check_size_hypothesis(sig: MagSignature, h: int) -> bool:
    sig.check_aspect(h)
    return sig.aspect_sizes[h - 1] > SIZE_THRESHOLD


@dataclass(frozen=True)
class NoncontiguityQuery:
    u: CompositeVertex
    v: CompositeVertex
    aspect: int
    i: int
    j: int

    @classmethod
    def make(cls, u: Sequence[int], v: Sequence[int], sig: MagSignature, aspect: int | None = None) -> "NoncontiguityQuery":
        h = sig.time_aspect if aspect is None else aspect
        if h is None:
            raise HypothesisViolation("no aspect given and the signature has no time aspect")
        sig.check_aspect(h)
        u, v = check_vertex(u, sig), check_vertex(v, sig)
        i, j = u[h - 1], v[h - 1]
        if not j > i + 2:
            raise HypothesisViolation(
                f"aspect-{h} coordinates i={i}, j={j} violate j > i + 2"
            )
        return cls(u, v, h, i, j)


@dataclass(frozen=True)
class WitnessResult:
    edge: CompositeEdge
    kind: str  # "direct" or "via-intermediate"
    intermediate: CompositeVertex | None
    aspect: int

    def as_dict(self) -> dict:
        return {
            "edge": [list(self.edge.a), list(self.edge.b)],
            "kind": self.kind,
            "intermediate": None if self.intermediate is None else list(self.intermediate),
            "aspect": self.aspect,
        }


def find_noncontiguous_witness(g: Mag, q: NoncontiguityQuery) -> WitnessResult:
    sig = g.signature
    iu, iv = composite_vertex_index(q.u, sig), composite_vertex_index(q.v, sig)
    adj = g.adjacency
    if adj[iu, iv]:
        return WitnessResult(CompositeEdge.make(q.u, q.v, sig), "direct", None, q.aspect)
    common = np.flatnonzero(adj[iu] & adj[iv])
    if common.size == 0:
        raise NoWitnessError(
            f"{q.u} and {q.v} share no edge and no common neighbor (distance > 2)"
        )
    w = composite_vertex_from_index(int(common[0]), sig)
    z = w[q.aspect - 1]
    if abs(z - q.i) >= 2:
        edge = CompositeEdge.make(q.u, w, sig)
    else:
        edge = CompositeEdge.make(w, q.v, sig)
    return WitnessResult(edge, "via-intermediate", w, q.aspect)


class SnapshotLoss(NamedTuple):
    total_edges: int
    noncontiguous_edges: int
    fraction: float


def noncontiguous_pair_mask(sig: MagSignature, h: int) -> np.ndarray:
    sig.check_aspect(h)
    t = sig.aspect_coords(h)
    a, b = pair_arrays(sig.n_composite)
    return np.abs(t[a] - t[b]) >= 2


def snapshot_loss(g: Mag, h: int) -> SnapshotLoss:
    """Edges a per-instant snapshot sequence of aspect ``h`` cannot carry."""
    mask = noncontiguous_pair_mask(g.signature, h)
    total = g.n_edges
    nc = int(np.count_nonzero(g.bits.astype(bool) & mask))
    return SnapshotLoss(total, nc, nc / total if total else 0.0)


@dataclass(frozen=True)
class SweepOutcome:
    aspect: int
    kind: str
    query_space: int
    queries_checked: int
    sampled: bool
    direct: int
    via_intermediate: int
    failures: int
    min_offslice_common_neighbors: int | None
    endpoint_slice_vertices: int
    path_budget: float

    @property
    def witnesses_found(self) -> int:
        return self.direct + self.via_intermediate

    def as_dict(self) -> dict:
        return {
            "aspect": self.aspect,
            "kind": self.kind,
            "query_space": self.query_space,
            "queries_checked": self.queries_checked,
            "sampled": self.sampled,
            "witnesses_found": self.witnesses_found,
            "direct": self.direct,
            "via_intermediate": self.via_intermediate,
            "failures": self.failures,
            "min_offslice_common_neighbors": self.min_offslice_common_neighbors,
            "endpoint_slice_vertices": self.endpoint_slice_vertices,
            "path_budget": self.path_budget,
        }


def _query_blocks(sig: MagSignature, h: int) -> tuple[list[tuple[int, int]], np.ndarray]:
    tau = sig.aspect_sizes[h - 1]
    coords = sig.aspect_coords(h)
    slices = np.stack([np.flatnonzero(coords == t) for t in range(tau)])
    blocks = [(i, j) for i in range(tau) for j in range(i + 3, tau)]
    return blocks, slices


def sweep_queries(sig: MagSignature, h: int, limit: int = EXHAUSTIVE_LIMIT,
                  sample_size: int = SAMPLE_SIZE, seed: int = 0) -> tuple[np.ndarray, np.ndarray, int, bool]:
    """Composite-index arrays ``(U, V)`` of hypothesis-satisfying queries.

    All queries when there are at most ``limit``; otherwise a seeded uniform
    sample of ``sample_size`` distinct ones.
    """
    blocks, slices = _query_blocks(sig, h)
    s = slices.shape[1]
    total = len(blocks) * s * s
    if total <= limit:
        flat = np.arange(total, dtype=np.int64)
        sampled = False
    else:
        rng = np.random.default_rng(seed)
        flat = np.sort(rng.choice(total, size=sample_size, replace=False))
        sampled = True
    blk, rest = np.divmod(flat, s * s)
    ou, ov = np.divmod(rest, s)
    bi = np.array([b[0] for b in blocks], dtype=np.int64)
    bj = np.array([b[1] for b in blocks], dtype=np.int64)
    U = slices[bi[blk], ou] if total else flat
    V = slices[bj[blk], ov] if total else flat
    return U, V, total, sampled


def witness_sweep(g: Mag, h: int, limit: int = EXHAUSTIVE_LIMIT,
                  sample_size: int = SAMPLE_SIZE, seed: int = 0) -> SweepOutcome:
    """Search a witness for every hypothesis query in aspect ``h``.

    Mirrors :func:`find_noncontiguous_witness` in bulk.  A query fails when
    it has neither a direct edge nor a common neighbor, or when the
    reported edge is not noncontiguous.  Also records, per query, how many
    common neighbors lie outside the two endpoint slices.
    """
    sig = g.signature
    kind = edge_kind(sig, h)
    U, V, total, sampled = sweep_queries(sig, h, limit, sample_size, seed)
    adj = g.adjacency
    coords = sig.aspect_coords(h)
    n = sig.n_composite
    direct = via = failures = 0
    min_off: int | None = None
    chunk = max(1, (1 << 22) // max(n, 1))
    for lo in range(0, U.size, chunk):
        u, v = U[lo:lo + chunk], V[lo:lo + chunk]
        ci, cj = coords[u], coords[v]
        is_direct = adj[u, v]
        both = adj[u] & adj[v]
        has_common = both.any(axis=1)
        w = both.argmax(axis=1)
        cz = coords[w]
        ok_via = (np.abs(cz - ci) >= 2) | (np.abs(cz - cj) >= 2)
        direct += int(np.count_nonzero(is_direct))
        found_via = ~is_direct & has_common & ok_via
        via += int(np.count_nonzero(found_via))
        failures += int(np.count_nonzero(~is_direct & ~found_via))
        off = both & (coords[None, :] != ci[:, None]) & (coords[None, :] != cj[:, None])
        m = int(off.sum(axis=1).min())
        min_off = m if min_off is None else min(min_off, m)
    tau = sig.aspect_sizes[h - 1]
    return SweepOutcome(
        aspect=h,
        kind=kind,
        query_space=total,
        queries_checked=int(U.size),
        sampled=sampled,
        direct=direct,
        via_intermediate=via,
        failures=failures,
        min_offslice_common_neighbors=min_off,
        endpoint_slice_vertices=2 * n // tau,
        path_budget=n / 4,
    )
