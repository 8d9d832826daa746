"""Degree concentration, common neighbors, diameter, connectivity, rigidity."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .automorphism import DEFAULT_NODE_BUDGET, RigidityResult, is_rigid
from .core import Mag, composite_vertex_index, degrees
from .errors import MagError, SelfLoopError

INFINITE = math.inf


class DegreeConcentration(NamedTuple):
    max_deviation: float
    bound: float
    holds: bool


class ConnectivityBound(NamedTuple):
    value: int
    valid: bool  # False when diameter > 2: then it is not a connectivity bound


def _require_pairs(g: Mag) -> None:
    if g.n_composite < 2:
        raise MagError("topology measures need at least two composite vertices")


def degree_bound(n: int, c: float) -> float:
    return c * math.sqrt(n * math.log2(n))


def degree_concentration(g: Mag, c: float = 2.0) -> DegreeConcentration:
    _require_pairs(g)
    n = g.n_composite
    dev = float(np.abs(degrees(g) - (n - 1) / 2).max())
    bound = degree_bound(n, c)
    return DegreeConcentration(dev, bound, dev <= bound)


def common_neighbor_matrix(g: Mag) -> np.ndarray:
    # float32 BLAS product is exact for counts below 2**24
    a = g.adjacency.astype(np.float32)
    return (a @ a).astype(np.int64)


def common_neighbor_count(g: Mag, u: Sequence[int], v: Sequence[int]) -> int:
    iu = composite_vertex_index(u, g.signature)
    iv = composite_vertex_index(v, g.signature)
    if iu == iv:
        raise SelfLoopError("common neighbors of a vertex with itself are undefined here")
    adj = g.adjacency
    return int(np.count_nonzero(adj[iu] & adj[iv]))


def min_common_neighbors(g: Mag) -> int:
    _require_pairs(g)
    cn = common_neighbor_matrix(g)
    np.fill_diagonal(cn, np.iinfo(np.int64).max)
    return int(cn.min())


def path_budget(n: int) -> float:
    """Lower threshold for the common-neighbor minimum: ``N/4 - sqrt(N log2 N)``."""
    return n / 4 - math.sqrt(n * math.log2(n))


def composite_diameter(g: Mag) -> int | float:
    """Exact diameter by one breadth-first traversal per source over packed
    adjacency rows; ``INFINITE`` when the graph is disconnected."""
    _require_pairs(g)
    rows = g.neighbor_masks
    n = g.n_composite
    full = (1 << n) - 1
    diam = 0
    for s in range(n):
        seen = frontier = 1 << s
        depth = 0
        while True:
            reach = 0
            f = frontier
            while f:
                low = f & -f
                reach |= rows[low.bit_length() - 1]
                f ^= low
            frontier = reach & ~seen
            if not frontier:
                break
            seen |= frontier
            depth += 1
        if seen != full:
            return INFINITE
        diam = max(diam, depth)
    return diam


def connectivity_lower_bound(g: Mag, diameter: int | float | None = None) -> ConnectivityBound:
    """``min over pairs (common neighbors + direct edge)``.

    Every ``u``-``v`` separator meets each of these internally disjoint
    paths, so this bounds vertex connectivity whenever the diameter is at
    most 2.
    """
    _require_pairs(g)
    cn = common_neighbor_matrix(g) + g.adjacency
    np.fill_diagonal(cn, np.iinfo(np.int64).max)
    if diameter is None:
        diameter = composite_diameter(g)
    return ConnectivityBound(int(cn.min()), diameter <= 2)


@dataclass(frozen=True)
class TopologyReport:
    n_composite: int
    min_degree: int
    max_degree: int
    max_degree_deviation: float
    degree_bound: float
    degree_c: float
    min_common_neighbors: int
    diameter: int | None  # None when disconnected
    connected: bool
    connectivity_lb: int
    connectivity_lb_valid: bool
    rigidity: str
    is_rigid: bool | None
    rigidity_witness: list[int] | None
    rigidity_nodes: int
    # whether the cited k-connectivity notion is this disjoint-path count is not established
    connectivity_k_correspondence: str = "unconfirmed"

    def as_dict(self) -> dict:
        return asdict(self)


def topology_report(g: Mag, c_degree: float = 2.0, node_budget: int = DEFAULT_NODE_BUDGET) -> TopologyReport:
    _require_pairs(g)
    deg = degrees(g)
    conc = degree_concentration(g, c_degree)
    diam = composite_diameter(g)
    conn = connectivity_lower_bound(g, diam)
    rig: RigidityResult = is_rigid(g, node_budget)
    return TopologyReport(
        n_composite=g.n_composite,
        min_degree=int(deg.min()),
        max_degree=int(deg.max()),
        max_degree_deviation=conc.max_deviation,
        degree_bound=conc.bound,
        degree_c=c_degree,
        min_common_neighbors=min_common_neighbors(g),
        diameter=None if diam == INFINITE else int(diam),
        connected=diam != INFINITE,
        connectivity_lb=conn.value,
        connectivity_lb_valid=conn.valid,
        rigidity=rig.status,
        is_rigid=rig.rigid,
        rigidity_witness=None if rig.witness is None else list(rig.witness),
        rigidity_nodes=rig.nodes,
    )
