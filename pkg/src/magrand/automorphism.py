"""Exact rigidity test by individualization-refinement.

The search walks the pointwise stabilizer chain: at a partition ``pi``
with target cell ``C`` and first vertex ``v``, every automorphism fixing
the current prefix either moves ``v`` to some ``w`` in ``C`` or fixes it.
For each ``w`` the subtree rooted at "individualize ``w``" is searched
exhaustively for a leaf whose induced permutation (relative to the first
leaf under ``v``) preserves adjacency.  If none exists, ``v``'s orbit is
trivial and the search descends into ``v``'s branch.  A discrete
partition ends the chain: nothing but the identity fixes it.

Refinement is equitable-partition style but keys each vertex by an exact
integer sum of per-color weights over its neighbors.  Two distinct
neighbor-color multisets may collide, which only leaves the partition
coarser; the refinement stays isomorphism invariant, every candidate leaf
is checked against the adjacency matrix, so verdicts are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Mag

DEFAULT_NODE_BUDGET = 100_000

# weights < 2**40 keep sums over up to 2**16 neighbors inside int64
_WEIGHTS = np.random.default_rng(0x5EED).integers(1, 1 << 40, size=1 << 16, dtype=np.int64)


@dataclass(frozen=True)
class RigidityResult:
    status: str  # "rigid", "not-rigid" or "undecided"
    witness: tuple[int, ...] | None
    nodes: int

    @property
    def rigid(self) -> bool | None:
        if self.status == "undecided":
            return None
        return self.status == "rigid"


class BudgetExhausted(Exception):
    pass


def refine(adj: np.ndarray, colors: np.ndarray) -> np.ndarray:
    """Coarsest stable refinement of ``colors``; cells keep their relative order."""
    n_cells = int(colors.max()) + 1
    while True:
        key = adj @ _WEIGHTS[colors]
        _, new = np.unique(np.column_stack((colors, key)), axis=0, return_inverse=True)
        new = new.ravel()
        k = int(new.max()) + 1
        if k == n_cells:
            return colors
        colors, n_cells = new, k


def individualize(colors: np.ndarray, v: int) -> np.ndarray:
    c = colors[v]
    out = colors + (colors > c)
    out[colors == c] = c + 1
    out[v] = c
    return out


def _target_cell(colors: np.ndarray) -> np.ndarray | None:
    sizes = np.bincount(colors)
    multi = np.flatnonzero(sizes > 1)
    if multi.size == 0:
        return None
    c = multi[np.argmin(sizes[multi])]
    return np.flatnonzero(colors == c)


def is_automorphism(adj: np.ndarray, perm) -> bool:
    perm = np.asarray(perm)
    return bool(np.array_equal(adj[np.ix_(perm, perm)], adj))


class _Search:
    def __init__(self, adj: np.ndarray, budget: int):
        self.adj = adj.astype(np.int64)
        self.bool_adj = adj
        self.budget = budget
        self.nodes = 0

    def child(self, colors: np.ndarray, v: int) -> np.ndarray:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted
        return refine(self.adj, individualize(colors, v))

    def first_leaf(self, colors: np.ndarray) -> tuple[np.ndarray, list[bytes]]:
        trace = [np.bincount(colors).tobytes()]
        while (cell := _target_cell(colors)) is not None:
            colors = self.child(colors, int(cell[0]))
            trace.append(np.bincount(colors).tobytes())
        return np.argsort(colors), trace

    def match(self, colors: np.ndarray, depth: int, trace: list[bytes], leaf: np.ndarray):
        if np.bincount(colors).tobytes() != trace[depth]:
            return None
        cell = _target_cell(colors)
        if cell is None:
            perm = np.empty_like(leaf)
            perm[leaf] = np.argsort(colors)
            return perm if is_automorphism(self.bool_adj, perm) else None
        for x in cell.tolist():
            found = self.match(self.child(colors, x), depth + 1, trace, leaf)
            if found is not None:
                return found
        return None

    def run(self) -> tuple[int, ...] | None:
        n = self.adj.shape[0]
        colors = refine(self.adj, np.zeros(n, dtype=np.int64))
        while (cell := _target_cell(colors)) is not None:
            v = int(cell[0])
            branch = self.child(colors, v)
            leaf, trace = self.first_leaf(branch)
            for w in cell[1:].tolist():
                found = self.match(self.child(colors, w), 0, trace, leaf)
                if found is not None:
                    return tuple(found.tolist())
            colors = branch
        return None


def is_rigid(g: Mag, node_budget: int = DEFAULT_NODE_BUDGET) -> RigidityResult:
    """Decide whether the identity is the only automorphism of ``g``.

    A non-rigid verdict carries a verified non-identity automorphism as
    ``witness`` (``witness[i]`` is the image of composite index ``i``).
    Exceeding ``node_budget`` refinement calls yields ``"undecided"``.
    """
    return rigidity_of_adjacency(g.adjacency, node_budget)


def rigidity_of_adjacency(adj: np.ndarray, node_budget: int = DEFAULT_NODE_BUDGET) -> RigidityResult:
    search = _Search(np.asarray(adj, dtype=bool), node_budget)
    if adj.shape[0] < 2:
        return RigidityResult("rigid", None, 0)
    try:
        witness = search.run()
    except BudgetExhausted:
        return RigidityResult("undecided", None, search.nodes)
    if witness is None:
        return RigidityResult("rigid", None, search.nodes)
    return RigidityResult("not-rigid", witness, search.nodes)
