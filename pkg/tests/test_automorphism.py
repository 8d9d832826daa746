import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from magrand.automorphism import is_automorphism, is_rigid, refine
from magrand.core import Mag, MagSignature
from magrand.genlab import GeneratorSpec, generate

from conftest import cycle, random_graph, simple_graph
from oracles import brute_force_automorphisms, brute_force_rigid, edge_set


def cliques(*sizes):
    edges, base = [], 0
    for k in sizes:
        edges += [(base + i, base + j) for i, j in itertools.combinations(range(k), 2)]
        base += k
    return simple_graph(base, edges)


def star(n):
    return simple_graph(n, [(0, i) for i in range(1, n)])


def complement(g):
    return Mag(g.signature, 1 - g.bits)


def adversarial():
    graphs = [cycle(n) for n in range(3, 9)]
    graphs += [cliques(4, 4), cliques(3, 3), cliques(2, 2, 2, 2), cliques(3, 3, 2), cliques(1, 1)]
    graphs += [star(n) for n in range(3, 9)]
    graphs += [simple_graph(n, [(i, i + 1) for i in range(n - 1)]) for n in range(2, 9)]
    graphs += [Mag.empty(MagSignature((n,))) for n in (2, 5, 8)]
    graphs += [Mag.complete(MagSignature((n,))) for n in (2, 5, 8)]
    # asymmetric: path 0-1-2-3-4 with 5 joined to 2 and 3
    graphs += [simple_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (3, 5)])]
    graphs += [complement(g) for g in list(graphs)]
    return graphs


def check_against_oracle(g):
    res = is_rigid(g)
    assert res.status in ("rigid", "not-rigid")
    assert res.rigid == brute_force_rigid(g)
    if not res.rigid:
        w = res.witness
        assert list(w) != list(range(g.n_composite))
        assert tuple(w) in brute_force_automorphisms(g.n_composite, edge_set(g))


def test_eight_cycle():
    res = is_rigid(cycle(8))
    assert res.rigid is False
    assert is_automorphism(cycle(8).adjacency, res.witness)
    rotation = [(i + 1) % 8 for i in range(8)]
    assert tuple(rotation) in brute_force_automorphisms(8, edge_set(cycle(8)))


def test_refinement_alone_singles_out_every_vertex():
    # simple graphs always repeat a degree; this one is split to singletons by refinement
    g = simple_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (3, 5)])
    colors = refine(g.adjacency.astype(np.int64), np.zeros(6, dtype=np.int64))
    assert sorted(colors.tolist()) == list(range(6))
    res = is_rigid(g)
    assert res.rigid is True and res.nodes == 0


def test_two_k4_not_rigid():
    g = cliques(4, 4)
    res = is_rigid(g)
    assert res.rigid is False and is_automorphism(g.adjacency, res.witness)


@pytest.mark.parametrize("g", adversarial(), ids=lambda g: repr(g))
def test_adversarial_against_brute_force(g):
    check_against_oracle(g)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_all_small_graphs_against_brute_force(n):
    sig = MagSignature((n,))
    for code in range(2 ** sig.n_pairs):
        bits = [(code >> k) & 1 for k in range(sig.n_pairs)]
        g = Mag(sig, bits)
        assert is_rigid(g).rigid == brute_force_rigid(g)


@settings(max_examples=80, deadline=None)
@given(st.integers(6, 8), st.floats(0.2, 0.8), st.integers(0, 2**32))
def test_random_small_graphs_against_brute_force(n, p, seed):
    check_against_oracle(random_graph(n, np.random.default_rng(seed), p))


def test_uniform_64_is_rigid():
    sig = MagSignature((64,))
    assert all(is_rigid(generate(GeneratorSpec(sig, seed=s))).rigid for s in range(30))


def test_budget_exhaustion_is_undecided():
    res = is_rigid(cliques(4, 4, 4, 4), node_budget=2)
    assert res.status == "undecided" and res.rigid is None


def test_refinement_is_stable_and_ordered():
    g = star(6)
    colors = refine(g.adjacency.astype(np.int64), np.zeros(6, dtype=np.int64))
    # leaves (degree 1) and the hub (degree 5) land in different cells
    assert len(set(colors.tolist())) == 2
    assert colors[1:].tolist() == [colors[1]] * 5
