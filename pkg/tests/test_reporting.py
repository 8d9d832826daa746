import json
import math

import pytest

from magrand.core import Mag, MagSignature
from magrand.errors import MagError
from magrand.genlab import GeneratorSpec, generate
from magrand.reporting import COROLLARY_ITEMS, AnalysisConfig, analyze, batch_summary, graph_id


def test_empty_graph_fails_everything():
    r = analyze(Mag.empty(MagSignature((256,))))
    assert set(r.corollary_verdicts) == set(COROLLARY_ITEMS)
    assert all(v["holds"] is False for v in r.corollary_verdicts.values())
    assert r.corollary_verdicts["log_randomness"]["measured"] >= 0.5 * r.deficiency["raw_len"]
    assert not r.all_corollaries_hold


def test_complete_graph():
    r = analyze(Mag.complete(MagSignature((4, 4))))
    assert r.topology["diameter"] == 1
    assert r.topology["is_rigid"] is False
    assert r.corollary_verdicts["rigidity"]["status"] == "fail"
    assert r.corollary_verdicts["log_randomness"]["status"] == "fail"


def test_uniform_tvg_passes_everything():
    sig = MagSignature((8, 16))
    for s in range(30):
        r = analyze(generate(GeneratorSpec(sig, seed=s)))
        assert r.all_corollaries_hold, s
        sweep = r.temporal["witness_sweeps"]["2"]
        assert sweep["witnesses_found"] == sweep["queries_checked"] == sweep["query_space"]
        assert r.theorem_verdicts["transtemporal_aspect_2"]["holds"] is True


def test_verdicts_carry_values_and_thresholds():
    sig = MagSignature((8, 16))
    cfg = AnalysisConfig(c_deficiency=2.5, c_degree=1.5)
    r = analyze(generate(GeneratorSpec(sig, seed=1)), cfg)
    n = sig.n_composite
    for v in list(r.corollary_verdicts.values()) + list(r.theorem_verdicts.values()):
        assert {"holds", "status", "measured", "threshold", "relation"} <= set(v)
    assert r.config["c_deficiency"] == 2.5 and r.config["c_degree"] == 1.5
    assert r.corollary_verdicts["log_randomness"]["threshold"] == pytest.approx(2.5 * math.log2(n))
    assert r.corollary_verdicts["degree_concentration"]["threshold"] == pytest.approx(1.5 * math.sqrt(n * math.log2(n)))


def test_report_is_hash_stable():
    g = generate(GeneratorSpec(MagSignature((4, 10)), seed=5))
    a, b = analyze(g).to_json(), analyze(g).to_json()
    assert a == b
    doc = json.loads(a)
    assert doc["report_version"] == 1
    assert doc["graph_id"] == graph_id(g)


def test_undecided_rigidity_is_distinct():
    r = analyze(Mag.complete(MagSignature((12,))), AnalysisConfig(rigidity_budget=1))
    v = r.corollary_verdicts["rigidity"]
    assert v["status"] == "undecided" and v["holds"] is None


def test_large_sweeps_are_sampled():
    g = generate(GeneratorSpec(MagSignature((4, 12)), seed=2))
    r = analyze(g, AnalysisConfig(sweep_limit=100, sweep_sample=40, sweep_seed=3))
    sweep = r.temporal["witness_sweeps"]["2"]
    assert sweep["sampled"] and sweep["queries_checked"] == 40


def test_sweep_only_for_large_aspects():
    r = analyze(generate(GeneratorSpec(MagSignature((4, 8, 9)), seed=0)))
    assert r.temporal["size_hypothesis"] == {"2": False, "3": True}
    assert list(r.temporal["witness_sweeps"]) == ["3"]
    assert list(r.theorem_verdicts) == ["crosslayer_aspect_3"]
    assert set(r.temporal["snapshot_loss"]) == {"2", "3"}


def test_batch_summary_counts():
    sig = MagSignature((8, 16))
    passing = [analyze(generate(GeneratorSpec(sig, seed=s)), AnalysisConfig(generator={"seed": s})) for s in range(30)]
    summary = batch_summary(passing)
    assert summary["seeds"] == list(range(30))
    for tally in summary["corollary_verdicts"].values():
        assert (tally["pass"], tally["total"]) == (30, 30)

    mixed = passing[:3] + [analyze(Mag.empty(sig)), analyze(Mag.complete(sig))]
    summary = batch_summary(mixed)
    assert summary["corollary_verdicts"]["diameter"]["pass"] == 3
    assert summary["corollary_verdicts"]["diameter"]["fail"] == 2
    assert summary["corollary_verdicts"]["rigidity"]["fail"] == 2


def test_batch_summary_median_of_identical_reports():
    r = analyze(Mag.empty(MagSignature((16,))))
    s = batch_summary([r, r, r])
    assert s["deficiency_lb"]["median"] == r.deficiency["deficiency_lb"] == 104


def test_batch_summary_errors():
    with pytest.raises(MagError):
        batch_summary([])
    with pytest.raises(MagError):
        batch_summary([analyze(Mag.empty(MagSignature((4,)))), analyze(Mag.empty(MagSignature((5,))))])
