"""One JSON-ready verdict record per graph, and batch summaries.

Every verdict stores the measured value next to the threshold it was
compared against.  Reports carry no timings or timestamps, so re-running
:func:`analyze` on the same graph and config gives an identical report.
"""

from __future__ import annotations

import hashlib
import json
import math
import statistics
from dataclasses import asdict, dataclass, field
from typing import Any

from .automorphism import DEFAULT_NODE_BUDGET
from .codec import serialize
from .core import Mag
from .errors import MagError
from .randomness import RandomnessThreshold, deficiency_certificate, passes_log_randomness_test
from .temporal import (
    EXHAUSTIVE_LIMIT,
    SAMPLE_SIZE,
    check_size_hypothesis,
    snapshot_loss,
    witness_sweep,
)
from .topology import path_budget, topology_report

REPORT_VERSION = 1
COROLLARY_ITEMS = ("log_randomness", "degree_concentration", "disjoint_paths", "diameter", "rigidity")


@dataclass(frozen=True)
class AnalysisConfig:
    c_deficiency: float = 3.0
    c_degree: float = 2.0
    rigidity_budget: int = DEFAULT_NODE_BUDGET
    sweep_limit: int = EXHAUSTIVE_LIMIT
    sweep_sample: int = SAMPLE_SIZE
    sweep_seed: int = 0
    generator: dict | None = None  # echo of the generating spec, when known

    def as_dict(self) -> dict:
        return asdict(self)


def verdict(holds: bool | None, measured: Any, threshold: Any, relation: str) -> dict:
    status = "undecided" if holds is None else ("pass" if holds else "fail")
    return {"holds": holds, "status": status, "measured": measured, "threshold": threshold, "relation": relation}


@dataclass(frozen=True)
class AnalysisReport:
    graph_id: str
    signature: dict
    deficiency: dict
    topology: dict
    temporal: dict
    corollary_verdicts: dict
    theorem_verdicts: dict
    config: dict
    report_version: int = REPORT_VERSION

    def as_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"

    @property
    def all_corollaries_hold(self) -> bool:
        return all(v["holds"] is True for v in self.corollary_verdicts.values())


def graph_id(g: Mag) -> str:
    return "sha256:" + hashlib.sha256(serialize(g)).hexdigest()


def analyze(g: Mag, config: AnalysisConfig | None = None) -> AnalysisReport:
    config = config or AnalysisConfig()
    sig = g.signature
    n = sig.n_composite
    if n < 2:
        raise MagError("analysis needs at least two composite vertices")

    thr = RandomnessThreshold(config.c_deficiency)
    cert = deficiency_certificate(g)
    topo = topology_report(g, config.c_degree, config.rigidity_budget)

    losses, sweeps, hypotheses, theorems = {}, {}, {}, {}
    for h in range(2, sig.order + 1):
        loss = snapshot_loss(g, h)
        losses[str(h)] = loss._asdict()
        hypotheses[str(h)] = check_size_hypothesis(sig, h)
        if hypotheses[str(h)]:
            sw = witness_sweep(g, h, config.sweep_limit, config.sweep_sample, config.sweep_seed)
            sweeps[str(h)] = sw.as_dict()
            theorems[f"{sw.kind}_aspect_{h}"] = verdict(
                sw.failures == 0, sw.witnesses_found, sw.queries_checked, "found == checked"
            )

    cn_threshold = path_budget(n)
    corollary = {
        "log_randomness": verdict(
            passes_log_randomness_test(cert, thr), cert.deficiency_lb, thr.budget(n), "<="
        ),
        "degree_concentration": verdict(
            topo.max_degree_deviation <= topo.degree_bound,
            topo.max_degree_deviation, topo.degree_bound, "<=",
        ),
        "disjoint_paths": verdict(
            topo.min_common_neighbors >= cn_threshold, topo.min_common_neighbors, cn_threshold, ">="
        ),
        "diameter": verdict(topo.diameter == 2, topo.diameter, 2, "=="),
        "rigidity": verdict(topo.is_rigid, topo.rigidity, "rigid", "=="),
    }

    return AnalysisReport(
        graph_id=graph_id(g),
        signature={
            "aspect_sizes": list(sig.aspect_sizes),
            "time_aspect": sig.time_aspect,
            "n_composite": n,
        },
        deficiency=cert.as_dict(),
        topology=topo.as_dict(),
        temporal={"snapshot_loss": losses, "size_hypothesis": hypotheses, "witness_sweeps": sweeps},
        corollary_verdicts=corollary,
        theorem_verdicts=theorems,
        config=config.as_dict(),
    )


def _stats(values: list) -> dict | None:
    nums = [v for v in values if isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)]
    if not nums:
        return None
    return {"median": statistics.median(nums), "min": min(nums), "max": max(nums)}


def _tally(verdicts: list[dict]) -> dict:
    out = {"pass": 0, "fail": 0, "undecided": 0, "total": len(verdicts)}
    for v in verdicts:
        out[v["status"]] += 1
    out["measured"] = _stats([v["measured"] for v in verdicts])
    return out


def batch_summary(reports: list[AnalysisReport]) -> dict:
    if not reports:
        raise MagError("batch summary needs at least one report")
    sig = reports[0].signature
    if any(r.signature != sig for r in reports):
        raise MagError("batch summary needs reports with one common signature")

    corollary = {k: _tally([r.corollary_verdicts[k] for r in reports]) for k in reports[0].corollary_verdicts}
    theorem_keys = sorted({k for r in reports for k in r.theorem_verdicts})
    theorems = {k: _tally([r.theorem_verdicts[k] for r in reports if k in r.theorem_verdicts]) for k in theorem_keys}
    losses = {
        h: _stats([r.temporal["snapshot_loss"][h]["fraction"] for r in reports])
        for h in reports[0].temporal["snapshot_loss"]
    }
    seeds = [(r.config.get("generator") or {}).get("seed") for r in reports]
    return {
        "report_version": REPORT_VERSION,
        "n_reports": len(reports),
        "signature": sig,
        "seeds": seeds,
        "graph_ids": [r.graph_id for r in reports],
        "corollary_verdicts": corollary,
        "theorem_verdicts": theorems,
        "deficiency_lb": _stats([r.deficiency["deficiency_lb"] for r in reports]),
        "snapshot_loss_fraction": losses,
    }
