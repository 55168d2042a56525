"""Probe-gain benchmark: one HiddenCore run per K on a fresh ledger."""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field

from .cores import peel_oracle
from .graph import Graph
from .hidden_core import hidden_core
from .probe import AdjacencyOracle, HiddenGraphOracle, ProbeLedger

POLICY = {"source_order": "ascending-wrap", "destination": "left-endpoint"}
CSV_COLUMNS = ["K", "probes", "max_probes", "gain", "outcome", "seconds"]


@dataclass
class BenchRow:
    K: int
    probes: int
    max_probes: int
    gain: float
    outcome: str
    seconds: float
    core_size: int = 0
    baseline_agrees: bool | None = None


@dataclass
class BenchReport:
    name: str
    n: int
    m: int
    rows: list[BenchRow] = field(default_factory=list)
    generator: dict | None = None

    def to_dict(self) -> dict:
        out = {
            "graph": {"name": self.name, "n": self.n, "m": self.m},
            "policy": dict(POLICY),
            "rows": [asdict(r) for r in self.rows],
        }
        if self.generator is not None:
            out["generator"] = self.generator
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow([r.K, r.probes, r.max_probes, f"{r.gain:.6f}", r.outcome, f"{r.seconds:.3f}"])
        return buf.getvalue()


def baseline_core(oracle: HiddenGraphOracle, K: int) -> tuple[set[int], int]:
    """Probe every pair, then peel.  Returns the K-core vertices and the probe count."""
    n = oracle.n
    ledger = ProbeLedger(n, track_pairs=False)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if ledger.probe(oracle, u, v)]
    return peel_oracle(Graph(n, edges), K), ledger.probes


def run_bench(g: Graph, Ks, name: str = "graph", generator: dict | None = None,
              baseline: bool = False, track_pairs: bool = False) -> BenchReport:
    Ks = sorted(set(Ks))
    if not Ks:
        raise ValueError("empty K list")
    oracle = AdjacencyOracle(g.n, g.edges())
    report = BenchReport(name, g.n, g.m, generator=generator)
    for K in Ks:
        ledger = ProbeLedger(g.n, track_pairs=track_pairs)
        t0 = time.perf_counter()
        res = hidden_core(oracle, K, ledger)
        dt = time.perf_counter() - t0
        row = BenchRow(K, res.probes, res.max_probes, res.gain,
                       "exists" if res.exists else "absent", dt, len(res.vertices))
        if baseline:
            row.baseline_agrees = set(res.vertices) == baseline_core(oracle, K)[0]
        report.rows.append(row)
    return report
