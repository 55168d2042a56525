"""Hidden-graph oracles and the probe ledger.

An oracle answers one question, "is there an edge between u and v?", for
vertices numbered 1..n.  Every question costs one probe, and the
:class:`ProbeLedger` is where the cost is counted.
"""

from __future__ import annotations

import enum
from typing import Any, Callable, Iterable, Sequence

from .errors import DuplicateProbe, SelfProbe


class ProbeResult(enum.Enum):
    SOLID = "solid"
    EMPTY = "empty"

    def __bool__(self) -> bool:
        return self is ProbeResult.SOLID


SOLID = ProbeResult.SOLID
EMPTY = ProbeResult.EMPTY


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class HiddenGraphOracle:
    """Base oracle.  Subclasses implement :meth:`edge` for ``u != v``."""

    n: int

    def edge(self, u: int, v: int) -> bool:
        raise NotImplementedError

    def __call__(self, u: int, v: int) -> ProbeResult:
        return SOLID if self.edge(u, v) else EMPTY


class AdjacencyOracle(HiddenGraphOracle):
    """Oracle backed by an explicit edge set (tests and benchmarks)."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [1, {n}]")
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = adj
        self.m = sum(len(a) for a in adj) // 2

    def edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])


class PredicateOracle(HiddenGraphOracle):
    """Oracle over opaque records: ``f(u, v) = predicate(items[u-1], items[v-1])``.

    With ``check_symmetry=True`` every call also evaluates the reversed pair
    and raises ``ValueError`` if the predicate disagrees with itself.
    """

    def __init__(self, items: Sequence[Any], predicate: Callable[[Any, Any], bool],
                 check_symmetry: bool = False):
        self.items = list(items)
        self.n = len(self.items)
        self.predicate = predicate
        self.check_symmetry = check_symmetry

    def edge(self, u: int, v: int) -> bool:
        a, b = self.items[u - 1], self.items[v - 1]
        out = bool(self.predicate(a, b))
        if self.check_symmetry and out != bool(self.predicate(b, a)):
            raise ValueError(f"predicate is not symmetric on ({u}, {v})")
        return out


def make_adjacency_oracle(n: int, edges: Iterable[tuple[int, int]]) -> AdjacencyOracle:
    return AdjacencyOracle(n, edges)


def make_predicate_oracle(items: Sequence[Any], predicate: Callable[[Any, Any], bool],
                          check_symmetry: bool = __debug__) -> PredicateOracle:
    return PredicateOracle(items, predicate, check_symmetry=check_symmetry)


class ProbeLedger:
    """Counts probes and, when ``track_pairs`` is set, rejects repeats.

    The pair set costs memory proportional to the number of probes, so large
    benchmark runs turn it off and rely on the interval sets for dedup.
    ``record`` keeps the full ``(u, v, result)`` sequence.
    """

    def __init__(self, n: int, track_pairs: bool = True, record: bool = False):
        self.n = n
        self.probes = 0
        self.solid = 0
        self.track_pairs = track_pairs
        self.probed_pairs: set[tuple[int, int]] = set()
        self.sequence: list[tuple[int, int, ProbeResult]] | None = [] if record else None

    @property
    def empty(self) -> int:
        return self.probes - self.solid

    @property
    def max_probes(self) -> int:
        return self.n * (self.n - 1) // 2

    def probe(self, oracle: HiddenGraphOracle, u: int, v: int) -> ProbeResult:
        if u == v:
            raise SelfProbe(f"probe({u}, {v})")
        if self.track_pairs:
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"probe({u}, {v}) outside [1, {self.n}]")
            key = _pair(u, v)
            if key in self.probed_pairs:
                raise DuplicateProbe(f"pair {key} already probed")
            self.probed_pairs.add(key)
        result = SOLID if oracle.edge(u, v) else EMPTY
        self.probes += 1
        if result is SOLID:
            self.solid += 1
        if self.sequence is not None:
            self.sequence.append((u, v, result))
        return result


def probe(oracle: HiddenGraphOracle, ledger: ProbeLedger, u: int, v: int) -> ProbeResult:
    return ledger.probe(oracle, u, v)


def reveal_all(oracle: HiddenGraphOracle) -> list[tuple[int, int]]:
    """Brute-force baseline: ask every pair once, return the solid ones."""
    n = oracle.n
    return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if oracle.edge(u, v)]

