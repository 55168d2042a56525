"""Generalized Switch-On-Empty: the k highest-degree vertices of a hidden graph.

A source keeps probing while the answers are solid and hands over to the next
source on the first empty answer.  Each empty answer pushes both endpoints
one round back (``state`` goes negative), and a vertex whose degree is fully
known enters the result once its state is back to zero.  A vertex of degree
``d`` therefore enters in round ``n - d``, which is what lets the run stop at
the first round boundary where ``k`` vertices have been collected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .bookkeeping import VertexBook
from .errors import InvalidK
from .probe import HiddenGraphOracle, ProbeLedger, SOLID


@dataclass
class TopKResult:
    entries: list[tuple[int, int]]
    probes: int
    rounds: int
    n: int
    entry_round: dict[int, int] = field(default_factory=dict)
    empty_at_entry: dict[int, int] = field(default_factory=dict)

    @property
    def vertices(self) -> set[int]:
        return {v for v, _ in self.entries}

    @property
    def gain(self) -> float:
        total = self.n * (self.n - 1) // 2
        return 1.0 - self.probes / total if total else 0.0


SourceHook = Callable[[int, VertexBook], None]


def gsoe_top_k(oracle: HiddenGraphOracle, k: int, ledger: ProbeLedger | None = None,
               on_source: SourceHook | None = None) -> TopKResult:
    """Return every vertex whose degree is at least the k-th largest degree.

    ``on_source(u, book)`` is called each time ``u`` becomes the probing source.
    """
    n = oracle.n
    if n < 1:
        raise InvalidK("graph has no vertices")
    if not 1 <= k <= n:
        raise InvalidK(f"k={k} outside [1, {n}]")
    if ledger is None:
        ledger = ProbeLedger(n)

    book = VertexBook(n)
    s, e, state, pms = book.s, book.e, book.state, book.pms
    last = n - 1
    in_r = [False] * (n + 1)
    order: list[int] = []
    entry_round: dict[int, int] = {}
    empty_at_entry: dict[int, int] = {}

    def enter(u: int, rnd: int) -> None:
        in_r[u] = True
        order.append(u)
        entry_round[u] = rnd
        empty_at_entry[u] = e[u]

    rnd = 0
    while True:
        rnd += 1
        for u in range(1, n + 1):
            if in_r[u] or state[u] < 0:
                continue
            if s[u] + e[u] == last:
                enter(u, rnd)
                continue
            if on_source is not None:
                on_source(u, book)
            src = pms[u]
            while True:
                v = src.select()
                res = ledger.probe(oracle, u, v)
                book.apply_probe_result(u, v, res)
                if res is not SOLID:
                    break
                if s[v] + e[v] == last and state[v] == 0 and not in_r[v]:
                    enter(v, rnd)
                if s[u] + e[u] == last:
                    enter(u, rnd)
                    break
        book.end_round()
        if len(order) >= k:
            break

    entries = sorted(((u, s[u]) for u in order), key=lambda t: (-t[1], entry_round[t[0]], t[0]))
    return TopKResult(entries, ledger.probes, rnd, n, entry_round, empty_at_entry)
