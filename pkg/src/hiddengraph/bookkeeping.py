"""Per-vertex probe state shared by GSOE and HiddenCore.

All arrays are indexed by vertex id 1..n; slot 0 is unused.
"""

from __future__ import annotations

from .intervals import IntervalSet, OpCounter
from .probe import ProbeResult, SOLID


class VertexBook:
    """Counters ``s``, ``e``, ``state``, solid neighbour sets ``se`` and the
    interval sets ``pms`` of still-unprobed destinations.

    ``skipped`` counts pairs consumed without a probe (HiddenCore drops pairs
    that touch a blacklisted vertex), so at all times
    ``s[u] + e[u] + skipped[u] + len(pms[u]) == n - 1``.
    """

    def __init__(self, n: int, counter: OpCounter | None = None):
        self.n = n
        self.s = [0] * (n + 1)
        self.e = [0] * (n + 1)
        self.state = [0] * (n + 1)
        self.skipped = [0] * (n + 1)
        self.se: list[set[int]] = [set() for _ in range(n + 1)]
        self.pms: list[IntervalSet | None] = [None] + [
            IntervalSet(n, u, counter) for u in range(1, n + 1)
        ]

    def apply_probe_result(self, u: int, v: int, r: ProbeResult) -> None:
        if r is SOLID:
            self.se[u].add(v)
            self.se[v].add(u)
            self.s[u] += 1
            self.s[v] += 1
        else:
            self.e[u] += 1
            self.e[v] += 1
            self.state[u] -= 1
            self.state[v] -= 1
        self.pms[u].remove(v)
        self.pms[v].remove(u)

    def skip_pair(self, u: int, v: int) -> None:
        self.pms[u].remove(v)
        self.pms[v].remove(u)
        self.skipped[u] += 1
        self.skipped[v] += 1

    def end_round(self) -> None:
        state = self.state
        for u in range(1, self.n + 1):
            if state[u] < 0:
                state[u] += 1

    def fully_probed(self, u: int) -> bool:
        return self.s[u] + self.e[u] == self.n - 1

    def exhausted(self, u: int) -> bool:
        """No pair involving ``u`` is left, probed or skipped."""
        return not self.pms[u]

    def potential_degree(self, u: int) -> int:
        return self.n - 1 - self.e[u]

    def snapshot(self) -> dict[str, list[int]]:
        return {
            "s": self.s[1:],
            "e": self.e[1:],
            "state": self.state[1:],
            "pd": [self.n - 1 - x for x in self.e[1:]],
        }


def apply_probe_result(book: VertexBook, u: int, v: int, r: ProbeResult) -> VertexBook:
    book.apply_probe_result(u, v, r)
    return book


def end_round(book: VertexBook) -> VertexBook:
    book.end_round()
    return book


def fully_probed(book: VertexBook, u: int) -> bool:
    return book.fully_probed(u)
