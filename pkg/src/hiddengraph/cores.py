"""Core decomposition of an explicit graph.

``core_decomposition`` is the bin-sort peeling of Batagelj and Zaversnik:
vertices live in an array ordered by current degree, with ``bin_start[d]``
marking where degree ``d`` begins, so moving a vertex down one degree is a
single swap.  ``peel_oracle`` is the slow, obviously-correct version used to
check it.
"""

from __future__ import annotations

import random
from typing import Iterable

from .graph import Graph, LabeledGraph


class CoreNumbers:
    """Core number per vertex, indexed by vertex id."""

    def __init__(self, c: list[int], operations: int = 0):
        self._c = c
        self.operations = operations

    def __getitem__(self, v: int) -> int:
        return self._c[v]

    def __len__(self) -> int:
        return len(self._c) - 1

    def __iter__(self):
        return iter(self._c[1:])

    def as_dict(self) -> dict[int, int]:
        return {v: self._c[v] for v in range(1, len(self._c))}

    @property
    def degeneracy(self) -> int:
        return max(self._c[1:], default=0)

    def at_least(self, k: int) -> set[int]:
        return {v for v in range(1, len(self._c)) if self._c[v] >= k}


def core_decomposition(g: Graph, check: bool = True) -> CoreNumbers:
    """Core number of every vertex in O(n + m).

    ``operations`` on the result counts bin set-up steps plus adjacency
    entries scanned.  Raises ``ValueError`` on asymmetric adjacency when
    ``check`` is on.
    """
    if check:
        g.check()
    n = g.n
    adj = g.adj
    if n == 0:
        return CoreNumbers([0])
    deg = [len(a) for a in adj]
    md = max(deg)
    ops = 0

    counts = [0] * (md + 1)
    for v in range(1, n + 1):
        counts[deg[v]] += 1
    ops += n + md + 1
    bin_start = [0] * (md + 1)
    start = 0
    for d in range(md + 1):
        bin_start[d] = start
        start += counts[d]
    vert = [0] * n
    pos = [0] * (n + 1)
    for v in range(1, n + 1):
        d = deg[v]
        pos[v] = bin_start[d]
        vert[pos[v]] = v
        bin_start[d] += 1
    for d in range(md, 0, -1):
        bin_start[d] = bin_start[d - 1]
    bin_start[0] = 0
    ops += n + md + 1

    for i in range(n):
        v = vert[i]
        dv = deg[v]
        ops += 1 + len(adj[v])
        for u in adj[v]:
            du = deg[u]
            if du > dv:
                # swap u with the first vertex of its bin, then shrink the bin
                pu = pos[u]
                pw = bin_start[du]
                w = vert[pw]
                if u != w:
                    pos[u] = pw
                    vert[pu] = w
                    pos[w] = pu
                    vert[pw] = u
                bin_start[du] += 1
                deg[u] = du - 1
    return CoreNumbers(deg, ops)


def k_core(g: Graph, k: int) -> LabeledGraph:
    if k < 1:
        raise ValueError("k must be at least 1")
    return g.induced(core_decomposition(g).at_least(k))


def peel_oracle(g: Graph, k: int, rng: random.Random | None = None) -> set[int]:
    """Delete vertices of degree < k one at a time until none is left.

    With ``rng`` the victim is drawn at random among the current offenders;
    the survivor set must not depend on that choice.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    alive = set(g.vertices())
    deg = {v: g.degree(v) for v in alive}
    if rng is None:
        stack = [v for v in alive if deg[v] < k]
        while stack:
            v = stack.pop()
            if v not in alive:
                continue
            alive.discard(v)
            for u in g.adj[v]:
                if u in alive:
                    deg[u] -= 1
                    if deg[u] == k - 1:
                        stack.append(u)
        return alive
    while True:
        low = [v for v in sorted(alive) if deg[v] < k]
        if not low:
            return alive
        v = rng.choice(low)
        alive.discard(v)
        for u in g.adj[v]:
            if u in alive:
                deg[u] -= 1


def core_numbers_by_peeling(g: Graph) -> dict[int, int]:
    """Core numbers from repeated ``peel_oracle`` calls (quadratic; tests only)."""
    c = {v: 0 for v in g.vertices()}
    k = 1
    while True:
        survivors = peel_oracle(g, k)
        if not survivors:
            return c
        for v in survivors:
            c[v] = k
        k += 1


def induced_min_degree(g: Graph, vertices: Iterable[int]) -> int:
    vs = set(vertices)
    return min((sum(1 for u in g.adj[v] if u in vs) for v in vs), default=0)
