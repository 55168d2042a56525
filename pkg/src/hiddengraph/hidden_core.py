"""HiddenCore: decide whether a hidden graph has a K-core, and return it.

The probing schedule is GSOE's (switch source on an empty answer, rounds,
``state`` back-off).  On top of it:

* a vertex whose potential degree ``n - 1 - e(u)`` drops below K is
  blacklisted; pairs touching it are dropped without probing;
* the run gives up as soon as fewer than K+1 candidates are left, or when
  the solid edges still missing from the best K+1 candidates cannot fit in
  the probes left (``nrp > nap``);
* once no unresolved candidate is left at a round boundary, the fully
  revealed subgraph of high-degree vertices is handed to the classic core
  decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .bookkeeping import VertexBook
from .cores import core_decomposition
from .errors import InvalidK
from .graph import Graph
from .probe import HiddenGraphOracle, ProbeLedger, SOLID


class TopSolidTracker:
    """Sum of ``min(s(u), K)`` over the K+1 candidates with the most solid edges.

    Values above K contribute the same as K, so only K+1 buckets are needed.
    ``cnt[c]`` counts candidates with clamped value ``c``; the tracked set
    occupies every bucket above ``floor`` plus ``taken`` members of bucket
    ``floor``.  Bumps are O(1); a removal may scan down for a replacement.
    """

    def __init__(self, n: int, K: int):
        self.K = K
        self.cnt = [0] * (K + 1)
        self.cnt[0] = n
        self.floor = 0
        self.taken = min(K + 1, n)
        self.top_sum = 0
        self.short = n < K + 1
        self.steps = 0

    def bump(self, c: int) -> None:
        """A candidate with clamped value ``c < K`` gained a solid edge."""
        self.steps += 1
        cnt = self.cnt
        cnt[c] -= 1
        cnt[c + 1] += 1
        b = self.floor
        if c > b:
            self.top_sum += 1
        elif c == b:
            # ties are interchangeable, so the bumped vertex is taken to be in T
            self.top_sum += 1
            self.taken -= 1
            if self.taken == 0:
                self.floor = b + 1
                self.taken = cnt[b + 1]

    def remove(self, c: int) -> None:
        """A candidate with clamped value ``c`` left the candidate pool."""
        self.steps += 1
        cnt = self.cnt
        b = self.floor
        cnt[c] -= 1
        if c < b:
            return
        if c == b:
            if cnt[b] >= self.taken:
                return
            self.taken -= 1
        self.top_sum -= c
        if cnt[b] > self.taken:
            self.taken += 1
            self.top_sum += b
            return
        d = b - 1
        while d >= 0 and cnt[d] == 0:
            self.steps += 1
            d -= 1
        if d < 0:
            self.short = True
            return
        self.floor = d
        self.taken = 1
        self.top_sum += d

    def deficit(self) -> int:
        return (self.K + 1) * self.K - self.top_sum


def nrp_from_tracker(tracker: TopSolidTracker) -> int:
    return (tracker.deficit() + 1) // 2


def nrp(s_values, K: int) -> int:
    """Probes still needed by the K+1 largest solid counts in ``s_values``."""
    top = sorted(s_values, reverse=True)[: K + 1]
    return (sum(max(0, K - s) for s in top) + 1) // 2


def nap(n: int, probes: int) -> int:
    return n * (n - 1) // 2 - probes


@dataclass
class RevealedSubgraph:
    vertices: set[int]
    edges: set[tuple[int, int]]


@dataclass
class CoreQueryResult:
    exists: bool
    n: int
    K: int
    probes: int
    reason: str
    vertices: frozenset = frozenset()
    edges: frozenset = frozenset()
    core_numbers: dict[int, int] = field(default_factory=dict)
    rounds: int = 0
    skipped: int = 0

    @property
    def max_probes(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def gain(self) -> float:
        total = self.max_probes
        return 1.0 - self.probes / total if total else 0.0


def finalize_core(S: RevealedSubgraph, K: int) -> Optional[tuple[frozenset, frozenset, dict[int, int]]]:
    """K-core of the revealed subgraph, or ``None`` when it has < K+1 vertices.

    The returned core numbers cover every vertex of the K-core, so the higher
    cores inside it come for free.
    """
    verts = sorted(S.vertices)
    index = {v: i for i, v in enumerate(verts, 1)}
    adj: list[list[int]] = [[] for _ in range(len(verts) + 1)]
    for u, v in S.edges:
        if u in index and v in index:
            adj[index[u]].append(index[v])
            adj[index[v]].append(index[u])
    cn = core_decomposition(Graph.from_adjacency(adj))
    core = {verts[i - 1]: cn[i] for i in range(1, len(verts) + 1) if cn[i] >= K}
    if len(core) < K + 1:
        return None
    edges = frozenset((u, v) for u, v in S.edges if u in core and v in core)
    return frozenset(core), edges, core


class CoreCandidateState:
    """Potential degrees, blacklist, candidate counter and the top-(K+1) tracker.

    ``pd[u]`` starts at n-1 and loses one for every empty probe and every
    pair dropped because its other end is blacklisted, so it bounds the
    number of edges ``u`` can still have towards possible core members.  A
    blacklisted vertex is ignored from then on and its ``pd`` stays frozen.
    """

    def __init__(self, book: VertexBook, K: int):
        n = book.n
        self.book = book
        self.K = K
        self.pd = [n - 1] * (n + 1)
        self.blacklist = [False] * (n + 1)
        self.C = n
        self.mpd = n - 1
        self.tracker = TopSolidTracker(n, K)

    def check(self, u: int) -> bool:
        """Blacklist ``u`` if it can no longer reach degree K.

        Returns False once fewer than K+1 candidates remain.
        """
        if self.pd[u] >= self.K:
            return True
        self.blacklist[u] = True
        self.C -= 1
        self.tracker.remove(min(self.book.s[u], self.K))
        return self.C >= self.K + 1


def hidden_core_check(u: int, K: int, state: CoreCandidateState) -> bool:
    assert state.K == K
    return state.check(u)


class HiddenCore:
    """One HiddenCore run.  ``record=True`` keeps per-round vertex snapshots,
    taken at the end of each round before the state back-off."""

    IN_GRAPH, IN_S, ELIMINATED = "in G", "in S", "eliminated"

    def __init__(self, oracle: HiddenGraphOracle, K: int, ledger: ProbeLedger | None = None,
                 record: bool = False):
        if K < 1:
            raise InvalidK(f"K={K} must be at least 1")
        self.oracle = oracle
        self.n = oracle.n
        self.K = K
        self.ledger = ledger if ledger is not None else ProbeLedger(self.n)
        self.record = record
        self.round_snapshots: list[dict] = []
        self.book = VertexBook(self.n)
        self.cand = CoreCandidateState(self.book, K)
        self.in_s = [False] * (self.n + 1)
        self.rounds = 0

    def status(self, u: int) -> str:
        if self.cand.blacklist[u]:
            return self.ELIMINATED
        return self.IN_S if self.in_s[u] else self.IN_GRAPH

    def _result(self, exists: bool, reason: str, core=None) -> CoreQueryResult:
        res = CoreQueryResult(exists, self.n, self.K, self.ledger.probes, reason,
                              rounds=self.rounds, skipped=sum(self.book.skipped) // 2)
        if core is not None:
            res.vertices, res.edges, res.core_numbers = core
        return res

    def _snapshot(self) -> None:
        snap = self.book.snapshot()
        snap["pd"] = self.cand.pd[1:]
        snap["round"] = self.rounds
        snap["status"] = [self.status(u) for u in range(1, self.n + 1)]
        snap["C"] = self.cand.C
        self.round_snapshots.append(snap)

    def run(self) -> CoreQueryResult:
        n, K = self.n, self.K
        if K >= n:
            return self._result(False, "too-few-vertices")
        book, cand, ledger, oracle = self.book, self.cand, self.ledger, self.oracle
        s, state, pms, se = book.s, book.state, book.pms, book.se
        pd, blacklist, in_s = cand.pd, cand.blacklist, self.in_s
        tracker = cand.tracker
        total = n * (n - 1) // 2
        need = K + 1

        while True:
            self.rounds += 1
            for u in range(1, n + 1):
                if state[u] < 0 or blacklist[u] or in_s[u]:
                    continue
                src = pms[u]
                while src:
                    v = src.select()
                    if blacklist[v]:
                        book.skip_pair(u, v)
                        pd[u] -= 1
                        if pd[u] < K:
                            if not cand.check(u):
                                return self._result(False, "too-few-candidates")
                            break
                        continue
                    res = ledger.probe(oracle, u, v)
                    book.apply_probe_result(u, v, res)
                    if res is SOLID:
                        if s[u] <= K:
                            tracker.bump(s[u] - 1)
                        if s[v] <= K:
                            tracker.bump(s[v] - 1)
                        if not pms[v]:
                            in_s[v] = True
                    else:
                        pd[u] -= 1
                        pd[v] -= 1
                        cand.check(u)
                        cand.check(v)
                        if cand.C < need:
                            return self._result(False, "too-few-candidates")
                        if not pms[v] and not blacklist[v]:
                            in_s[v] = True
                    if (tracker.deficit() + 1) // 2 > total - ledger.probes:
                        return self._result(False, "budget")
                    if res is not SOLID:
                        break
                else:
                    # exhausted without being blacklisted, so s[u] == pd[u] >= K
                    in_s[u] = True
            if self.record:
                self._snapshot()
            book.end_round()
            cand.mpd = max((pd[u] for u in range(1, n + 1) if not (blacklist[u] or in_s[u])), default=0)
            if cand.mpd < K:
                S = RevealedSubgraph(
                    {u for u in range(1, n + 1) if in_s[u]},
                    {(u, v) for u in range(1, n + 1) if in_s[u] for v in se[u] if u < v and in_s[v]},
                )
                core = finalize_core(S, K)
                if core is None:
                    return self._result(False, "decomposition")
                return self._result(True, "decomposition", core)


def hidden_core(oracle: HiddenGraphOracle, K: int, ledger: ProbeLedger | None = None) -> CoreQueryResult:
    return HiddenCore(oracle, K, ledger).run()
