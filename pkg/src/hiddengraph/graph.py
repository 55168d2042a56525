"""Explicit simple undirected graph on vertices 1..n."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator


class Graph:
    """Adjacency lists indexed 1..n (slot 0 unused).

    Edges passed to the constructor keep their order and orientation in
    :meth:`edges`, so writing and re-reading an edge list is stable.
    """

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        self.n = n
        self.adj: list[list[int]] = [[] for _ in range(n + 1)]
        self._edges: list[tuple[int, int]] | None = []
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) outside [1, {n}]")
            if u == v:
                raise ValueError(f"self-loop on {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            self._edges.append((u, v))
            self.adj[u].append(v)
            self.adj[v].append(u)
        self.m = len(seen)

    @classmethod
    def from_adjacency(cls, adj: list[list[int]]) -> "Graph":
        """Wrap prebuilt adjacency lists (slot 0 unused) without copying."""
        g = cls.__new__(cls)
        g.n = len(adj) - 1
        g.adj = adj
        g._edges = None
        g.m = sum(len(a) for a in adj) // 2
        return g

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        if self._edges is not None:
            yield from self._edges
            return
        for u in range(1, self.n + 1):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def edge_set(self) -> set[tuple[int, int]]:
        """Edges normalised to ``(min, max)``."""
        return {(u, v) if u < v else (v, u) for u, v in self.edges()}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def check(self) -> None:
        """Raise ``ValueError`` unless the adjacency is simple and symmetric."""
        nbrs = [set(a) for a in self.adj]
        for u in range(1, self.n + 1):
            if len(nbrs[u]) != len(self.adj[u]):
                raise ValueError(f"multi-edge at vertex {u}")
            if u in nbrs[u]:
                raise ValueError(f"self-loop at vertex {u}")
            for v in nbrs[u]:
                if not 1 <= v <= self.n or u not in nbrs[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if len(self.adj[0]) != 0:
            raise ValueError("slot 0 must stay empty")

    def induced(self, vertices: Iterable[int]) -> "LabeledGraph":
        """Induced subgraph relabelled to 1..len(vertices) in ascending order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep, 1)}
        adj: list[list[int]] = [[] for _ in range(len(keep) + 1)]
        for v, i in index.items():
            adj[i] = [index[w] for w in self.adj[v] if w in index]
        return LabeledGraph(Graph.from_adjacency(adj), [0] + keep)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass
class LabeledGraph:
    """A dense graph plus ``labels[i]`` = external label of vertex ``i`` (slot 0 unused)."""

    graph: Graph
    labels: list = field(default_factory=list)
    dropped_duplicates: int = 0
    dropped_self_loops: int = 0

    def label_edges(self) -> set[tuple]:
        lab = self.labels
        return {(lab[u], lab[v]) for u, v in self.graph.edges()}
