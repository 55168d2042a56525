"""Edge-list loading and synthetic graph generators."""

from __future__ import annotations

import gzip
import io
import logging
import math
import os
import random
from bisect import bisect_left
from dataclasses import dataclass
from itertools import accumulate
from typing import BinaryIO, Iterable, TextIO, Union

from .errors import EmptyInput, MalformedLine, Ungraphable
from .graph import Graph, LabeledGraph

log = logging.getLogger(__name__)

Source = Union[str, os.PathLike, BinaryIO, TextIO]


def _lines(source: Source) -> Iterable[str]:
    if isinstance(source, (str, os.PathLike)):
        opener = gzip.open if os.fspath(source).endswith(".gz") else open
        with opener(source, "rb") as fh:
            yield from _lines(fh)
        return
    for raw in source:
        yield raw.decode() if isinstance(raw, bytes) else raw


def load_edge_list(source: Source) -> LabeledGraph:
    """Parse ``u v`` lines (``#`` starts a comment) into a dense graph.

    Labels are numbered 1..n in order of first appearance.  Duplicate edges
    (in either orientation) and self-loops are dropped and counted.
    """
    index: dict[int, int] = {}
    labels: list[int] = [0]
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    dup = loops = 0
    for lineno, line in enumerate(_lines(source), 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        if len(parts) < 2:
            raise MalformedLine(lineno, line)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise MalformedLine(lineno, line) from None
        ids = []
        for lab in (a, b):
            i = index.get(lab)
            if i is None:
                i = index[lab] = len(labels)
                labels.append(lab)
            ids.append(i)
        u, v = ids
        if u == v:
            loops += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            dup += 1
            continue
        seen.add(key)
        edges.append((u, v))
    if not index:
        raise EmptyInput("no edges in input")
    if dup or loops:
        log.warning("dropped %d duplicate edges and %d self-loops", dup, loops)
    return LabeledGraph(Graph(len(labels) - 1, edges), labels, dup, loops)


def write_edge_list(g: Graph, stream: TextIO, labels: list | None = None) -> None:
    for u, v in g.edges():
        if labels is not None:
            u, v = labels[u], labels[v]
        stream.write(f"{u} {v}\n")


def dumps_edge_list(g: Graph, labels: list | None = None) -> str:
    buf = io.StringIO()
    write_edge_list(g, buf, labels)
    return buf.getvalue()


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p) in O(n + m) by geometric skipping over the pair sequence."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    if p == 0.0 or n < 2:
        return Graph(n)
    if p == 1.0:
        return Graph(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))
    rng = random.Random(seed)
    lq = math.log(1.0 - p)
    edges = []
    # pairs (v, w) with w < v, both 0-based, walked in lexicographic order
    v, w = 1, -1
    while v < n:
        w += 1 + int(math.log(1.0 - rng.random()) / lq)
        while w >= v and v < n:
            w -= v
            v += 1
        if v < n:
            edges.append((w + 1, v + 1))
    return Graph(n, edges)


@dataclass(frozen=True)
class DegreeSequenceSpec:
    n: int
    d_min: int
    d_max: int
    alpha: float
    seed: int = 0

    def __post_init__(self):
        if not 1 <= self.d_min <= self.d_max <= self.n - 1:
            raise ValueError(f"need 1 <= d_min <= d_max <= n-1, got {self}")
        if not self.alpha > 1.0:
            raise ValueError("alpha must exceed 1")

    def expected_mean(self) -> float:
        ds = range(self.d_min, self.d_max + 1)
        w = [d ** -self.alpha for d in ds]
        return sum(d * x for d, x in zip(ds, w)) / sum(w)


def sample_degrees(spec: DegreeSequenceSpec, rng: random.Random) -> list[int]:
    """Inverse-CDF draw from P(d) ~ d^-alpha on [d_min, d_max], sum made even."""
    ds = list(range(spec.d_min, spec.d_max + 1))
    cum = list(accumulate(d ** -spec.alpha for d in ds))
    total = cum[-1]
    deg = [ds[bisect_left(cum, rng.random() * total)] for _ in range(spec.n)]
    if sum(deg) % 2:
        room = [i for i, d in enumerate(deg) if d < spec.n - 1]
        deg[rng.choice(room)] += 1
    return deg


def _realise(deg: list[int], rng: random.Random, attempts: int) -> list[tuple[int, int]]:
    """Configuration model, then double-edge swaps to remove loops and multi-edges.

    Edges that still cannot be fixed after ``attempts`` tries each are dropped.
    """
    stubs = [v for v, d in enumerate(deg, 1) for _ in range(d)]
    rng.shuffle(stubs)
    good: list[tuple[int, int]] = []
    present: set[tuple[int, int]] = set()
    bad: list[tuple[int, int]] = []
    for i in range(0, len(stubs) - 1, 2):
        a, b = stubs[i], stubs[i + 1]
        key = (a, b) if a < b else (b, a)
        if a == b or key in present:
            bad.append((a, b))
        else:
            present.add(key)
            good.append(key)

    def ok(x: int, y: int) -> bool:
        return x != y and ((x, y) if x < y else (y, x)) not in present

    for a, b in bad:
        for _ in range(attempts):
            if not good:
                break
            j = rng.randrange(len(good))
            c, d = good[j]
            if rng.random() < 0.5:
                c, d = d, c
            # (a,b) + (c,d) -> (a,c) + (b,d); degrees are unchanged
            if not (ok(a, c) and ok(b, d)):
                continue
            e1 = (a, c) if a < c else (c, a)
            e2 = (b, d) if b < d else (d, b)
            if e1 == e2:
                continue
            present.discard(good[j])
            good[j] = e1
            good.append(e2)
            present.add(e1)
            present.add(e2)
            break
    return good


def gen_power_law(spec: DegreeSequenceSpec, attempts: int = 200, max_deviation: int = 2) -> Graph:
    """Simple graph whose degrees follow a sampled power-law sequence.

    The sampled sequence is kept on the result as ``target_degrees``.
    Raises :class:`Ungraphable` when some vertex ends up more than
    ``max_deviation`` away from its target degree.
    """
    rng = random.Random(spec.seed)
    target = sample_degrees(spec, rng)
    edges = _realise(target, rng, attempts)
    g = Graph(spec.n, edges)
    worst = max(abs(g.degree(v) - target[v - 1]) for v in g.vertices())
    if worst > max_deviation:
        raise Ungraphable(f"degree deviation {worst} > {max_deviation}")
    g.target_degrees = target
    return g


def fit_power_law(n: int, m: int, alpha: float = 2.5, d_max: int | None = None,
                  seed: int = 0) -> DegreeSequenceSpec:
    """Pick ``d_min`` so the expected edge count is as close to ``m`` as possible."""
    if d_max is None:
        d_max = max(1, n // 2)
    target = 2.0 * m / n
    lo, hi = 1, d_max
    while lo < hi:
        mid = (lo + hi) // 2
        if DegreeSequenceSpec(n, mid, d_max, alpha, seed).expected_mean() < target:
            lo = mid + 1
        else:
            hi = mid
    best = min(sorted({max(1, lo - 1), lo}), key=lambda d: abs(
        DegreeSequenceSpec(n, d, d_max, alpha, seed).expected_mean() - target))
    return DegreeSequenceSpec(n, best, d_max, alpha, seed)
