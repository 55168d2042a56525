"""Per-vertex set of destinations that have not been probed yet.

The set is stored as disjoint closed intervals ``[lo, hi]`` kept sorted by
left endpoint in two parallel arrays.  Lookup is a binary search over the
left endpoints, so every update costs O(log #intervals) comparisons.  Taking
the destination from an end of an interval never splits it; splits only
happen when a vertex is removed from the middle (a symmetric update caused
by somebody else's probe).
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass

from .errors import Exhausted, NotPresent


@dataclass
class OpCounter:
    comparisons: int = 0
    touches: int = 0


class _CountingKey:
    # bisect only ever evaluates ``key < item`` for bisect_right
    __slots__ = ("value", "counter")

    def __init__(self, value: int, counter: OpCounter):
        self.value = value
        self.counter = counter

    def __lt__(self, other: int) -> bool:
        self.counter.comparisons += 1
        return self.value < other


class IntervalSet:
    __slots__ = ("_lo", "_hi", "_size", "counter")

    def __init__(self, n: int, self_id: int, counter: OpCounter | None = None):
        if not 1 <= self_id <= n:
            raise ValueError(f"self_id {self_id} outside [1, {n}]")
        self._lo: list[int] = []
        self._hi: list[int] = []
        if self_id > 1:
            self._lo.append(1)
            self._hi.append(self_id - 1)
        if self_id < n:
            self._lo.append(self_id + 1)
            self._hi.append(n)
        self._size = n - 1
        self.counter = counter

    def __len__(self) -> int:
        """Number of destinations still available."""
        return self._size

    def __bool__(self) -> bool:
        return self._size > 0

    def __contains__(self, v: int) -> bool:
        i = bisect_right(self._lo, v) - 1
        return i >= 0 and v <= self._hi[i]

    def __iter__(self):
        for lo, hi in zip(self._lo, self._hi):
            yield from range(lo, hi + 1)

    def __repr__(self) -> str:
        return f"IntervalSet({self.intervals()})"

    @property
    def interval_count(self) -> int:
        return len(self._lo)

    def intervals(self) -> list[tuple[int, int]]:
        return list(zip(self._lo, self._hi))

    def select(self) -> int:
        """Next destination: left endpoint of the first interval.  No mutation."""
        if self.counter is not None:
            self.counter.touches += 1
        if not self._lo:
            raise Exhausted("no destinations left")
        return self._lo[0]

    def remove(self, v: int) -> None:
        lo_, hi_ = self._lo, self._hi
        if self.counter is None:
            i = bisect_right(lo_, v) - 1
        else:
            i = bisect_right(lo_, _CountingKey(v, self.counter)) - 1
            self.counter.comparisons += 1  # the containment test below
        if i < 0 or v > hi_[i]:
            raise NotPresent(f"{v} is not available")
        lo, hi = lo_[i], hi_[i]
        if lo == hi:
            del lo_[i]
            del hi_[i]
        elif v == lo:
            lo_[i] = v + 1
        elif v == hi:
            hi_[i] = v - 1
        else:
            hi_[i] = v - 1
            lo_.insert(i + 1, v + 1)
            hi_.insert(i + 1, hi)
        self._size -= 1


def new_interval_set(n: int, self_id: int) -> IntervalSet:
    return IntervalSet(n, self_id)


def select_destination(s: IntervalSet) -> int:
    return s.select()


def remove(s: IntervalSet, v: int) -> IntervalSet:
    s.remove(v)
    return s
