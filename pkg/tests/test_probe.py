import math
import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hiddengraph.errors import DuplicateProbe, SelfProbe
from hiddengraph.probe import (EMPTY, SOLID, ProbeLedger, make_adjacency_oracle,
                               make_predicate_oracle, probe, reveal_all)


def test_adjacency_oracle_basics(example5):
    assert make_adjacency_oracle(2, {(1, 2)})(1, 2) is SOLID
    assert make_adjacency_oracle(2, set())(1, 2) is EMPTY
    assert example5(1, 3) is EMPTY
    assert example5(3, 1) is EMPTY
    assert example5(4, 5) is SOLID


@pytest.mark.parametrize("edges", [[(0, 1)], [(1, 3)], [(2, 2)]])
def test_adjacency_oracle_rejects_bad_edges(edges):
    with pytest.raises(ValueError):
        make_adjacency_oracle(2, edges)


def test_predicate_oracle_ratio():
    o = make_predicate_oracle([2, 4, 8], lambda a, b: max(a, b) == 2 * min(a, b))
    assert o.n == 3
    assert o(1, 2) is SOLID
    assert o(1, 3) is EMPTY
    assert o(2, 3) is SOLID


def test_predicate_oracle_equality_is_complete():
    o = make_predicate_oracle(["x"] * 3, lambda a, b: a == b)
    assert sorted(reveal_all(o)) == [(1, 2), (1, 3), (2, 3)]


def test_predicate_oracle_cosine_matches_matrix():
    rng = np.random.default_rng(3)
    vecs = rng.normal(size=(10, 3))
    vecs /= np.linalg.norm(vecs, axis=1, keepdims=True)
    o = make_predicate_oracle(list(vecs), lambda a, b: float(a @ b) >= 0.5)
    sim = vecs @ vecs.T
    want = {(i + 1, j + 1) for i in range(10) for j in range(i + 1, 10) if sim[i, j] >= 0.5}
    assert set(reveal_all(o)) == want
    assert len(want) > 0


def test_predicate_oracle_symmetry_check():
    o = make_predicate_oracle([1, 2], lambda a, b: a < b, check_symmetry=True)
    with pytest.raises(ValueError):
        o(1, 2)


def test_probe_records_and_rejects_repeats(example5):
    ledger = ProbeLedger(5)
    assert probe(example5, ledger, 1, 2) is SOLID
    assert ledger.probes == 1
    with pytest.raises(DuplicateProbe):
        probe(example5, ledger, 2, 1)
    with pytest.raises(SelfProbe):
        probe(example5, ledger, 3, 3)
    assert ledger.probes == 1


def test_ledger_records_sequence(example5):
    ledger = ProbeLedger(5, record=True)
    ledger.probe(example5, 1, 3)
    ledger.probe(example5, 2, 3)
    assert ledger.sequence == [(1, 3, EMPTY), (2, 3, SOLID)]
    assert (ledger.solid, ledger.empty) == (1, 1)


@given(st.integers(2, 12), st.data())
def test_full_revelation_reconstructs_edges(n, data):
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = set(data.draw(st.lists(st.sampled_from(pairs), unique=True)))
    o = make_adjacency_oracle(n, edges)
    ledger = ProbeLedger(n)
    order = pairs[:]
    random.Random(n).shuffle(order)
    found = {p for p in order if ledger.probe(o, *p) is SOLID}
    assert found == edges
    assert ledger.probes == len(ledger.probed_pairs) == math.comb(n, 2)
