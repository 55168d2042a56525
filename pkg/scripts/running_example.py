"""Replay the 5-vertex running example for K=3 and K=4 and print every probe."""

from hiddengraph.hidden_core import HiddenCore
from hiddengraph.probe import AdjacencyOracle, ProbeLedger

EDGES = [(1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]


def show(K: int) -> None:
    oracle = AdjacencyOracle(5, EDGES)
    ledger = ProbeLedger(5, record=True)
    hc = HiddenCore(oracle, K, ledger, record=True)
    res = hc.run()
    print(f"K={K}")
    for u, v, r in ledger.sequence:
        print(f"  f({u},{v}) = {r.name.lower()}")
    for snap in hc.round_snapshots:
        print(f"  after round {snap['round']} (C={snap['C']})")
        print("    u  s  e  state  pd  status")
        for u in range(5):
            print(f"    {u + 1}  {snap['s'][u]}  {snap['e'][u]}  {snap['state'][u]:>5}  "
                  f"{snap['pd'][u]:>2}  {snap['status'][u]}")
    verdict = f"core {sorted(res.vertices)}" if res.exists else f"no core ({res.reason})"
    print(f"  {verdict}; probes={res.probes}/{res.max_probes} gain={res.gain:.0%}\n")


if __name__ == "__main__":
    for K in (4, 3):
        show(K)
