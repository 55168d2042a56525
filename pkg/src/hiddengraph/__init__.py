"""Probe-efficient top-k degree and K-core discovery in hidden graphs."""

from .bookkeeping import VertexBook
from .cores import CoreNumbers, core_decomposition, k_core, peel_oracle
from .errors import (DuplicateProbe, EmptyInput, Exhausted, HiddenGraphError, InvalidK,
                     MalformedLine, NotPresent, SelfProbe, Ungraphable)
from .graph import Graph, LabeledGraph
from .graphio import DegreeSequenceSpec, gen_gnp, gen_power_law, load_edge_list
from .gsoe import TopKResult, gsoe_top_k
from .hidden_core import CoreQueryResult, HiddenCore, hidden_core
from .intervals import IntervalSet
from .probe import (EMPTY, SOLID, AdjacencyOracle, HiddenGraphOracle, PredicateOracle,
                    ProbeLedger, ProbeResult, make_adjacency_oracle, make_predicate_oracle,
                    probe)

__version__ = "0.1.0"
