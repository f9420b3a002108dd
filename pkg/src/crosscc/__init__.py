"""crosscc: cross cyclomatic complexity for programs and control-flow graphs.

The metric is the pair (cycle rank, minimum-weight cycle basis weight) of a
control-flow graph closed by a synthetic exit-to-start arc. The first
component is McCabe's cyclomatic complexity; the second describes how the
independent cycles are built, separating programs that McCabe's number
conflates.
"""

from .basis import (
    CycleBasis,
    Provenance,
    ShortestPathTable,
    all_pairs_shortest_paths,
    enumerate_simple_cycles,
    horton_basis,
    oracle_min_basis,
    tree_bound,
)
from .cfg import ControlFlowGraph, lower, lower_program, mcc
from .dot import DotGraphDoc, dump_cfg_dot, dump_dot, parse_dot
from .errors import CrossCCError
from .graph import (
    Cycle,
    Edge,
    IncidenceVector,
    SpanningTree,
    WeightedDigraph,
    cycle_rank,
    fundamental_cycle,
    gf2_rank,
    graph_weight,
    ring_sum,
    spanning_tree,
    to_incidence_vector,
)
from .metric import (
    CrossComplexity,
    Mode,
    Region,
    classify_region,
    cross_complexity,
    refactor_indicator,
)
from .minilang import parse
from .plot import halfplane_svg, points_csv
from .report import AnalysisReport, UnitRecord

__version__ = "0.1.0"

__all__ = [
    "CrossCCError",
    "WeightedDigraph",
    "Edge",
    "SpanningTree",
    "Cycle",
    "IncidenceVector",
    "graph_weight",
    "spanning_tree",
    "fundamental_cycle",
    "ring_sum",
    "to_incidence_vector",
    "gf2_rank",
    "cycle_rank",
    "CycleBasis",
    "Provenance",
    "ShortestPathTable",
    "all_pairs_shortest_paths",
    "horton_basis",
    "tree_bound",
    "oracle_min_basis",
    "enumerate_simple_cycles",
    "parse",
    "ControlFlowGraph",
    "lower",
    "lower_program",
    "mcc",
    "CrossComplexity",
    "Mode",
    "Region",
    "cross_complexity",
    "classify_region",
    "refactor_indicator",
    "DotGraphDoc",
    "parse_dot",
    "dump_dot",
    "dump_cfg_dot",
    "AnalysisReport",
    "UnitRecord",
    "halfplane_svg",
    "points_csv",
    "__version__",
]
