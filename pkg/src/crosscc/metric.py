"""The cross complexity pair, its halfplane classification, and the
refactoring indicator.

The pair is (nu, omega): nu is the cycle rank of the closed graph (McCabe's
number for a control-flow graph) and omega the weight of a minimum-weight
cycle basis, either exact or the fundamental-system upper bound of some
spanning tree. omega >= nu holds for every real graph since each basis
cycle weighs at least 1; the plane below that line is infeasible, the band
up to slope*nu holds valid graphs that are not non-trivial programs, and
everything above is ordinary program territory. The band slope defaults to
2 but is configuration: published descriptions of the boundary disagree
with each other, so we refuse to hard-code one reading.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .basis import CycleBasis, Provenance, horton_basis, tree_bound
from .cfg import ControlFlowGraph
from .errors import ZeroNu
from .graph import SpanningTree, WeightedDigraph, as_weight, cycle_rank, spanning_tree

DEFAULT_SLOPE = Fraction(2)


class Mode(enum.Enum):
    EXACT = "exact"
    TREE_BOUND = "treebound"


class Region(enum.Enum):
    INFEASIBLE = "infeasible"
    TRIVIAL_BAND = "trivial-band"
    NON_TRIVIAL = "non-trivial"


@dataclass(frozen=True)
class CrossComplexity:
    """The (nu, omega) pair plus how omega was obtained and where it plots."""

    nu: int
    omega_min: Fraction
    provenance: Provenance
    region: Region
    indicator: Fraction

    def as_tuple(self):
        return (self.nu, self.omega_min)


def classify_region(nu: int, omega, slope=DEFAULT_SLOPE) -> Region:
    """Halfplane classification of a (nu, omega) point.

    Below omega = nu is unconstructible (each basis cycle weighs >= 1);
    between the lines omega = nu and omega = slope*nu sit valid graphs that
    no non-trivial program produces; at or above slope*nu is program land.
    """
    omega = as_weight(omega)
    slope = as_weight(slope)
    if omega < nu:
        return Region.INFEASIBLE
    if omega < slope * nu:
        return Region.TRIVIAL_BAND
    return Region.NON_TRIVIAL


def refactor_indicator(c: CrossComplexity) -> Fraction:
    """omega/nu: distance-from-the-diagonal ratio, smaller is better."""
    if c.nu == 0:
        raise ZeroNu("indicator undefined for cycle rank 0")
    return c.omega_min / Fraction(c.nu)


def _make(nu: int, omega: Fraction, provenance: Provenance, slope) -> CrossComplexity:
    if nu == 0:
        raise ZeroNu("cross complexity needs cycle rank >= 1 "
                     "(a closed control-flow graph always has it)")
    indicator = omega / Fraction(nu)
    return CrossComplexity(nu=nu, omega_min=omega, provenance=provenance,
                           region=classify_region(nu, omega, slope),
                           indicator=indicator)


def cross_complexity(
    subject: Union[ControlFlowGraph, WeightedDigraph],
    mode: Mode = Mode.EXACT,
    slope=DEFAULT_SLOPE,
    tree: Optional[SpanningTree] = None,
) -> CrossComplexity:
    """Compute the pair for a control-flow graph or a bare weighted graph.

    ``mode=EXACT`` runs the exact minimum-basis algorithm; ``TREE_BOUND``
    sums the fundamental cycles of ``tree`` (or of the deterministic BFS
    tree rooted at the start vertex when none is given).
    """
    if isinstance(subject, ControlFlowGraph):
        graph = subject.graph
        root = subject.start
    else:
        graph = subject
        root = 0
    nu = cycle_rank(graph)
    if mode == Mode.EXACT:
        basis = horton_basis(graph)
    else:
        basis = tree_bound(graph, tree or spanning_tree(graph, root))
    return _make(nu, basis.total_weight, basis.provenance, slope)


def cross_complexity_of_basis(graph: WeightedDigraph, basis: CycleBasis,
                              slope=DEFAULT_SLOPE) -> CrossComplexity:
    """Wrap an already-computed basis as a CrossComplexity value."""
    return _make(cycle_rank(graph), basis.total_weight, basis.provenance, slope)
