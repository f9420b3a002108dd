"""Weighted simple digraphs, spanning trees, fundamental cycles, and GF(2) cycle-space algebra.

Edges carry dense integer ids and that id, not the endpoint pair, is an
edge's identity. Parallel arcs between the same vertices are therefore
representable, which keeps the control-flow construction total when the
synthetic exit-to-start arc duplicates an existing arc.

Cycles are unoriented edge-id sets: arc direction matters to control-flow
semantics, never to the cycle algebra. All weights are exact
``fractions.Fraction`` values so equality assertions are exact.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import (
    DimensionMismatch,
    DisconnectedGraph,
    EdgeInTree,
    EmptyGraph,
    NotACycle,
    NotASpanningTree,
    UnknownEdge,
)

WeightLike = Union[int, float, str, Fraction]


def as_weight(value: WeightLike) -> Fraction:
    """Coerce a number (or a string like ``1/2`` or ``0.5``) to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        # Floats that came from decimal text should stay what they look like.
        return Fraction(str(value))
    return Fraction(value)


@dataclass(frozen=True)
class Edge:
    """One arc: dense id, endpoints, exact weight. No loops (source != target)."""

    id: int
    source: int
    target: int
    weight: Fraction

    def other(self, vertex: int) -> int:
        return self.target if vertex == self.source else self.source


class WeightedDigraph:
    """Immutable weighted digraph over dense vertex ids ``0..vertex_count-1``.

    ``directed=False`` marks a graph whose arcs should be read as unoriented
    edges; the algorithms here always traverse the underlying undirected
    graph either way.
    """

    __slots__ = ("vertex_count", "edges", "directed", "_incidence")

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[Union[Edge, tuple]],
        directed: bool = True,
    ):
        if vertex_count < 0:
            raise ValueError("vertex_count must be >= 0")
        built = []
        for i, spec in enumerate(edges):
            if isinstance(spec, Edge):
                e = spec
            else:
                source, target = spec[0], spec[1]
                weight = as_weight(spec[2]) if len(spec) > 2 else Fraction(1)
                e = Edge(i, source, target, weight)
            if e.id != i:
                raise ValueError(f"edge ids must be dense and ordered, got {e.id} at {i}")
            if e.source == e.target:
                raise ValueError(f"loop edge {e.id} at vertex {e.source} not allowed")
            if not (0 <= e.source < vertex_count and 0 <= e.target < vertex_count):
                raise ValueError(f"edge {e.id} endpoint out of range")
            built.append(e)
        self.vertex_count = vertex_count
        self.edges = tuple(built)
        self.directed = directed
        incidence = [[] for _ in range(vertex_count)]
        for e in self.edges:
            incidence[e.source].append(e)
            incidence[e.target].append(e)
        # Ascending edge id per vertex makes every traversal deterministic.
        self._incidence = tuple(tuple(sorted(inc, key=lambda e: e.id)) for inc in incidence)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def edge(self, edge_id: int) -> Edge:
        if not (0 <= edge_id < len(self.edges)):
            raise UnknownEdge(f"no edge with id {edge_id}")
        return self.edges[edge_id]

    def incident(self, vertex: int) -> Sequence[Edge]:
        """Edges touching ``vertex`` (unoriented view), ascending edge id."""
        return self._incidence[vertex]

    def weight_of(self, edge_ids: Iterable[int]) -> Fraction:
        return sum((self.edge(i).weight for i in edge_ids), Fraction(0))

    def is_connected(self) -> bool:
        if self.vertex_count <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for e in self._incidence[v]:
                u = e.other(v)
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == self.vertex_count

    def require_connected(self) -> None:
        if self.vertex_count == 0:
            raise EmptyGraph("graph has no vertices")
        if not self.is_connected():
            raise DisconnectedGraph("graph is not connected (unoriented)")

    def __repr__(self):
        kind = "digraph" if self.directed else "graph"
        return f"WeightedDigraph({kind}, V={self.vertex_count}, E={len(self.edges)})"


def graph_weight(g: WeightedDigraph) -> Fraction:
    """Total weight of the edge set."""
    return sum((e.weight for e in g.edges), Fraction(0))


@dataclass(frozen=True)
class SpanningTree:
    """A spanning tree of ``host``: edge-id set plus a parent map rooted at ``root``.

    ``parent[v] = (parent_vertex, edge_id)`` for every vertex except the root.
    """

    host: WeightedDigraph
    root: int
    tree_edges: frozenset
    parent: Mapping[int, tuple]

    @property
    def weight(self) -> Fraction:
        return self.host.weight_of(self.tree_edges)

    def chords(self) -> list:
        """Non-tree edge ids in ascending order."""
        return [e.id for e in self.host.edges if e.id not in self.tree_edges]

    def path_to_root(self, vertex: int) -> frozenset:
        """Edge ids of the unique tree path from ``vertex`` up to the root."""
        ids = []
        v = vertex
        while v != self.root:
            p, eid = self.parent[v]
            ids.append(eid)
            v = p
        return frozenset(ids)

    def path_between(self, u: int, v: int) -> frozenset:
        """Edge ids of the unique tree path between ``u`` and ``v``.

        The shared climb above the meeting point cancels under symmetric
        difference, which is exactly the u-v path.
        """
        return self.path_to_root(u) ^ self.path_to_root(v)

    @classmethod
    def from_edge_ids(cls, g: WeightedDigraph, root: int, edge_ids: Iterable[int]) -> "SpanningTree":
        """Build a tree from an explicit edge set, validating it spans ``g``."""
        ids = frozenset(edge_ids)
        for i in ids:
            g.edge(i)  # raises UnknownEdge
        if g.vertex_count == 0:
            raise EmptyGraph("graph has no vertices")
        if not (0 <= root < g.vertex_count):
            raise ValueError(f"root {root} out of range")
        if len(ids) != g.vertex_count - 1:
            raise NotASpanningTree(
                f"{len(ids)} edges cannot span {g.vertex_count} vertices"
            )
        parent = {}
        seen = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for e in g.incident(v):
                if e.id not in ids:
                    continue
                u = e.other(v)
                if u not in seen:
                    seen.add(u)
                    parent[u] = (v, e.id)
                    queue.append(u)
        if len(seen) != g.vertex_count:
            raise NotASpanningTree("edge set does not reach every vertex acyclically")
        return cls(host=g, root=root, tree_edges=ids, parent=parent)


def spanning_tree(g: WeightedDigraph, root: int = 0) -> SpanningTree:
    """BFS spanning tree rooted at ``root``, ignoring arc direction.

    Neighbors are explored in ascending edge id, so the result is a pure
    function of the graph: reruns and platforms agree bit for bit.
    """
    if g.vertex_count == 0:
        raise EmptyGraph("graph has no vertices")
    if not (0 <= root < g.vertex_count):
        raise ValueError(f"root {root} out of range")
    parent = {}
    tree_ids = set()
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for e in g.incident(v):
            u = e.other(v)
            if u not in seen:
                seen.add(u)
                parent[u] = (v, e.id)
                tree_ids.add(e.id)
                queue.append(u)
    if len(seen) != g.vertex_count:
        raise DisconnectedGraph(
            f"only {len(seen)} of {g.vertex_count} vertices reachable from {root}"
        )
    return SpanningTree(host=g, root=root, tree_edges=frozenset(tree_ids), parent=parent)


@dataclass(frozen=True)
class Cycle:
    """An unoriented simple cycle as an edge-id set with its cached exact weight."""

    edge_ids: frozenset
    weight: Fraction

    @classmethod
    def from_edges(cls, g: WeightedDigraph, edge_ids: Iterable[int]) -> "Cycle":
        """Validate that ``edge_ids`` form one simple closed walk and build the cycle."""
        ids = frozenset(edge_ids)
        if not ids:
            raise NotACycle("empty edge set")
        degree = {}
        for i in ids:
            e = g.edge(i)
            degree[e.source] = degree.get(e.source, 0) + 1
            degree[e.target] = degree.get(e.target, 0) + 1
        if any(d != 2 for d in degree.values()):
            raise NotACycle("some vertex does not have degree 2 in the edge set")
        # Degree-2 everywhere means a disjoint union of cycles; a single
        # cycle additionally has as many edges as touched vertices and is
        # connected. Walk it to check connectivity.
        if len(ids) != len(degree):
            raise NotACycle("edge and vertex counts differ; not a single cycle")
        start = min(degree)
        visited_edges = set()
        v = start
        while True:
            nxt = None
            for e in g.incident(v):
                if e.id in ids and e.id not in visited_edges:
                    nxt = e
                    break
            if nxt is None:
                break
            visited_edges.add(nxt.id)
            v = nxt.other(v)
            if v == start:
                break
        if len(visited_edges) != len(ids):
            raise NotACycle("edge set is a union of disjoint cycles, not one cycle")
        return cls(edge_ids=ids, weight=g.weight_of(ids))

    def canonical_key(self) -> tuple:
        return tuple(sorted(self.edge_ids))


def fundamental_cycle(t: SpanningTree, e: Edge) -> Cycle:
    """The unique unoriented cycle in ``tree + e``: tree path between e's endpoints plus e."""
    if e.id in t.tree_edges:
        raise EdgeInTree(f"edge {e.id} is a tree edge")
    ids = t.path_between(e.source, e.target) | {e.id}
    return Cycle.from_edges(t.host, ids)


def ring_sum(a: Iterable[int], b: Iterable[int]) -> frozenset:
    """Symmetric difference of two edge-id sets: addition in the GF(2) cycle space."""
    return frozenset(a) ^ frozenset(b)


@dataclass(frozen=True)
class IncidenceVector:
    """A packed bit vector over edge ids: bit i set iff edge i is in the set."""

    bits: int
    length: int

    @classmethod
    def from_edge_ids(cls, edge_ids: Iterable[int], length: int) -> "IncidenceVector":
        bits = 0
        for i in edge_ids:
            if not (0 <= i < length):
                raise UnknownEdge(f"edge id {i} outside 0..{length - 1}")
            bits |= 1 << i
        return cls(bits=bits, length=length)

    @classmethod
    def from_bitstring(cls, text: str) -> "IncidenceVector":
        """Parse e.g. ``1110000``; leftmost character is edge 0."""
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"invalid bit {ch!r}")
        return cls(bits=bits, length=len(text))

    def bit(self, i: int) -> int:
        return (self.bits >> i) & 1

    def __xor__(self, other: "IncidenceVector") -> "IncidenceVector":
        if self.length != other.length:
            raise DimensionMismatch(f"lengths {self.length} and {other.length} differ")
        return IncidenceVector(bits=self.bits ^ other.bits, length=self.length)

    def to_bitstring(self) -> str:
        return "".join(str(self.bit(i)) for i in range(self.length))


def to_incidence_vector(c: Cycle, g: WeightedDigraph) -> IncidenceVector:
    """Incidence vector of a cycle over the host graph's edge ids."""
    return IncidenceVector.from_edge_ids(c.edge_ids, g.edge_count)


class Gf2Basis:
    """Incremental GF(2) elimination over packed bit vectors.

    Keeps one reduced vector per pivot (highest set bit). ``try_add``
    reduces the candidate by existing pivots; a surviving nonzero vector is
    independent and gets stored, a vanished one was dependent.
    """

    def __init__(self):
        self._pivots = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def try_add(self, bits: int) -> bool:
        v = bits
        while v:
            msb = v.bit_length() - 1
            if msb not in self._pivots:
                self._pivots[msb] = v
                return True
            v ^= self._pivots[msb]
        return False


def gf2_rank(vectors: Sequence[IncidenceVector]) -> int:
    """Rank of the vector set over GF(2), by elimination with XOR row operations."""
    if not vectors:
        return 0
    length = vectors[0].length
    basis = Gf2Basis()
    for v in vectors:
        if v.length != length:
            raise DimensionMismatch(f"lengths {length} and {v.length} differ")
        basis.try_add(v.bits)
    return basis.rank


def cycle_rank(g: WeightedDigraph) -> int:
    """Dimension of the cycle space of a connected graph: #E - #V + 1."""
    g.require_connected()
    return g.edge_count - g.vertex_count + 1
