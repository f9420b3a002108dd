"""A small DOT-language subset for graph ingestion and export.

Supported shape::

    digraph name {
        start = "s";            // graph attributes; quotes optional
        exit = "r";
        addvirtual = true;      // default true; appends the (exit, start) arc
        a -> b [weight=1/2];    // missing weight defaults to 1
        c -> c_alone;           // nodes exist by first mention
        lonely;                 // bare node statement
        a -> b [weight=1, tree=true];   // mark a spanning-tree edge
    }

Vertex ids are assigned in first-mention order, edge ids in declaration
order; the synthetic arc, when added, is appended last with weight 0.
``tree=true`` marks let a fixture carry a specific spanning tree for the
upper-bound mode. ``//`` comments are skipped, so exported graphs can carry
node-label comments and still re-parse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .cfg import ControlFlowGraph
from .errors import DotSyntaxError, MissingStartExit
from .graph import SpanningTree, WeightedDigraph, as_weight

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+|//[^\n]*)
  | (?P<arrow>->)
  | (?P<punct>[{}\[\];=,])
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<word>(?:(?!->)[^\s{}\[\];=,"])+)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class DotGraphDoc:
    """A parsed document: the graph plus the control-flow metadata it carried."""

    name: str
    graph: WeightedDigraph
    node_names: Tuple[str, ...]
    start: Optional[int]
    exit: Optional[int]
    virtual_arc: Optional[int]
    tree_edge_ids: Tuple[int, ...]
    duplicate_arcs: Tuple[Tuple[str, str], ...]

    def node_id(self, name: str) -> int:
        return self.node_names.index(name)

    def is_cfg(self) -> bool:
        """True when the document can be analyzed as a control-flow graph:
        start and exit are declared and the closing arc was appended."""
        return (self.start is not None and self.exit is not None
                and self.virtual_arc is not None)

    def to_cfg(self) -> ControlFlowGraph:
        if self.start is None or self.exit is None:
            raise MissingStartExit(
                f"graph {self.name!r} has no start=/exit= attributes")
        if self.virtual_arc is None:
            raise MissingStartExit(
                f"graph {self.name!r} was parsed with addvirtual=false; "
                "control-flow analysis needs the closing arc")
        return ControlFlowGraph(
            graph=self.graph, start=self.start, exit=self.exit,
            virtual_arc=self.virtual_arc, node_labels=self.node_names,
            name=self.name)

    def marked_tree(self, root: Optional[int] = None) -> Optional[SpanningTree]:
        """The spanning tree carried by tree=true marks, if any were given."""
        if not self.tree_edge_ids:
            return None
        if root is None:
            root = self.start if self.start is not None else 0
        tree_ids = set(self.tree_edge_ids)
        if self.virtual_arc is not None:
            tree_ids.discard(self.virtual_arc)
        return SpanningTree.from_edge_ids(self.graph, root, tree_ids)


def _tokenize(text: str):
    tokens = []
    line = 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise DotSyntaxError(f"unexpected character {text[pos]!r}", line)
        pos = m.end()
        chunk = m.group(0)
        if m.lastgroup == "ws":
            line += chunk.count("\n")
            continue
        tokens.append((chunk, line))
    tokens.append(("", line))
    return tokens


def _unquote(text: str) -> str:
    if text.startswith('"') and text.endswith('"') and len(text) >= 2:
        return text[1:-1].replace('\\"', '"').replace("\\\\", "\\")
    return text


class _DotParser:
    def __init__(self, text: str, filename: Optional[str] = None):
        self.tokens = _tokenize(text)
        self.filename = filename
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0]

    def line(self):
        return self.tokens[self.pos][1]

    def next(self):
        tok = self.tokens[self.pos]
        if tok[0] != "":
            self.pos += 1
        return tok[0]

    def expect(self, text):
        got = self.peek()
        if got != text:
            raise DotSyntaxError(f"expected {text!r}, got {got or 'end of input'!r}",
                                 self.line(), None, self.filename)
        return self.next()

    def parse(self) -> DotGraphDoc:
        if self.peek() != "digraph":
            raise DotSyntaxError("input must begin with 'digraph'", self.line(),
                                 None, self.filename)
        self.next()
        name = "g"
        if self.peek() != "{":
            name = _unquote(self.next())
        self.expect("{")

        node_ids: Dict[str, int] = {}
        node_names: List[str] = []
        arcs: List[Tuple[int, int, Fraction, bool]] = []
        graph_attrs: Dict[str, str] = {}
        duplicates: List[Tuple[str, str]] = []
        seen_pairs = set()

        def intern(node: str) -> int:
            if node not in node_ids:
                node_ids[node] = len(node_names)
                node_names.append(node)
            return node_ids[node]

        while self.peek() != "}":
            if self.peek() == "":
                raise DotSyntaxError("missing closing '}'", self.line(), None,
                                     self.filename)
            first = _unquote(self.next())
            if self.peek() == "=":
                self.next()
                value = _unquote(self.next())
                graph_attrs[first] = value
                self._semi()
                continue
            if self.peek() == "->":
                self.next()
                target = _unquote(self.next())
                if not target or target in "{}[];=":
                    raise DotSyntaxError("arc needs a target node", self.line(),
                                         None, self.filename)
                if target == first:
                    raise DotSyntaxError(f"self-loop on {first!r} not allowed",
                                         self.line(), None, self.filename)
                attrs = self._attr_list()
                raw_weight = attrs.get("weight", "1")
                try:
                    weight = as_weight(raw_weight)
                except (ValueError, ZeroDivisionError):
                    raise DotSyntaxError(f"bad weight {raw_weight!r}",
                                         self.line(), None, self.filename)
                tree_mark = attrs.get("tree", "false").lower() in ("true", "1")
                src, dst = intern(first), intern(target)
                if (src, dst) in seen_pairs:
                    duplicates.append((first, target))
                seen_pairs.add((src, dst))
                arcs.append((src, dst, weight, tree_mark))
                self._semi()
                continue
            # bare node statement
            intern(first)
            self._attr_list()
            self._semi()
        self.expect("}")
        if self.peek() != "":
            raise DotSyntaxError("trailing input after closing '}'", self.line(),
                                 None, self.filename)

        start = graph_attrs.get("start")
        exit_ = graph_attrs.get("exit")
        addvirtual = graph_attrs.get("addvirtual", "true").lower() in ("true", "1")
        for attr, value in (("start", start), ("exit", exit_)):
            if value is not None and value not in node_ids:
                raise DotSyntaxError(
                    f"{attr}={value!r} names a vertex that never appears",
                    self.line(), None, self.filename)

        edges = [(src, dst, w) for src, dst, w, _ in arcs]
        tree_ids = tuple(i for i, (_, _, _, mark) in enumerate(arcs) if mark)
        virtual_arc = None
        if addvirtual and start is not None and exit_ is not None:
            if start == exit_:
                raise DotSyntaxError(
                    "start and exit must be distinct vertices",
                    self.line(), None, self.filename)
            virtual_arc = len(edges)
            edges.append((node_ids[exit_], node_ids[start], Fraction(0)))
        graph = WeightedDigraph(len(node_names), edges, directed=True)
        return DotGraphDoc(
            name=name, graph=graph, node_names=tuple(node_names),
            start=node_ids[start] if start is not None else None,
            exit=node_ids[exit_] if exit_ is not None else None,
            virtual_arc=virtual_arc, tree_edge_ids=tree_ids,
            duplicate_arcs=tuple(duplicates))

    def _attr_list(self) -> Dict[str, str]:
        attrs: Dict[str, str] = {}
        if self.peek() != "[":
            return attrs
        self.next()
        while self.peek() != "]":
            if self.peek() == "":
                raise DotSyntaxError("missing closing ']'", self.line(), None,
                                     self.filename)
            key = _unquote(self.next())
            self.expect("=")
            attrs[key] = _unquote(self.next())
            if self.peek() == ",":
                self.next()
        self.expect("]")
        return attrs

    def _semi(self):
        if self.peek() == ";":
            self.next()


def parse_dot(text: str, filename: Optional[str] = None) -> DotGraphDoc:
    """Parse the DOT subset; see the module docstring for the grammar."""
    return _DotParser(text, filename).parse()


def _fmt_weight(w: Fraction) -> str:
    return str(w)  # Fraction prints p/q, or just p when integral


def dump_dot(
    graph: WeightedDigraph,
    name: str = "g",
    node_names: Optional[Tuple[str, ...]] = None,
    start: Optional[int] = None,
    exit: Optional[int] = None,
    virtual_arc: Optional[int] = None,
    node_comments: Optional[Tuple[str, ...]] = None,
) -> str:
    """Export a graph in the same subset, preserving edge declaration order.

    The synthetic arc, when identified, is not re-declared: the header says
    ``addvirtual = true`` and a fresh parse will append it again at the same
    id, so dump/parse round-trips exactly.
    """
    names = node_names or tuple(f"v{i}" for i in range(graph.vertex_count))
    lines = [f"digraph {name} {{"]
    if start is not None:
        lines.append(f'    start = "{names[start]}";')
    if exit is not None:
        lines.append(f'    exit = "{names[exit]}";')
    lines.append(f"    addvirtual = {'true' if virtual_arc is not None else 'false'};")
    if node_comments:
        for i, comment in enumerate(node_comments):
            if comment:
                lines.append(f"    // {names[i]}: {comment}")
    mentioned = set()
    for e in graph.edges:
        if virtual_arc is not None and e.id == virtual_arc:
            continue
        lines.append(
            f'    "{names[e.source]}" -> "{names[e.target]}" '
            f"[weight={_fmt_weight(e.weight)}];")
        mentioned.add(e.source)
        mentioned.add(e.target)
    for v in range(graph.vertex_count):
        if v not in mentioned:
            lines.append(f'    "{names[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_cfg_dot(cfg: ControlFlowGraph) -> str:
    """Export a lowered control-flow graph with readable node names."""
    names = []
    for v in range(cfg.graph.vertex_count):
        if v == cfg.start:
            names.append("s")
        elif v == cfg.exit:
            names.append("r")
        else:
            names.append(f"n{v}")
    return dump_dot(
        cfg.graph, name=cfg.name or "g", node_names=tuple(names),
        start=cfg.start, exit=cfg.exit, virtual_arc=cfg.virtual_arc,
        node_comments=cfg.node_labels)
