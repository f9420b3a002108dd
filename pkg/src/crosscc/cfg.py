"""Lower MiniLang functions to control-flow graphs.

Every function becomes a directed graph with one start node s, one exit
node r, and a synthetic arc (r, s) appended last so the graph is strongly
connected. Real arcs weigh 1; the synthetic arc weighs 0, so cycle weights
count executable arcs only (a cycle through the synthetic arc is just an
entry-to-exit path).

Lowering rules, chosen so the one-construct functions land on the minimal
shapes:

* maximal straight-line statement runs collapse into a single node;
* ``if`` turns the current node into the branch point, with the false arc
  going straight to the join when there is no else;
* loop bodies exit to both the loop condition (back arc) and the code after
  the loop, so a bare ``while`` is three nodes and three arcs; when a body
  never falls through, the condition's false arc becomes the loop exit
  instead, so the loop's branch is never lost;
* ``switch`` lowers to a cascade of two-way tests, one per alternative
  including ``default``, which makes each case label count toward the
  cyclomatic number the way complexity checkers count them;
* ``break``/``continue``/bare ``return`` are pure control transfers and
  materialize no node of their own.

Unreachable statements, and nodes that cannot reach the exit, are hard
errors: the metric's strong-connectivity premise does not tolerate them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from . import minilang as ast
from .errors import UnreachableCode, UnresolvedLabel
from .graph import WeightedDigraph, cycle_rank

EXIT_LABEL = "exit"


@dataclass(frozen=True)
class ControlFlowGraph:
    """A lowered function: digraph + start/exit vertices + the synthetic arc id."""

    graph: WeightedDigraph
    start: int
    exit: int
    virtual_arc: int
    node_labels: Tuple[str, ...]
    name: str = ""

    @property
    def real_edge_count(self) -> int:
        return self.graph.edge_count - 1


class _LoopContext:
    def __init__(self, cond_node: int, label: Optional[str]):
        self.cond_node = cond_node
        self.label = label
        self.breaks: List[int] = []


class _SwitchContext:
    def __init__(self):
        self.breaks: List[int] = []


class _Lowerer:
    def __init__(self, fn: ast.Function, filename: str):
        self.fn = fn
        self.filename = filename
        self.labels: List[str] = []
        self.positions: List[Tuple[int, int]] = []
        self.arcs: List[Tuple[int, int]] = []
        self.current: Optional[int] = None
        self.pending: List[int] = []
        self.alive = True
        self.exit_sources: List[int] = []
        self.contexts: List[object] = []

    # node/arc plumbing --------------------------------------------------

    def _new_node(self, label: str, pos) -> int:
        node = len(self.labels)
        self.labels.append(label)
        self.positions.append(pos)
        return node

    def _arc(self, src: int, dst: int) -> None:
        self.arcs.append((src, dst))

    def _enter_node(self, label: str, pos) -> int:
        """Materialize a node at the current position and make it current."""
        node = self._new_node(label, pos)
        if self.current is not None:
            self._arc(self.current, node)
        else:
            for src in self.pending:
                self._arc(src, node)
        self.pending = []
        self.current = node
        return node

    def _append(self, text: str, pos) -> int:
        """Extend the current straight-line node, creating one if needed."""
        self._require_alive(pos)
        if self.current is not None:
            if self.labels[self.current]:
                self.labels[self.current] += "; " + text
            else:
                self.labels[self.current] = text
            return self.current
        return self._enter_node(text, pos)

    def _exits(self) -> List[int]:
        """Sources of the dangling out-arcs at this point (empty if dead)."""
        if not self.alive:
            return []
        if self.current is not None:
            return [self.current]
        return list(self.pending)

    def _resume(self, sources: List[int]) -> None:
        self.current = None
        self.pending = list(sources)
        self.alive = bool(sources)

    def _kill(self) -> None:
        self.current = None
        self.pending = []
        self.alive = False

    def _require_alive(self, pos) -> None:
        if not self.alive:
            raise UnreachableCode("statement is unreachable", pos[0], pos[1],
                                  self.filename)

    def _at_entry(self) -> bool:
        return not self.labels

    def _transfer_to(self, target: int, pos) -> None:
        """Wire the dangling position to an existing node (continue-style)."""
        self._require_alive(pos)
        sources = self._exits()
        if not sources and self._at_entry():
            sources = [self._enter_node("", pos)]
        if target in sources:
            # A direct self-arc (continue at the top of a loop body) is not
            # representable in a loop-free edge set; give it a node.
            hop = self._enter_node("", pos)
            sources = [hop]
        for src in sources:
            self._arc(src, target)
        self._kill()

    def _transfer_to_exit(self, pos) -> None:
        self._require_alive(pos)
        sources = self._exits()
        if not sources and self._at_entry():
            sources = [self._enter_node("", pos)]
        self.exit_sources.extend(sources)
        self._kill()

    def _collect_breaks(self, pos, label: Optional[str]) -> None:
        self._require_alive(pos)
        ctx = self._find_break_context(label, pos)
        ctx.breaks.extend(self._exits())
        self._kill()

    def _find_break_context(self, label: Optional[str], pos):
        if label is None:
            if self.contexts:
                return self.contexts[-1]
        else:
            for ctx in reversed(self.contexts):
                if isinstance(ctx, _LoopContext) and ctx.label == label:
                    return ctx
        raise UnresolvedLabel("no enclosing loop or switch", pos[0], pos[1],
                              self.filename)

    def _find_continue_target(self, label: Optional[str], pos) -> int:
        for ctx in reversed(self.contexts):
            if isinstance(ctx, _LoopContext):
                if label is None or ctx.label == label:
                    return ctx.cond_node
        raise UnresolvedLabel("no enclosing loop", pos[0], pos[1], self.filename)

    # statement lowering -------------------------------------------------

    def lower_block(self, block: ast.Block) -> None:
        for stmt in block.stmts:
            self.lower_stmt(stmt)

    def lower_stmt(self, stmt, label: Optional[str] = None) -> None:
        pos = (stmt.line, stmt.col)
        if isinstance(stmt, ast.ExprStmt):
            self._append(stmt.text, pos)
        elif isinstance(stmt, ast.Return):
            self._require_alive(pos)
            if stmt.value is not None:
                self._append(f"return {stmt.value}", pos)
            self._transfer_to_exit(pos)
        elif isinstance(stmt, ast.Break):
            self._collect_breaks(pos, stmt.label)
        elif isinstance(stmt, ast.Continue):
            target = self._find_continue_target(stmt.label, pos)
            self._transfer_to(target, pos)
        elif isinstance(stmt, ast.If):
            self.lower_if(stmt)
        elif isinstance(stmt, ast.While):
            self.lower_loop(f"while ({stmt.cond})", stmt.body, None, pos, label)
        elif isinstance(stmt, ast.For):
            self._require_alive(pos)
            if stmt.init:
                self._append(stmt.init, pos)
            cond = stmt.cond if stmt.cond is not None else ""
            self.lower_loop(f"for ({cond})", stmt.body, stmt.step, pos, label)
        elif isinstance(stmt, ast.Switch):
            self.lower_switch(stmt)
        elif isinstance(stmt, ast.Labeled):
            self.lower_stmt(stmt.stmt, label=stmt.label)
        else:  # pragma: no cover - parser produces no other nodes
            raise TypeError(f"unknown statement {stmt!r}")

    def lower_if(self, stmt: ast.If) -> None:
        pos = (stmt.line, stmt.col)
        branch = self._append(f"if ({stmt.cond})", pos)
        self._resume([branch])
        self.lower_block(stmt.then)
        then_exits = self._exits()
        if stmt.orelse is not None:
            self._resume([branch])
            self.lower_block(stmt.orelse)
            else_exits = self._exits()
        else:
            else_exits = [branch]
        self._resume(then_exits + else_exits)

    def lower_loop(self, head_label: str, body: ast.Block, step: Optional[str],
                   pos, label: Optional[str]) -> None:
        self._require_alive(pos)
        cond = self._enter_node(head_label, pos)
        ctx = _LoopContext(cond_node=cond, label=label)
        self.contexts.append(ctx)
        self._resume([cond])
        if body.stmts:
            self.lower_block(body)
        else:
            self._enter_node("", pos)
        if self.alive and step:
            self._append(step, pos)
        body_exits = self._exits()
        self.contexts.pop()
        for src in body_exits:
            self._arc(src, cond)  # back arc; the same nodes also exit the loop
        if body_exits:
            loop_exits = body_exits
        else:
            # Body never falls through (it returns, breaks, or loops back
            # unconditionally), so the condition's false arc is the only
            # way out of the loop.
            loop_exits = [cond]
        self._resume(loop_exits + ctx.breaks)

    def lower_switch(self, stmt: ast.Switch) -> None:
        pos = (stmt.line, stmt.col)
        self._require_alive(pos)
        alternatives = [(f"case {c.label}", c.body, (c.line, c.col)) for c in stmt.cases]
        if stmt.default is not None:
            alternatives.append(("default", stmt.default, pos))
        ctx = _SwitchContext()
        self.contexts.append(ctx)
        join_exits: List[int] = []
        test = None
        for i, (test_label, body, body_pos) in enumerate(alternatives):
            if i == 0:
                test = self._append(f"switch ({stmt.scrutinee}) {test_label}", pos)
            else:
                self._resume([test])
                test = self._enter_node(test_label, body_pos)
            self._resume([test])
            self.lower_block(body)
            join_exits.extend(self._exits())
        self.contexts.pop()
        self._resume(join_exits + [test] + ctx.breaks)

    # assembly -----------------------------------------------------------

    def build(self) -> ControlFlowGraph:
        self.lower_block(self.fn.body)
        fn_pos = (self.fn.line, self.fn.col)
        if self._at_entry():
            self._enter_node("", fn_pos)
        tail_sources = self._exits()
        exit_node = self._new_node(EXIT_LABEL, fn_pos)
        for src in tail_sources:
            self._arc(src, exit_node)
        for src in self.exit_sources:
            self._arc(src, exit_node)
        if not tail_sources and not self.exit_sources:
            raise UnreachableCode("function exit is unreachable (no path leaves "
                                  "the loops)", self.fn.line, self.fn.col,
                                  self.filename)
        start = 0
        self._check_reachability(start, exit_node)
        edges = [(src, dst, Fraction(1)) for src, dst in self.arcs]
        virtual_arc = len(edges)
        edges.append((exit_node, start, Fraction(0)))
        graph = WeightedDigraph(len(self.labels), edges, directed=True)
        return ControlFlowGraph(graph=graph, start=start, exit=exit_node,
                                virtual_arc=virtual_arc,
                                node_labels=tuple(self.labels),
                                name=self.fn.name)

    def _check_reachability(self, start: int, exit_node: int) -> None:
        n = len(self.labels)
        forward = [[] for _ in range(n)]
        backward = [[] for _ in range(n)]
        for src, dst in self.arcs:
            forward[src].append(dst)
            backward[dst].append(src)

        def closure(adj, origin):
            seen = {origin}
            stack = [origin]
            while stack:
                v = stack.pop()
                for u in adj[v]:
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            return seen

        from_start = closure(forward, start)
        to_exit = closure(backward, exit_node)
        for v in range(n):
            if v not in from_start or v not in to_exit:
                line, col = self.positions[v] if v < len(self.positions) else (None, None)
                raise UnreachableCode(
                    f"node {self.labels[v]!r} lies on no start-to-exit path",
                    line, col, self.filename)


def lower(fn: ast.Function, filename: str = "<input>") -> ControlFlowGraph:
    """Lower one parsed function to its control-flow graph."""
    return _Lowerer(fn, filename).build()


def lower_program(program: ast.Program) -> List[ControlFlowGraph]:
    """Lower every function of a parsed file, in source order."""
    return [lower(fn, program.filename) for fn in program.functions]


def mcc(cfg: ControlFlowGraph) -> int:
    """McCabe's cyclomatic complexity: the cycle rank of the closed graph.

    Equals #real arcs - #nodes + 2; the synthetic arc makes this the plain
    cycle-space dimension of the stored graph.
    """
    return cycle_rank(cfg.graph)
