"""Zero-sum flows: nowhere-zero integer edge values whose incident sums
vanish at every vertex.

A zero-sum k-flow uses values in {+-1, ..., +-(k-1)}.  The bounded solver is
a complete backtracking search with constraint propagation: whenever a
vertex has a single undecided incident edge, that edge's value is forced to
cancel the vertex's partial sum, and a vertex whose partial sum cannot be
cancelled by its remaining undecided edges prunes the branch.  Free choices
are therefore only needed outside a spanning forest.

Existence facts used by callers (validated empirically by the test sweeps):
a connected non-bipartite graph has a zero-sum flow iff removing any single
edge leaves no bipartite component; 2-edge-connected bipartite graphs admit
zero-sum 6-flows; any graph with a zero-sum flow has a zero-sum 12-flow.
"""

from __future__ import annotations

from dataclasses import dataclass

from .assignments import EdgeAssignment
from .errors import InvalidAssignmentError, PreconditionError, ResourceCapError
from .graph_core import Graph, bipartition, components, induced_subgraph


@dataclass(frozen=True)
class FlowProblem:
    """A graph together with the value bound k (values in +-1..+-(k-1))."""

    graph: Graph
    k: int

    def __post_init__(self):
        if self.k < 2:
            raise PreconditionError("flow bound k must be >= 2")


def flow_exists_nonbipartite_test(g: Graph) -> bool:
    """Existence test for connected non-bipartite graphs: a zero-sum flow
    exists iff no single edge removal leaves a bipartite component."""
    comps = components(g)
    if len(comps) != 1 or g.n == 0:
        raise PreconditionError("existence test requires a connected graph")
    if bipartition(g, comps[0]).valid:
        raise PreconditionError(
            "existence test requires a non-bipartite graph; use the bounded solver instead")
    for drop in range(g.m):
        edges = tuple(e for i, e in enumerate(g.edges) if i != drop)
        h = Graph(g.n, edges)
        for comp in components(h):
            if bipartition(h, comp).valid:
                return False
    return True


def find_zero_sum_flow(
    g: Graph, k: int, node_budget: int | None = None
) -> EdgeAssignment | None:
    """Find a zero-sum flow with values in {+-1, ..., +-(k-1)}, or prove
    there is none within that bound.

    Returns None only after a complete search, so absence is certified.  A
    node_budget caps the number of value assignments explored; exceeding it
    raises ResourceCapError (never a false "none").  Disconnected graphs are
    solved per component.
    """
    if k < 2:
        raise PreconditionError("flow bound k must be >= 2")
    values = [0] * g.m
    budget = [node_budget if node_budget is not None else -1]
    for comp in components(g):
        sub, vmap, emap = induced_subgraph(g, comp)
        sol = _solve_component(sub, k, budget)
        if sol is None:
            return None
        for j, val in enumerate(sol):
            values[emap[j]] = val
    return EdgeAssignment(tuple(values), "flow")


def verify_flow(g: Graph, f: EdgeAssignment) -> bool:
    """True iff f is nowhere zero on E(g) and every vertex sum is zero."""
    f.check_domain(g)
    if any(v == 0 for v in f.values):
        raise InvalidAssignmentError("flow values must be nonzero")
    sums = [0] * g.n
    for idx, (u, v) in enumerate(g.edges):
        sums[u] += f.values[idx]
        sums[v] += f.values[idx]
    return all(s == 0 for s in sums)


def _value_order(k: int) -> tuple[int, ...]:
    out = []
    for v in range(1, k):
        out.append(v)
        out.append(-v)
    return tuple(out)


def _solve_component(g: Graph, k: int, budget: list[int]) -> list[int] | None:
    """Complete bounded search on one connected graph.  budget[0] < 0 means
    unlimited; otherwise it is decremented per assignment."""
    m = g.m
    if m == 0:
        return []
    # free choices happen only on edges outside a spanning forest; forest
    # edges are filled in by unit propagation once their subtree is decided
    forest: set[int] = set()
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            v = stack.pop()
            for u, eidx in g.incidence[v]:
                if not seen[u]:
                    seen[u] = True
                    forest.add(eidx)
                    stack.append(u)
    order = [i for i in range(m) if i not in forest] + sorted(forest)
    values = [0] * m
    undecided = [g.degree(v) for v in range(g.n)]
    partial = [0] * g.n
    limit = k - 1
    vals = _value_order(k)

    def feasible(v: int) -> bool:
        if undecided[v] == 0:
            return partial[v] == 0
        return abs(partial[v]) <= limit * undecided[v]

    def assign(eidx: int, val: int, trail: list[int]) -> bool:
        """Set one edge and run forcing to a fixed point.  Records every set
        edge on the trail; returns False on contradiction."""
        queue = [(eidx, val)]
        while queue:
            e, x = queue.pop()
            if values[e] != 0:
                if values[e] != x:
                    return False
                continue
            if budget[0] == 0:
                raise ResourceCapError("zero-sum flow search exceeded its node budget")
            if budget[0] > 0:
                budget[0] -= 1
            values[e] = x
            trail.append(e)
            # update both endpoints before any check so undo stays symmetric
            for v in g.edges[e]:
                partial[v] += x
                undecided[v] -= 1
            for v in g.edges[e]:
                if not feasible(v):
                    return False
                if undecided[v] == 1:
                    forced = -partial[v]
                    if forced == 0 or abs(forced) > limit:
                        return False
                    for u, e2 in g.incidence[v]:
                        if values[e2] == 0:
                            queue.append((e2, forced))
                            break
        return True

    def undo(trail: list[int]) -> None:
        for e in reversed(trail):
            x = values[e]
            values[e] = 0
            for v in g.edges[e]:
                partial[v] -= x
                undecided[v] += 1

    def search(pos: int) -> bool:
        while pos < m and values[order[pos]] != 0:
            pos += 1
        if pos == m:
            return True
        e = order[pos]
        for x in vals:
            trail: list[int] = []
            if assign(e, x, trail) and search(pos + 1):
                return True
            undo(trail)
        return False

    return list(values) if search(0) else None
