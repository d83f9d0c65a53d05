"""Search for edge signs giving a full-rank signed adjacency matrix, and the
extreme ranks over the sign space.

A full-rank sign exists iff the graph has a {1,2}-factor (iff full perrank),
so the search certifies "none" instantly when no factor exists: every term
of the determinant expansion needs a nonzero transversal, hence the
determinant vanishes identically.  Otherwise the square-free reduction of
the determinant polynomial is not identically zero and random or exhaustive
+-1 points find a witness.

Exhaustive enumeration quotients by switching: negating all edges at a
vertex conjugates the matrix by a +-1 diagonal, preserving determinant and
rank, so it is enough to scan sign vectors that are +1 on a spanning
forest (2^(m-n+c) representatives instead of 2^m).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .assignments import EdgeAssignment
from .errors import ResourceCapError
from .exact_linalg import adjacency_matrix, det, rank
from .factors import has_factor, perrank_fast
from .graph_core import Graph

DEFAULT_EXHAUSTIVE_M_CAP = 20
GREEDY_COMPLETIONS = 32


@dataclass(frozen=True)
class SignSearchOutcome:
    """Result of a full-rank sign search.

    witness        sign assignment with nonzero determinant, if found
    method         search method that produced the outcome
    attempts       number of candidate signs tested
    certified_none True only with a proof that no sign works; `basis` says
                   which proof: "no_factor" (determinant identically zero)
                   or "exhausted" (all switching classes scanned)
    """

    witness: EdgeAssignment | None
    method: str
    attempts: int
    certified_none: bool
    basis: str | None = None

    @property
    def status(self) -> str:
        if self.witness is not None:
            return "witness"
        return "certified_none" if self.certified_none else "inconclusive"


def spanning_forest(g: Graph) -> frozenset[int]:
    """Edge indices of a breadth-first spanning forest."""
    seen = [False] * g.n
    tree: set[int] = set()
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            v = queue.pop()
            for u, eidx in g.incidence[v]:
                if not seen[u]:
                    seen[u] = True
                    tree.add(eidx)
                    queue.append(u)
    return frozenset(tree)


def iter_sign_representatives(g: Graph) -> Iterator[tuple[int, ...]]:
    """One sign vector per switching class: forest edges fixed to +1, the
    remaining edges running over {+1,-1} (+1 first, deterministic order)."""
    forest = spanning_forest(g)
    free = [i for i in range(g.m) if i not in forest]
    base = [1] * g.m
    if not free:
        yield tuple(base)
        return
    for combo in product((1, -1), repeat=len(free)):
        vec = list(base)
        for pos, val in zip(free, combo):
            vec[pos] = val
        yield tuple(vec)


def switch_at_vertex(g: Graph, values: tuple[int, ...], v: int) -> tuple[int, ...]:
    """Negate the sign of every edge incident to v (a switching)."""
    out = list(values)
    for _, eidx in g.incidence[v]:
        out[eidx] = -out[eidx]
    return tuple(out)


def _det_of_signs(g: Graph, values: tuple[int, ...]) -> int:
    return det(adjacency_matrix(g, values))


def find_fullrank_sign(
    g: Graph,
    method: str = "randomized",
    seed: int = 0,
    max_attempts: int | None = None,
    exhaustive_m_cap: int = DEFAULT_EXHAUSTIVE_M_CAP,
) -> SignSearchOutcome:
    """Find a sign with det != 0, or certify that none exists.

    methods:
      randomized  sample uniform +-1 vectors (default budget 64*m)
      exhaustive  scan all switching classes; certifies "none" on exhaustion
      greedy      fix one edge sign at a time, keeping the partial assignment
                  alive while random completions hit a nonzero determinant;
                  one-sided error, always ends with an exact check

    A graph without a {1,2}-factor is certified immediately: its determinant
    is identically zero for every weighting.
    """
    if method not in ("randomized", "exhaustive", "greedy"):
        raise ValueError(f"unknown method {method!r}")
    if not has_factor(g):
        return SignSearchOutcome(None, method, 0, True, basis="no_factor")
    m = g.m

    def verified(values: tuple[int, ...], attempts: int) -> SignSearchOutcome:
        # soundness: re-check the witness independently of the search path
        if _det_of_signs(g, values) == 0:
            raise AssertionError("witness failed re-verification")
        return SignSearchOutcome(EdgeAssignment(values, "sign"), method, attempts, False)

    if method == "exhaustive":
        if m > exhaustive_m_cap:
            raise ResourceCapError(
                f"exhaustive sign search needs m <= {exhaustive_m_cap}, graph has m={m}")
        attempts = 0
        for values in iter_sign_representatives(g):
            attempts += 1
            if _det_of_signs(g, values) != 0:
                return verified(values, attempts)
        return SignSearchOutcome(None, method, attempts, True, basis="exhausted")

    rng = random.Random(seed)
    if method == "randomized":
        budget = max_attempts if max_attempts is not None else 64 * max(m, 1)
        for attempts in range(1, budget + 1):
            values = tuple(rng.choice((1, -1)) for _ in range(m))
            if _det_of_signs(g, values) != 0:
                return verified(values, attempts)
        return SignSearchOutcome(None, method, budget, False)

    # greedy: self-reducibility with randomized aliveness checks
    attempts = 0
    prefix: list[int] = []
    for i in range(m):
        fixed = None
        for s in (1, -1):
            alive = False
            for _ in range(GREEDY_COMPLETIONS):
                attempts += 1
                tail = [rng.choice((1, -1)) for _ in range(m - i - 1)]
                values = tuple(prefix + [s] + tail)
                if _det_of_signs(g, values) != 0:
                    alive = True
                    break
            if alive:
                fixed = s
                break
        if fixed is None:
            return SignSearchOutcome(None, method, attempts, False)
        prefix.append(fixed)
    values = tuple(prefix)
    attempts += 1
    if _det_of_signs(g, values) != 0:
        return verified(values, attempts)
    return SignSearchOutcome(None, method, attempts, False)


def max_rank_over_signs(
    g: Graph,
    exhaustive_m_cap: int = DEFAULT_EXHAUSTIVE_M_CAP,
    seed: int = 0,
) -> int:
    """Exact maximum of rank over all signs.

    Exhaustive over switching classes when m fits the cap.  Beyond the cap,
    falls back to a randomized lower bound that must meet the perrank upper
    bound; raises ResourceCapError when it cannot be pinned down."""
    if g.m <= exhaustive_m_cap:
        best = 0
        for values in iter_sign_representatives(g):
            r = rank(adjacency_matrix(g, values))
            if r > best:
                best = r
                if best == g.n:
                    break
        return best
    upper = perrank_fast(g)
    rng = random.Random(seed)
    best = 0
    for _ in range(64 * g.m):
        values = tuple(rng.choice((1, -1)) for _ in range(g.m))
        r = rank(adjacency_matrix(g, values))
        if r > best:
            best = r
            if best == upper:
                return best
    raise ResourceCapError(
        f"m={g.m} exceeds the exhaustive cap and sampling reached only rank {best} < perrank {upper}")


def min_rank_over_signs(
    g: Graph,
    exhaustive_m_cap: int = DEFAULT_EXHAUSTIVE_M_CAP,
) -> tuple[int, EdgeAssignment]:
    """Exact minimum of rank over all 2^m signs, with the first minimizing
    sign vector in enumeration order (+1 before -1 at every position).

    Data collection for an open problem; exhaustive only, refused above the
    cap."""
    if g.m > exhaustive_m_cap:
        raise ResourceCapError(
            f"min-rank scan is exhaustive over 2^m signs and needs m <= {exhaustive_m_cap}; "
            f"graph has m={g.m}")
    best: int | None = None
    best_values: tuple[int, ...] = ()
    for combo in product((1, -1), repeat=g.m):
        r = rank(adjacency_matrix(g, combo))
        if best is None or r < best:
            best, best_values = r, combo
            if best == 0:
                break
    assert best is not None
    return best, EdgeAssignment(best_values, "sign")
