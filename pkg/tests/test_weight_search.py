from itertools import product

import pytest

from signrank.assignments import EdgeAssignment
from signrank.errors import InvalidAssignmentError
from signrank.exact_linalg import adjacency_matrix, det
from signrank.factors import count_factors
from signrank.graph_core import Graph
from signrank.weight_search import find_singular_weight, verify_weight
from signrank.zero_sum_flow import flow_exists_nonbipartite_test

from conftest import complete, cycle, path, star


class TestVerifyWeight:
    def test_c4_singular(self):
        assert verify_weight(cycle(4), EdgeAssignment((1, -1, 1, -1))) == "singular"

    def test_k2_full_rank(self):
        assert verify_weight(complete(2), EdgeAssignment((7,))) == "full_rank"

    def test_c4_full_rank(self):
        assert verify_weight(cycle(4), EdgeAssignment((1, 1, 1, -1))) == "full_rank"

    def test_zero_rejected(self):
        with pytest.raises(InvalidAssignmentError):
            EdgeAssignment((1, 0, 1, 1))


class TestWitnesses:
    def test_c4_flow_route(self):
        out = find_singular_weight(cycle(4), bound=1)
        assert out.route == "flow"
        assert verify_weight(cycle(4), out.witness) == "singular"
        assert out.witness.max_abs() <= 5

    def test_k4_flow_route(self):
        # removing any edge of K4 leaves a triangle, so a flow exists
        assert flow_exists_nonbipartite_test(complete(4))
        out = find_singular_weight(complete(4))
        assert out.route == "flow"
        assert verify_weight(complete(4), out.witness) == "singular"
        assert out.witness.max_abs() <= 11

    def test_bridge_between_two_c4_uses_algebraic_route(self):
        # two 4-cycles joined by a bridge: nine factors but no zero-sum flow
        g = Graph(8, ((0, 1), (1, 2), (2, 3), (0, 3), (3, 4),
                      (4, 5), (5, 6), (6, 7), (4, 7)))
        assert count_factors(g) == 9
        out = find_singular_weight(g, seed=5)
        assert out.route == "algebraic"
        assert verify_weight(g, out.witness) == "singular"

    def test_c5_with_chord_no_flow(self):
        # two factors, no zero-sum flow (removing the 1-2 edge leaves a
        # bipartite graph), so the witness comes from a rational root
        g = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)))
        assert count_factors(g) == 2
        out = find_singular_weight(g, seed=3)
        assert out.witness is not None
        assert out.route == "algebraic"
        assert verify_weight(g, out.witness) == "singular"

    def test_disconnected_component_witness(self):
        # C4 plus a triangle: the C4 component alone is made singular
        g = Graph(7, ((0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (4, 6), (5, 6)))
        out = find_singular_weight(g)
        assert out.witness is not None
        assert verify_weight(g, out.witness) == "singular"

    def test_deterministic_for_fixed_seed(self):
        g = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)))
        a = find_singular_weight(g, seed=9)
        b = find_singular_weight(g, seed=9)
        assert a.witness == b.witness and a.route == b.route


class TestRootHunts:
    """The rational-root helpers directly; on small corpora the structural
    reductions usually resolve first, so these paths are pinned here."""

    def test_quadratic_on_c4_edge(self):
        # restriction to any C4 edge has discriminant zero, so every trial
        # point yields a rational root
        import random

        from signrank.weight_search import _f_at, _hunt_f_root

        out = _hunt_f_root(cycle(4), 0, random.Random(0), 50)
        assert out is not None and all(out)
        assert _f_at(cycle(4), out) == 0

    def test_linear_tier_on_chorded_cycle(self):
        import random

        from signrank.weight_search import _f_at, _hunt_f_root

        g = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)))
        # edge (2,3) is on a cycle of one factor only and never a K2, so the
        # restriction is linear with nonzero slope and intercept
        out = _hunt_f_root(g, 2, random.Random(1), 50)
        assert out is not None and _f_at(g, out) == 0

    def test_forced_zero_intercept_tier(self):
        import random

        from signrank.weight_search import _f_at, _hunt_f_root

        g = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)))
        # edge (3,4) is in every factor, as a K2 in one and on a cycle in the
        # other: the constant part vanishes and the nonzero root is rational
        out = _hunt_f_root(g, 3, random.Random(2), 50)
        assert out is not None and _f_at(g, out) == 0

    def test_linear_part_solver(self):
        import random

        from signrank.weight_search import _f_at, _hunt_linear_part_root

        g = Graph(5, ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)))
        # edge (0,1) lies on a cycle of every factor; solve its linear part
        # through the cycle edge (2,3)
        out = _hunt_linear_part_root(g, 0, 2, random.Random(3))
        assert out is not None and _f_at(g, out) == 0

    def test_rational_root_solver_cases(self):
        from fractions import Fraction

        from signrank.weight_search import _nonzero_rational_root

        assert _nonzero_rational_root(0, 2, -3) == Fraction(3, 2)
        assert _nonzero_rational_root(0, 2, 0) is None
        assert _nonzero_rational_root(0, 0, 5) is None
        assert _nonzero_rational_root(0, 0, 0) == 1
        assert _nonzero_rational_root(1, 0, -4) in (2, -2)
        assert _nonzero_rational_root(1, 0, 4) is None  # negative discriminant
        assert _nonzero_rational_root(1, 0, -2) is None  # irrational roots
        assert _nonzero_rational_root(1, -3, 0) == 3  # zero root skipped


class TestImpossibility:
    def test_k3_certificate(self):
        out = find_singular_weight(complete(3))
        assert out.status == "impossible"
        assert out.witness is None
        assert "single monomial" in out.certificate_impossible
        # brute-force confirmation on a small weight grid
        for w in product((-2, -1, 1, 2), repeat=3):
            assert det(adjacency_matrix(complete(3), w)) != 0

    def test_k2_certificate(self):
        out = find_singular_weight(complete(2))
        assert out.status == "impossible"

    def test_p4_certificate(self):
        out = find_singular_weight(path(4))
        assert count_factors(path(4)) == 1
        assert out.status == "impossible"


class TestNoFactorConvention:
    def test_p3_every_weighting_singular(self):
        out = find_singular_weight(path(3))
        assert out.identically_singular
        assert out.witness.values == (1, 1)
        assert out.route == "exhaustive"
        assert verify_weight(path(3), out.witness) == "singular"

    def test_isolated_vertex(self):
        out = find_singular_weight(Graph(1, ()))
        assert out.identically_singular
        assert out.witness.values == ()

    def test_star(self):
        out = find_singular_weight(star(3))
        assert out.identically_singular
        assert verify_weight(star(3), out.witness) == "singular"
