"""
Tests for gradient flows, the Morse differential and minimality verdicts
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from components.homology_oracle import FieldSpec, strand_exactness, tor_betti
from components.ideal_core import GenOrder
from components.matching_engine import Matching, bridge_matching
from components.morse_complex import (
    GradientFlows, betti_from_criticals, criticals_closed_under_subsets, differential, edge_weight,
    gradient_flow, is_bridge_minimal, is_minimal, lcm_adjacency_ok, lcm_distinct_across_levels,
    resolution_report, taylor_differential, taylor_subcomplex_coincides, unit_entries,
)
from components.taylor_symbols import symbol
from lib.errors import InputError


def S(*gens):
    return symbol(gens)


@pytest.fixture
def c4_matching(four_cycle):
    return bridge_matching(four_cycle, GenOrder.identity(4))


class TestEdgeWeights:
    def test_up_step(self, c4_matching):
        # [0123 : 012] = -1, reversed edge weighs +1
        assert edge_weight(S(0, 1, 2), S(0, 1, 2, 3), c4_matching) == 1

    def test_down_step(self, c4_matching):
        assert edge_weight(S(0, 1, 2, 3), S(0, 1, 3), c4_matching) == 1
        assert edge_weight(S(0, 1, 2, 3), S(1, 2, 3), c4_matching) == 1
        assert edge_weight(S(0, 1, 2, 3), S(0, 2, 3), c4_matching) == -1

    def test_reversed_edge_has_no_down_weight(self, c4_matching):
        with pytest.raises(InputError, match='reversed'):
            edge_weight(S(0, 1, 2, 3), S(0, 1, 2), c4_matching)

    def test_non_edge(self, c4_matching):
        with pytest.raises(InputError, match='not an edge'):
            edge_weight(S(0, 1), S(2), c4_matching)


class TestGradientFlow:
    def test_critical_is_empty_path(self, c4_matching):
        assert gradient_flow(S(0, 1), c4_matching) == {S(0, 1): 1}

    def test_source_has_no_flow(self, c4_matching):
        assert gradient_flow(S(1, 2, 3), c4_matching) == {}

    def test_target_flows_to_criticals(self, c4_matching):
        flows = GradientFlows(c4_matching)
        flow = flows.flow(S(0, 2))
        # {0,2} -> {0,2,3} -> {0,3} or {2,3}
        assert set(flow) == {S(0, 3), S(2, 3)}
        assert all(abs(c) == 1 for c in flow.values())


class TestDifferential:
    def test_four_cycle(self, four_cycle, c4_matching):
        D = differential(c4_matching, four_cycle)
        assert D.ranks == (1, 4, 4, 1)
        assert D.square_is_zero() == (True, None)
        assert is_minimal(D)
        assert unit_entries(D) == []

    def test_matrix_monomials(self, four_cycle, c4_matching):
        D = differential(c4_matching, four_cycle)
        top = D.matrix(3)
        assert len(top) == 4
        # the facet {1,3} is matched and flows on to {1,2} and {2,3}
        assert {str(m) for _, _, _, m in top} == {'x', 'y', 'z', 'w'}
        for _, _, c, m in top:
            assert abs(c) == 1 and m.degree == 1

    def test_taylor(self, four_cycle):
        D = taylor_differential(four_cycle)
        assert D.ranks == (1, 4, 6, 4, 1)
        assert D.square_is_zero()[0]
        assert not is_minimal(D)
        assert unit_entries(D)

    def test_json(self, four_cycle, c4_matching):
        data = differential(c4_matching, four_cycle).to_json()
        assert data['ranks'] == [1, 4, 4, 1]
        assert data['criticals']['3'] == [[0, 1, 3]]
        assert set(data['matrices']) == {'1', '2', '3'}

    def test_square_zero_on_six_generators(self, six_gens):
        for text in ('0,1,2,3,4,5', '0,1,3,4,5,2'):
            D = differential(bridge_matching(six_gens, GenOrder.parse(text, 6)), six_gens)
            assert D.square_is_zero()[0]


class TestMinimality:
    def test_dependent_order(self, dependent_order):
        assert is_bridge_minimal(dependent_order, GenOrder.parse('0,1,2,3'))
        assert not is_bridge_minimal(dependent_order, GenOrder.parse('2,3,0,1'))

    def test_four_cycle(self, four_cycle):
        assert is_bridge_minimal(four_cycle, GenOrder.identity(4))

    def test_six_generators_second_order(self, six_gens):
        assert is_bridge_minimal(six_gens, GenOrder.parse('0,1,3,4,5,2'))

    def test_lcm_adjacency(self, four_cycle, c4_matching):
        assert lcm_adjacency_ok(c4_matching, four_cycle)
        assert lcm_distinct_across_levels(c4_matching, four_cycle)
        assert not lcm_adjacency_ok(Matching.empty(4), four_cycle)

    def test_criticals_match_oracle_when_minimal(self, dependent_order):
        A = bridge_matching(dependent_order, GenOrder.identity(4))
        assert betti_from_criticals(A, dependent_order) == tor_betti(dependent_order, FieldSpec.rational())

    def test_criticals_bound_oracle(self, dependent_order):
        A = bridge_matching(dependent_order, GenOrder.parse('2,3,0,1'))
        table = betti_from_criticals(A, dependent_order)
        oracle = tor_betti(dependent_order)
        assert table != oracle
        assert table.dominates(oracle)


class TestSubcomplex:
    def test_closed_criticals(self, dependent_order):
        A = bridge_matching(dependent_order, GenOrder.identity(4))
        assert criticals_closed_under_subsets(A)
        assert taylor_subcomplex_coincides(A, dependent_order)

    def test_four_cycle_not_closed(self, c4_matching):
        # {0,1,3} is critical but its facet {1,3} is matched
        assert not criticals_closed_under_subsets(c4_matching)


class TestResolution:
    def test_report(self, four_cycle, c4_matching):
        report = resolution_report(c4_matching, four_cycle)
        assert report['ranks'] == [1, 4, 4, 1]
        assert report['minimal'] is True
        assert report['square_zero'] is True
        assert 'square_zero_witness' not in report

    def test_strand_exactness(self, four_cycle, c4_matching):
        result = strand_exactness(differential(c4_matching, four_cycle), four_cycle)
        assert result.ok
        assert result.checked == 10


# =============================================================================
# RUN TESTS
# =============================================================================

if __name__ == '__main__':
    pytest.main([__file__, '-v'])
