"""
Tests for bridges, gaps, true gaps and the structural symbol classes

The 4-cycle (xw, xy, yz, zw) under the identity order is the running
example: {0,1,2,3} is type-2, {0,1,3} loses its edge to {1,2,3}, and the
friendliness criterion fails on it.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from components.bridge_theory import (
    SymbolClass, check_friendliness_criterion, classify_structural, is_bridge, is_gap,
    is_potentially_type2, is_true_gap, is_type1, sbridge, true_gaps,
)
from components.ideal_core import GenOrder
from components.matching_engine import bridge_matching, classify_by_run
from components.taylor_symbols import symbol


def S(*gens):
    return symbol(gens)


class TestBridgesAndGaps:
    def test_bridge(self, four_cycle):
        assert is_bridge(1, S(0, 1, 2), four_cycle)
        assert not is_bridge(0, S(0, 1, 2), four_cycle)
        assert not is_bridge(3, S(0, 1, 2), four_cycle)

    def test_gap(self, four_cycle):
        assert is_gap(3, S(0, 1, 2), four_cycle)
        assert is_gap(2, S(0, 1, 3), four_cycle)
        assert not is_gap(1, S(0, 1, 2), four_cycle)

    def test_sbridge(self, four_cycle):
        ord = GenOrder.identity(4)
        assert sbridge(S(0, 1, 2, 3), four_cycle, ord) == 3
        assert sbridge(S(0, 1, 3), four_cycle, ord) == 0
        assert sbridge(S(0, 1), four_cycle, ord) is None
        assert sbridge(S(0, 1, 2, 3), four_cycle, GenOrder.parse('3,2,1,0')) == 0


class TestTrueGaps:
    def test_true_gap(self, four_cycle):
        ord = GenOrder.identity(4)
        assert is_true_gap(3, S(0, 1, 2), four_cycle, ord)
        assert true_gaps(S(0, 1, 2), four_cycle, ord) == [3]

    def test_gap_creating_new_bridge_is_not_true(self, four_cycle):
        ord = GenOrder.identity(4)
        # adding 2 to {0,1,3} turns 3 into a bridge below 2
        assert is_gap(2, S(0, 1, 3), four_cycle)
        assert not is_true_gap(2, S(0, 1, 3), four_cycle, ord)
        assert true_gaps(S(0, 1, 3), four_cycle, ord) == []

    def test_non_gap(self, four_cycle):
        assert not is_true_gap(0, S(0, 1, 2), four_cycle, GenOrder.identity(4))


class TestClasses:
    @pytest.mark.parametrize('sigma, expected', [
        (S(0, 1, 2, 3), SymbolClass.TYPE2),
        (S(0, 2, 3), SymbolClass.TYPE2),
        (S(1, 2, 3), SymbolClass.TYPE2),
        (S(0, 1, 3), SymbolClass.POTENTIAL_TYPE2_ONLY),
        (S(0, 1, 2), SymbolClass.TYPE1),
        (S(0, 2), SymbolClass.TYPE1),
        (S(0, 1), SymbolClass.CRITICAL),
        (S(3), SymbolClass.CRITICAL),
    ])
    def test_four_cycle_classes(self, four_cycle, sigma, expected):
        assert classify_structural(sigma, four_cycle, GenOrder.identity(4)) == expected

    def test_type_predicates(self, four_cycle):
        ord = GenOrder.identity(4)
        assert is_type1(S(0, 1, 2), four_cycle, ord)
        assert is_potentially_type2(S(0, 1, 3), four_cycle, ord)
        assert not is_potentially_type2(S(0, 1), four_cycle, ord)

    def test_structural_matches_run(self, four_cycle):
        ord = GenOrder.identity(4)
        run = classify_by_run(bridge_matching(four_cycle, ord))
        for sigma, cls in run.items():
            if sigma:
                assert classify_structural(sigma, four_cycle, ord) == cls, bin(sigma)

    def test_str(self):
        assert str(SymbolClass.POTENTIAL_TYPE2_ONLY) == 'potential_type2_only'


class TestFriendlinessCriterion:
    def test_four_cycle_fails(self, four_cycle):
        cert = check_friendliness_criterion(four_cycle, GenOrder.identity(4))
        assert not cert.friendly
        assert cert.sigma is not None and cert.gap is not None
        assert cert.to_json()['witness']['gap'] == cert.gap

    def test_dependent_order_passes(self, dependent_order):
        cert = check_friendliness_criterion(dependent_order, GenOrder.identity(4))
        assert cert.friendly
        assert cert.checked > 0
        assert 'witness' not in cert.to_json()


# =============================================================================
# RUN TESTS
# =============================================================================

if __name__ == '__main__':
    pytest.main([__file__, '-v'])
