"""
Tests for the bridge matching, its validation and the critical symbols
"""

import os
import random
import sys

import networkx as nx
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from components.bridge_theory import FriendlinessCertificate, SymbolClass
from components.ideal_core import GenOrder, ideal_from_exponents
from components.matching_engine import (
    Matching, bridge_matching, bridge_matching_eager, classify_by_run, critical_counts,
    critical_symbols, friendliness_report, is_bridge_friendly, matched_symbols, matching_from_json,
    matching_to_json, morse_digraph, pruned_sources, require_valid, validate_matching,
)
from components.taylor_symbols import symbol
from lib.errors import EngineError, InputError, MatchingError


def S(*gens):
    return symbol(gens)


FOUR_CYCLE_PAIRS = {
    (S(0, 1, 2, 3), S(0, 1, 2)),
    (S(0, 2, 3), S(0, 2)),
    (S(1, 2, 3), S(1, 3)),
}


class TestBridgeMatching:
    def test_four_cycle_pairs(self, four_cycle):
        A = bridge_matching(four_cycle, GenOrder.identity(4))
        assert set(A.pairs) == FOUR_CYCLE_PAIRS
        assert A.potential_sources == {S(0, 1, 2, 3), S(0, 2, 3), S(1, 2, 3), S(0, 1, 3)}
        assert pruned_sources(A) == {S(0, 1, 3)}

    def test_removed_generator_is_sbridge(self, four_cycle):
        A = bridge_matching(four_cycle, GenOrder.identity(4))
        assert A.removed_generator(S(0, 1, 2, 3), S(0, 1, 2)) == 3
        assert validate_matching(A, four_cycle, GenOrder.identity(4)).sbridge_consistent

    def test_eager_matches_batched(self, six_gens):
        for text in ('0,1,2,3,4,5', '0,1,3,4,5,2', '5,4,3,2,1,0'):
            ord = GenOrder.parse(text, 6)
            assert bridge_matching(six_gens, ord).pairs == bridge_matching_eager(six_gens, ord).pairs

    def test_within_level_order_irrelevant(self, six_gens, rng):
        ord = GenOrder.identity(6)
        reference = bridge_matching(six_gens, ord)
        for _ in range(3):
            assert bridge_matching(six_gens, ord, rng=rng).pairs == reference.pairs

    def test_order_size_checked(self, four_cycle):
        with pytest.raises(InputError):
            bridge_matching(four_cycle, GenOrder.identity(3))

    def test_matched_symbols(self, four_cycle):
        A = bridge_matching(four_cycle, GenOrder.identity(4))
        assert len(matched_symbols(A)) == 6
        assert A.partner(S(1, 3)) == S(1, 2, 3)
        assert A.partner(S(0, 1)) is None


class TestValidation:
    def test_bridge_matching_is_valid(self, four_cycle, dependent_order):
        for I in (four_cycle, dependent_order):
            for perm in ('0,1,2,3', '2,3,0,1', '3,1,0,2'):
                assert validate_matching(bridge_matching(I, GenOrder.parse(perm, 4)), I).ok

    def test_not_a_facet(self, four_cycle):
        A = Matching.from_pairs(4, [(S(0, 1, 2), S(0))])
        report = validate_matching(A, four_cycle)
        assert not report.facets_ok and not report.ok
        assert report.witness['reason'] == 'not a facet edge'

    def test_symbol_in_two_edges(self, four_cycle):
        A = Matching.from_pairs(4, [(S(0, 1, 2, 3), S(0, 1, 2)), (S(0, 1, 2), S(0, 2))])
        report = validate_matching(A, four_cycle)
        assert not report.matching_ok

    def test_lcm_differs(self, four_cycle):
        A = Matching.from_pairs(4, [(S(0, 1), S(0))])
        report = validate_matching(A, four_cycle)
        assert not report.homogeneous_ok
        assert report.to_json()['homogeneous'] is False

    def test_directed_cycle(self):
        # every pair and triple of (abc, abd, acd, bcd) has lcm abcd
        I = ideal_from_exponents('a b c d', [[1, 1, 1, 0], [1, 1, 0, 1], [1, 0, 1, 1], [0, 1, 1, 1]])
        A = Matching.from_pairs(4, [(S(0, 1, 2), S(0, 1)), (S(1, 2, 3), S(1, 2)), (S(0, 1, 3), S(1, 3))])
        report = validate_matching(A, I)
        assert report.facets_ok and report.matching_ok and report.homogeneous_ok
        assert not report.acyclic_ok
        assert report.witness['reason'] == 'directed cycle'

    def test_require_valid_raises(self, four_cycle):
        A = Matching.from_pairs(4, [(S(0, 1), S(0))])
        with pytest.raises(MatchingError) as exc:
            require_valid(A, four_cycle)
        assert not exc.value.report.ok

    def test_json_round_trip(self, four_cycle):
        A = bridge_matching(four_cycle, GenOrder.identity(4))
        data = matching_to_json(A, four_cycle, include_classes=True)
        assert data['critical_counts'] == [1, 4, 4, 1]
        assert data['classes']['0,1,3'] == 'potential_type2_only'
        rebuilt = matching_from_json(data, 4)
        assert rebuilt.pairs == A.pairs
        assert rebuilt.potential_sources == A.potential_sources


class TestCriticals:
    def test_four_cycle(self, four_cycle):
        crit = critical_symbols(bridge_matching(four_cycle, GenOrder.identity(4)), four_cycle)
        assert crit[0] == [0]
        assert crit[3] == [S(0, 1, 3)]
        assert crit[4] == []
        assert critical_counts(crit) == (1, 4, 4, 1)

    def test_dependent_order(self, dependent_order):
        ranks = {}
        for text in ('0,1,2,3', '2,3,0,1'):
            A = bridge_matching(dependent_order, GenOrder.parse(text, 4))
            ranks[text] = critical_counts(critical_symbols(A, dependent_order))
        assert ranks == {'0,1,2,3': (1, 4, 3), '2,3,0,1': (1, 4, 4, 1)}

    def test_empty_matching_is_taylor(self, four_cycle):
        crit = critical_symbols(Matching.empty(4), four_cycle)
        assert critical_counts(crit) == (1, 4, 6, 4, 1)

    @pytest.mark.parametrize('text, expected', [
        ('0,1,2,3,4,5', (1, 6, 9, 6, 3, 1)),
        ('0,1,3,4,5,2', (1, 6, 9, 5, 1)),
    ])
    def test_six_generators(self, six_gens, text, expected):
        A = bridge_matching(six_gens, GenOrder.parse(text, 6))
        assert critical_counts(critical_symbols(A, six_gens)) == expected

    def test_critical_counts_trims(self):
        assert critical_counts({0: [0], 1: [1], 2: []}) == (1, 1)


class TestFriendliness:
    def test_four_cycle_not_friendly(self, four_cycle):
        assert not is_bridge_friendly(four_cycle, GenOrder.identity(4))

    def test_dependent_order_friendly(self, dependent_order):
        assert is_bridge_friendly(dependent_order, GenOrder.identity(4))

    def test_report_agrees_with_criterion(self, four_cycle, dependent_order):
        for I in (four_cycle, dependent_order):
            for text in ('0,1,2,3', '2,3,0,1', '1,3,0,2'):
                report = friendliness_report(I, GenOrder.parse(text, 4))
                assert report['friendly'] == report['criterion']['friendly']

    def test_report_lists_pruned(self, four_cycle):
        report = friendliness_report(four_cycle, GenOrder.identity(4))
        assert report['pruned_sources'] == [[0, 1, 3]]

    def test_report_rejects_disagreement(self, four_cycle, mocker):
        mocker.patch(
            'components.matching_engine.engine.check_friendliness_criterion',
            return_value=FriendlinessCertificate(friendly=True),
        )
        with pytest.raises(EngineError, match='disagree'):
            friendliness_report(four_cycle, GenOrder.identity(4))

    def test_classes_from_run(self, four_cycle):
        classes = classify_by_run(bridge_matching(four_cycle, GenOrder.identity(4)))
        assert classes[S(0, 1, 2, 3)] == SymbolClass.TYPE2
        assert classes[S(0, 1, 2)] == SymbolClass.TYPE1
        assert classes[S(0, 1, 3)] == SymbolClass.POTENTIAL_TYPE2_ONLY
        assert classes[0] == SymbolClass.CRITICAL


class TestMorseDigraph:
    def test_reversed_edges(self, four_cycle):
        A = bridge_matching(four_cycle, GenOrder.identity(4))
        G = morse_digraph(A, four_cycle)
        assert G.number_of_edges() == 32
        assert G.has_edge(S(0, 1, 2), S(0, 1, 2, 3))
        assert not G.has_edge(S(0, 1, 2, 3), S(0, 1, 2))
        assert sum(1 for _, _, d in G.edges(data=True) if d['matched']) == 3
        assert nx.is_directed_acyclic_graph(G)


# =============================================================================
# RUN TESTS
# =============================================================================

if __name__ == '__main__':
    pytest.main([__file__, '-v'])
