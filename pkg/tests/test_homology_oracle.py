"""
Tests for exact ranks and graded Betti numbers
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from components.homology_oracle import FieldSpec, GradedBettiTable, rank, strand_exactness, tor_betti
from components.ideal_core import GenOrder
from components.matching_engine import bridge_matching
from components.morse_complex import differential, taylor_differential
from lib.errors import CapacityError, InputError


class TestFieldSpec:
    def test_rational(self):
        assert FieldSpec.rational().characteristic == 0
        assert str(FieldSpec.rational()) == 'Q'

    def test_modular_default(self):
        assert FieldSpec.modular() == FieldSpec(32003)
        assert str(FieldSpec(5)) == 'F_5'

    @pytest.mark.parametrize('text', ['0', 'Q', 'rational'])
    def test_parse_rational(self, text):
        assert FieldSpec.parse(text) == FieldSpec.rational()

    def test_parse_prime(self):
        assert FieldSpec.parse('7').prime == 7

    @pytest.mark.parametrize('bad', [4, 1, 2 ** 31 + 11])
    def test_rejects_non_primes(self, bad):
        with pytest.raises(InputError):
            FieldSpec(bad)

    def test_parse_garbage(self):
        with pytest.raises(InputError):
            FieldSpec.parse('seven')


class TestRank:
    def test_docstring_examples(self):
        assert rank([[2], [4]], FieldSpec(2)) == 0
        assert rank([[2], [4]], FieldSpec.rational()) == 1

    def test_empty(self):
        assert rank([], FieldSpec(3)) == 0

    def test_dependent_rows(self):
        M = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
        assert rank(M, FieldSpec.rational()) == 2
        assert rank(M, FieldSpec(5)) == 2

    def test_characteristic_drop(self):
        M = [[1, 1], [1, -1]]
        assert rank(M, FieldSpec.rational()) == 2
        assert rank(M, FieldSpec(2)) == 1

    def test_large_entries(self):
        M = [[10 ** 30, 1], [10 ** 30 + 1, 1]]
        assert rank(M, FieldSpec.rational()) == 2

    def test_rejects_vectors(self):
        with pytest.raises(InputError):
            rank([1, 2, 3], FieldSpec(3))

    def test_paths_agree_on_sign_matrices(self, rng):
        # minors of an 8x8 sign matrix stay below 8^4 < 32003
        for _ in range(200):
            m, n = rng.randint(1, 8), rng.randint(1, 8)
            M = [[rng.choice((-1, 0, 0, 1)) for _ in range(n)] for _ in range(m)]
            assert rank(M, FieldSpec(32003)) == rank(M, FieldSpec.rational()), M

    def test_paths_differ_in_characteristic_two(self, rng):
        # triangle incidence matrix has determinant 2
        triangle = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
        for _ in range(20):
            k = rng.randint(0, 4)
            size = k + 3
            M = [[0] * size for _ in range(size)]
            for i in range(k):
                M[i][i] = 1
            for i in range(3):
                for j in range(3):
                    M[k + i][k + j] = triangle[i][j]
            rows, cols = list(range(size)), list(range(size))
            rng.shuffle(rows)
            rng.shuffle(cols)
            M = [[M[r][c] for c in cols] for r in rows]
            assert rank(M, FieldSpec.rational()) == size
            assert rank(M, FieldSpec(32003)) == size
            assert rank(M, FieldSpec(2)) == size - 1


class TestGradedBettiTable:
    def test_totals_and_pd(self, koszul):
        table = GradedBettiTable(koszul.ctx)
        table.add(0, (0, 0))
        table.add(1, (1, 0))
        table.add(1, (0, 1))
        table.add(2, (1, 1))
        assert table.totals() == (1, 2, 1)
        assert table.graded() == {(0, 0): 1, (1, 1): 2, (2, 2): 1}
        assert table.pd == 2

    def test_equality_ignores_zero_entries(self, koszul):
        a = GradedBettiTable(koszul.ctx, {(0, (0, 0)): 1})
        b = GradedBettiTable(koszul.ctx, {(0, (0, 0)): 1, (1, (1, 0)): 0})
        assert a == b

    def test_dominates(self, koszul):
        small = GradedBettiTable(koszul.ctx, {(0, (0, 0)): 1})
        big = GradedBettiTable(koszul.ctx, {(0, (0, 0)): 1, (1, (1, 1)): 2})
        assert big.dominates(small)
        assert not small.dominates(big)

    def test_empty_totals(self, koszul):
        assert GradedBettiTable(koszul.ctx).totals() == (0,)

    def test_json(self, koszul):
        data = tor_betti(koszul).to_json()
        assert data['totals'] == [1, 2, 1]
        assert data['pd'] == 2
        assert {'i': 2, 'mdeg': [1, 1], 'count': 1} in data['multigraded']


class TestTorBetti:
    def test_koszul(self, koszul):
        assert tor_betti(koszul).totals() == (1, 2, 1)

    def test_four_cycle(self, four_cycle):
        betti = tor_betti(four_cycle, FieldSpec.rational())
        assert betti.totals() == (1, 4, 4, 1)
        assert betti.graded() == {(0, 0): 1, (1, 2): 4, (2, 3): 4, (3, 4): 1}

    def test_dependent_order(self, dependent_order):
        assert tor_betti(dependent_order).totals() == (1, 4, 3)

    def test_characteristic_dependence(self, char_dependent):
        mod2 = tor_betti(char_dependent, FieldSpec(2))
        generic = tor_betti(char_dependent, FieldSpec(32003))
        assert mod2 != generic
        assert mod2.dominates(generic)
        assert generic == tor_betti(char_dependent, FieldSpec.rational())

    def test_capacity(self, four_cycle, mocker):
        mocker.patch('components.homology_oracle.tor.get', side_effect=lambda key, default=None: 2)
        with pytest.raises(CapacityError):
            tor_betti(four_cycle)


class TestStrandExactness:
    def test_taylor_is_a_resolution(self, dependent_order):
        assert strand_exactness(taylor_differential(dependent_order), dependent_order).ok

    def test_bridge_resolution(self, six_gens):
        D = differential(bridge_matching(six_gens, GenOrder.identity(6)), six_gens)
        assert strand_exactness(D, six_gens, FieldSpec.rational()).ok

    def test_truncated_complex_fails(self, four_cycle):
        D = taylor_differential(four_cycle)
        del D.entries[2]
        report = strand_exactness(D, four_cycle)
        assert not report.ok
        assert report.witness is not None
        assert report.to_json()['ok'] is False


# =============================================================================
# RUN TESTS
# =============================================================================

if __name__ == '__main__':
    pytest.main([__file__, '-v'])
