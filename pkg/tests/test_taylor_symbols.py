"""
Tests for symbol bitmasks, the Taylor complex cache and the base digraph
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from components.taylor_symbols import (
    TaylorComplex, base_digraph, bits, complex_for, enumerate_symbols, format_symbol, incidence,
    masks_of_cardinality, parse_symbol, popcount, symbol, symbol_lcm,
)
from lib.errors import CapacityError, InputError


class TestBitmasks:
    def test_bits_and_symbol(self):
        assert bits(0b1011) == [0, 1, 3]
        assert symbol([0, 1, 3]) == 0b1011
        assert popcount(0b1011) == 3
        assert format_symbol(0b1011) == '{0,1,3}'
        assert format_symbol(0) == '{}'

    def test_parse_symbol(self):
        assert parse_symbol('0,1,3', 4) == 0b1011
        assert parse_symbol('{2, 0}', 4) == 0b101
        assert parse_symbol('{}', 4) == 0

    @pytest.mark.parametrize('text', ['0,4', '1,1', 'a', '-1'])
    def test_parse_symbol_errors(self, text):
        with pytest.raises(InputError):
            parse_symbol(text, 4)

    def test_masks_of_cardinality(self):
        masks = list(masks_of_cardinality(4, 2))
        assert masks == [0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]
        assert list(masks_of_cardinality(3, 0)) == [0]
        assert list(masks_of_cardinality(3, 4)) == []

    def test_enumerate_symbols(self, four_cycle):
        assert len(list(enumerate_symbols(four_cycle))) == 15
        assert len(list(enumerate_symbols(four_cycle, 3))) == 4
        with pytest.raises(InputError):
            list(enumerate_symbols(four_cycle, -1))

    def test_enumeration_capacity(self):
        with pytest.raises(CapacityError):
            list(enumerate_symbols(64))


class TestIncidence:
    def test_signs(self):
        full = 0b1111
        assert incidence(full, 0b1110) == 1
        assert incidence(full, 0b1101) == -1
        assert incidence(full, 0b1011) == 1
        assert incidence(full, 0b0111) == -1

    def test_non_facets(self):
        assert incidence(0b1111, 0b0011) == 0
        assert incidence(0b0011, 0b0100) == 0
        assert incidence(0b0011, 0b0011) == 0


class TestTaylorComplex:
    def test_lcms(self, four_cycle):
        T = complex_for(four_cycle)
        assert str(T.lcm(0b0011)) == 'x*y*w'
        assert str(T.lcm(0b0101)) == 'x*y*z*w'
        assert T.lcm(0).is_one()
        assert T.lcm(0b0101) == symbol_lcm(0b0101, four_cycle)

    def test_same_lcm(self, four_cycle):
        T = complex_for(four_cycle)
        assert T.same_lcm(0b0101, 0b1010)
        assert T.same_lcm(0b0101, 0b1111)
        assert not T.same_lcm(0b0011, 0b0110)

    def test_bridges_and_gaps(self, four_cycle):
        T = complex_for(four_cycle)
        assert T.bridges(0b0111) == (1,)
        assert T.gaps(0b0111) == (3,)
        assert T.bridges(0b1111) == (0, 1, 2, 3)
        assert T.bridges(0b1011) == (0,)
        assert T.gaps(0b1011) == (2,)

    def test_small_symbols_have_no_bridges(self, four_cycle):
        T = complex_for(four_cycle)
        assert T.bridges(0b0101) == ()
        assert T.gaps(0) == ()

    def test_dense_and_sparse_agree(self, six_gens):
        dense = TaylorComplex(six_gens)
        sparse = TaylorComplex(six_gens, dense_limit=0)
        assert dense.dense and not sparse.dense
        for sigma in range(1 << six_gens.n):
            assert dense.lcm_exps(sigma) == sparse.lcm_exps(sigma)
            assert dense.bridges(sigma) == sparse.bridges(sigma)
        assert sorted(dense.lcm_lattice()) == sorted(sparse.lcm_lattice())

    def test_lcm_lattice(self, four_cycle):
        lattice = complex_for(four_cycle).lcm_lattice()
        # 1, four generators, four corner lcms and xyzw
        assert len(lattice) == 10

    def test_cache_reuse(self, four_cycle):
        T = complex_for(four_cycle)
        assert complex_for(four_cycle) is T
        assert complex_for(T) is T


class TestBaseDigraph:
    def test_counts(self, four_cycle):
        G = base_digraph(four_cycle)
        assert G.edge_count == 4 * 2 ** 3
        assert G.vertex_count == 16
        assert len(list(G.edges())) == G.edge_count

    def test_down_edges(self, four_cycle):
        G = base_digraph(four_cycle)
        assert G.down_edges(0b0101) == [(0b0101, 0b0100), (0b0101, 0b0001)]

    def test_json(self, four_cycle):
        data = base_digraph(four_cycle).to_json()
        assert data['n'] == 4
        assert {'source': [0], 'target': []} in data['edges']


# =============================================================================
# RUN TESTS
# =============================================================================

if __name__ == '__main__':
    pytest.main([__file__, '-v'])
