"""
Tests for the nested E-K splittings of classic cycles
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from components.graph_ideals import (
    betti_splitting_holds, classic_cycle, edge_ideal, ek_split_cycle, validate_ek, validate_splitting,
)
from lib.errors import CapacityError, GraphError, InputError


@pytest.fixture(scope='module')
def c8():
    return ek_split_cycle(8)


class TestConstruction:
    @pytest.mark.parametrize('n', [3, 7])
    def test_small_cycles(self, n):
        with pytest.raises(GraphError, match='n ≥ 8'):
            ek_split_cycle(n)

    def test_outer_level(self, c8):
        outer = c8.outer
        assert outer.J.n == 6
        assert outer.K.n == 2
        assert outer.intersection.n == 8
        assert set(outer.ideal.gens) == set(edge_ideal(classic_cycle(8)).ideal.gens)

    def test_split_pairs(self, c8):
        for w, (phi, psi) in c8.outer.split.items():
            assert phi in c8.outer.J.gens
            assert psi in c8.outer.K.gens
            assert phi.lcm(psi) == w

    def test_inner_level_splits_intersection(self, c8):
        assert c8.inner.ideal == c8.outer.intersection
        for w, (phi, psi) in c8.inner.split.items():
            assert phi.lcm(psi) == w

    def test_inner_split_is_explicit(self, c8):
        # every w in G(J′∩K′) is x1x2x8 times one of these
        inner = c8.inner
        ctx = inner.ideal.ctx
        base = ctx.variable('x1') * ctx.variable('x2') * ctx.variable('x8')
        quotients = {str(w.quotient(base)) for w in inner.split}
        assert quotients == {'x3*x4', 'x4*x5', 'x5*x6', 'x6*x7', 'x3*x7'}
        for w, (phi, psi) in inner.split.items():
            assert phi in inner.J.gens
            assert psi in inner.K.gens
            assert not phi.exponents[ctx.index('x2')]
            assert not psi.exponents[ctx.index('x8')]
        x37 = base * ctx.variable('x3') * ctx.variable('x7')
        assert [str(m) for m in inner.split[x37]] == ['x1*x7*x8', 'x1*x2*x3']

    def test_json(self, c8):
        data = c8.to_json()
        assert data['n'] == 8
        assert len(data['outer']['split']) == 8
        assert 'x1*x8' in data['outer']['K']


class TestValidation:
    @pytest.mark.parametrize('n', [8, 9, 10])
    def test_both_levels_valid(self, n):
        split = ek_split_cycle(n)
        assert validate_splitting(split.outer)
        assert validate_splitting(split.inner)

    def test_wrong_pair(self, c8):
        level = c8.outer
        broken = dict(level.split)
        w = next(iter(broken))
        other = next(g for g in level.J.gens if g != broken[w][0])
        broken[w] = (other, broken[w][1])
        assert not validate_ek(level.ideal, level.J, level.K, broken)

    def test_missing_generator(self, c8):
        level = c8.outer
        partial = dict(list(level.split.items())[1:])
        assert not validate_ek(level.ideal, level.J, level.K, partial)

    def test_overlapping_parts(self, c8):
        level = c8.outer
        with pytest.raises(InputError):
            validate_ek(level.ideal, level.J, level.J, level.split)

    def test_subset_capacity(self, c8, mocker):
        mocker.patch('components.graph_ideals.splitting.get', side_effect=lambda key, default=None: 4)
        with pytest.raises(CapacityError):
            validate_splitting(c8.outer)


class TestBettiSplitting:
    @pytest.mark.parametrize('n', [8, 9, pytest.param(10, marks=pytest.mark.slow)])
    @pytest.mark.parametrize('level', ['outer', 'inner'])
    def test_identity(self, n, level):
        part = getattr(ek_split_cycle(n), level)
        assert betti_splitting_holds(part.ideal, part.J, part.K)


# =============================================================================
# RUN TESTS
# =============================================================================

if __name__ == '__main__':
    pytest.main([__file__, '-v'])
