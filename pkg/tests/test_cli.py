"""
Tests for the command line: exit codes and report payloads
"""

import json
import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cli.app import main

DATA = Path(__file__).resolve().parent.parent / 'data'
FOUR_CYCLE = str(DATA / 'ideals' / 'four_cycle.txt')
DEPENDENT = str(DATA / 'ideals' / 'dependent_order.txt')
CHAR_DEPENDENT = str(DATA / 'ideals' / 'char_dependent.txt')
WEIRDFOREST = str(DATA / 'graphs' / 'weirdforest.txt')
HEAVY_CYCLE = str(DATA / 'graphs' / 'heavy_cycle5.txt')
STAR = str(DATA / 'graphs' / 'star.json')


def run_json(capsys, *argv):
    code = main(['--format', 'json', *argv])
    return code, json.loads(capsys.readouterr().out)


class TestIdealCommands:
    def test_symbols(self, capsys):
        code, data = run_json(capsys, 'symbols', FOUR_CYCLE, '--card', '2')
        assert code == 0
        assert len(data['symbols']) == 6

    def test_sbridge(self, capsys):
        code, data = run_json(capsys, 'sbridge', FOUR_CYCLE, '0,1,2,3')
        assert code == 0
        assert data['sbridge'] == 3

    def test_sbridge_text(self, capsys):
        assert main(['sbridge', FOUR_CYCLE, '0,1', '--order', '1,0,2,3']) == 0
        assert 'no bridge' in capsys.readouterr().out

    def test_compare(self, capsys):
        code, data = run_json(capsys, 'compare', FOUR_CYCLE)
        assert code == 0
        assert data['barile_macchia'] == [1, 4, 4, 1]
        assert data['lyubeznik'] == [1, 4, 5, 2]
        assert data['dominance_hypothesis'] is True


class TestMatchingCommands:
    def test_matching(self, capsys):
        code, data = run_json(capsys, 'matching', FOUR_CYCLE, '--classes')
        assert code == 0
        assert len(data['edges']) == 3
        assert data['validation']['ok'] is True
        assert 'classes' in data

    def test_critical(self, capsys):
        code, data = run_json(capsys, 'critical', FOUR_CYCLE)
        assert code == 0
        assert data['counts'] == [1, 4, 4, 1]

    def test_morse_digraph(self, capsys):
        code, data = run_json(capsys, 'morse-digraph', FOUR_CYCLE)
        assert data['acyclic'] is True
        assert sum(1 for e in data['edges'] if e['matched']) == 3

    def test_types(self, capsys):
        code, data = run_json(capsys, 'types', FOUR_CYCLE)
        assert data['structural_agrees'] is True
        assert [0, 1, 3] in data['potential_type2_only']

    def test_friendly_verdicts(self, capsys):
        assert main(['friendly', FOUR_CYCLE]) == 1
        assert 'bridge-friendly=False' in capsys.readouterr().out
        assert main(['friendly', DEPENDENT]) == 0

    def test_minimal_verdicts(self, capsys):
        assert main(['minimal', DEPENDENT]) == 0
        assert main(['minimal', DEPENDENT, '--order', '2,3,0,1']) == 1
        assert 'bridge-minimal=False' in capsys.readouterr().out

    def test_friendly_search(self, capsys):
        code, data = run_json(capsys, 'friendly', FOUR_CYCLE, '--search', '--reduce-cycle')
        assert code == 1
        assert data['verdict'] == 'exhausted-none'
        assert data['orders_examined'] == 3

    def test_minimal_search(self, capsys):
        code, data = run_json(capsys, 'minimal', FOUR_CYCLE, '--search', '--witness-cap', '1')
        assert code == 0
        assert data['witnesses'] == [[0, 1, 2, 3]]

    def test_budget_exit_code(self, capsys):
        code, data = run_json(capsys, 'friendly', FOUR_CYCLE, '--search', '--budget-orders', '2')
        assert code == 3
        assert data['verdict'] == 'budget-exceeded'


class TestResolutionCommands:
    def test_resolution_certified(self, capsys):
        code, data = run_json(capsys, 'resolution', DEPENDENT, '--certify')
        assert code == 0
        assert data['ranks'] == [1, 4, 3]
        assert data['minimal'] is True
        assert data['strand_exactness']['ok'] is True

    def test_betti_against_oracle(self, capsys):
        code, data = run_json(capsys, 'betti', DEPENDENT, '--oracle')
        assert data['equal'] is True
        code, data = run_json(capsys, 'betti', DEPENDENT, '--order', '2,3,0,1', '--oracle')
        assert data['equal'] is False

    def test_oracle_field(self, capsys):
        _, rational = run_json(capsys, '--rational', 'oracle', CHAR_DEPENDENT)
        _, mod2 = run_json(capsys, '--prime', '2', 'oracle', CHAR_DEPENDENT)
        assert rational['totals'] != mod2['totals']


class TestGraphCommands:
    def test_edge_ideal(self, capsys):
        code, data = run_json(capsys, 'graph', 'edge-ideal', WEIRDFOREST)
        assert code == 0
        assert len(data['edges']) == 5

    def test_iron(self, capsys):
        code, data = run_json(capsys, 'graph', 'iron', WEIRDFOREST, '--root', 'x')
        assert code == 0
        assert data['edges'][0] == ['x', 'y']

    def test_blocks(self, capsys):
        code, data = run_json(capsys, 'graph', 'blocks', STAR)
        assert data['kind'] == 'forest'
        assert data['blockends'] == [0, 1, 2]

    def test_cycle_recursion(self, capsys):
        code, data = run_json(capsys, 'graph', 'recursion', HEAVY_CYCLE)
        assert code == 0
        assert data == {'kind': 'cycle', 'totals': [1, 5, 6, 2], 'pd': 3}

    def test_cycle_order(self, capsys):
        code, data = run_json(capsys, 'graph', 'order', HEAVY_CYCLE, '--kflip', '1')
        assert data['order'] == [1, 0, 2, 3, 4]

    def test_recursion_needs_natural_forest(self, capsys):
        assert main(['graph', 'recursion', WEIRDFOREST]) == 2
        assert 'naturally oriented' in capsys.readouterr().err

    def test_ek_split(self, capsys):
        code, data = run_json(capsys, 'graph', 'ek-split', '8')
        assert code == 0
        assert data['outer_valid'] is True and data['inner_valid'] is True

    def test_ek_split_small(self):
        assert main(['graph', 'ek-split', '5']) == 2


class TestErrors:
    def test_bad_order(self, capsys):
        assert main(['minimal', FOUR_CYCLE, '--order', '0,0,1,2']) == 2
        assert 'error:' in capsys.readouterr().err

    def test_missing_file(self, tmp_path):
        assert main(['critical', str(tmp_path / 'absent.txt')]) == 2

    def test_malformed_ideal(self, tmp_path):
        path = tmp_path / 'bad.txt'
        path.write_text("vars: x y\nx*q\n")
        assert main(['critical', str(path)]) == 2

    def test_no_command(self):
        with pytest.raises(SystemExit):
            main([])


# =============================================================================
# RUN TESTS
# =============================================================================

if __name__ == '__main__':
    pytest.main([__file__, '-v'])
