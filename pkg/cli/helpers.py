"""
Shared CLI plumbing: argument groups, input loading and report output
"""

import json
import logging

from components.homology_oracle import FieldSpec
from components.ideal_core import GenOrder, load_ideal
from components.order_search import SearchBudget
from lib.config import get

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1


def add_ideal_argument(parser, order=True):
    parser.add_argument('ideal', help='Ideal file (text or JSON)')
    if order:
        parser.add_argument('--order', help='Generator indices from >_I-largest to smallest, e.g. 3,0,1,2')


def add_search_arguments(parser):
    parser.add_argument('--search', action='store_true', help='Search over orders instead of checking one')
    parser.add_argument('--mode', choices=['exhaustive', 'random'], default='exhaustive')
    parser.add_argument('--budget-orders', type=int, help='Stop after this many orders')
    parser.add_argument('--budget-seconds', type=float, help='Stop after this many seconds')
    parser.add_argument('--seed', type=int, help='Random mode seed (default search.seed)')
    parser.add_argument('--witness-cap', type=int, help='Stop after this many witnesses')
    parser.add_argument('--reduce-cycle', action='store_true',
                        help='Dihedral reduction (input must be an unweighted cycle in cycle order)')
    parser.add_argument('--force', action='store_true',
                        help='Allow exhaustive search above search.exhaustive_max_generators')


def load_ideal_arg(args):
    I = load_ideal(args.ideal)
    logger.debug(f"Loaded {args.ideal}: {I.n} generators over {I.ctx.var_count} variables")
    return I


def order_arg(args, I) -> GenOrder:
    if getattr(args, 'order', None):
        return GenOrder.parse(args.order, I.n)
    return GenOrder.identity(I.n)


def field_arg(args):
    """--rational beats --prime; None leaves the configured default"""
    if getattr(args, 'rational', False):
        return FieldSpec.rational()
    if getattr(args, 'prime', None) is not None:
        return FieldSpec.modular(args.prime)
    return None


def budget_arg(args) -> SearchBudget:
    return SearchBudget.from_config(args.budget_orders, args.budget_seconds)


def output_format(args) -> str:
    return getattr(args, 'format', None) or get('output.format', 'text')


def emit(args, payload, text=None):
    """Print payload as JSON, or text (falling back to JSON) in text mode"""
    if output_format(args) == 'json' or text is None:
        print(json.dumps(payload, indent=2, sort_keys=False, default=str))
    else:
        print(text)


def fmt_ranks(ranks) -> str:
    return '(' + ', '.join(str(r) for r in ranks) + ')'
