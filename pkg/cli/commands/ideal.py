"""
Symbol-level commands: symbols, sbridge, base-digraph, compare
"""

import logging

from components.bridge_theory import sbridge
from components.ideal_core import format_monomial
from components.rival_constructions import compare, dominance_hypothesis
from components.taylor_symbols import (
    base_digraph, bits, complex_for, enumerate_symbols, format_symbol, parse_symbol,
)

from cli.helpers import EXIT_OK, add_ideal_argument, emit, fmt_ranks, load_ideal_arg, order_arg

logger = logging.getLogger(__name__)


def cmd_symbols(args):
    I = load_ideal_arg(args)
    T = complex_for(I)
    masks = list(enumerate_symbols(I, args.card))
    payload = {
        'card': args.card,
        'symbols': [{'symbol': bits(s), 'lcm': str(T.lcm(s))} for s in masks],
    }
    text = '\n'.join(f"{format_symbol(s)}  lcm={format_monomial(T.lcm(s))}" for s in masks) or '(none)'
    emit(args, payload, text)
    return EXIT_OK


def cmd_sbridge(args):
    I = load_ideal_arg(args)
    ord = order_arg(args, I)
    sigma = parse_symbol(args.symbol, I.n)
    b = sbridge(sigma, I, ord)
    payload = {'symbol': bits(sigma), 'order': list(ord.perm), 'sbridge': b}
    if b is None:
        text = f"{format_symbol(sigma)} has no bridge"
    else:
        text = f"sbridge{format_symbol(sigma)} = {b} ({format_monomial(I.gens[b])})"
    emit(args, payload, text)
    return EXIT_OK


def cmd_base_digraph(args):
    I = load_ideal_arg(args)
    G = base_digraph(I)
    text = f"base digraph: {G.vertex_count} vertices, {G.edge_count} edges"
    emit(args, G.to_json(), text)
    return EXIT_OK


def cmd_compare(args):
    I = load_ideal_arg(args)
    ord = order_arg(args, I)
    ranks = compare(I, ord)
    holds, witness = dominance_hypothesis(I, ord)
    payload = dict(ranks)
    payload['order'] = list(ord.perm)
    payload['dominance_hypothesis'] = holds
    if witness:
        payload['dominance_witness'] = [bits(s) for s in witness]
    lines = [f"order {ord}"]
    for name in ('taylor', 'lyubeznik', 'scarf', 'barile_macchia'):
        lines.append(f"  {name:<15} {fmt_ranks(ranks[name])}")
    lines.append(f"  dominance hypothesis: {'holds' if holds else 'fails'}")
    emit(args, payload, '\n'.join(lines))
    return EXIT_OK


def register(subparsers):
    p = subparsers.add_parser('symbols', help='List Taylor symbols')
    add_ideal_argument(p, order=False)
    p.add_argument('--card', type=int, help='Only symbols of this cardinality')
    p.set_defaults(func=cmd_symbols)

    p = subparsers.add_parser('sbridge', help='Smallest bridge of a symbol')
    add_ideal_argument(p)
    p.add_argument('symbol', help='Comma-separated generator indices, e.g. 0,2,3')
    p.set_defaults(func=cmd_sbridge)

    p = subparsers.add_parser('base-digraph', help='Facet digraph of the Taylor simplex')
    add_ideal_argument(p, order=False)
    p.set_defaults(func=cmd_base_digraph)

    p = subparsers.add_parser('compare', help='Taylor / Lyubeznik / Scarf / bridge-matching ranks')
    add_ideal_argument(p)
    p.set_defaults(func=cmd_compare)
