"""
Graph commands: graph edge-ideal | sink | iron | blocks | order | recursion | ek-split
"""

import logging

from components.graph_ideals import (
    betti_splitting_holds, blockends_cycle, blockends_forest, blockends_from_blocks, blocks_cycle,
    blocks_forest, cycle_betti_recursion_total, descending_cycle_order, edge_ideal, ek_split_cycle,
    forest_betti_recursion_graded, forest_betti_recursion_total, graph_to_json, graph_to_text,
    iron_forest, ironing, is_cycle, is_forest, kflip_order, load_graph, natural_forest_order,
    sinking, validate_splitting,
)
from components.ideal_core import ideal_to_json, ideal_to_text
from lib.errors import GraphError

from cli.helpers import EXIT_NEGATIVE, EXIT_OK, emit, fmt_ranks

logger = logging.getLogger(__name__)


def _load(args):
    return load_graph(args.graph)


def _edge_label(D, g):
    u, v = D.edges[g]
    return f"{g}:{u}->{v}"


def cmd_edge_ideal(args):
    D = _load(args)
    emap = edge_ideal(D)
    payload = ideal_to_json(emap.ideal)
    payload['edges'] = [list(e) for e in D.edges]
    emit(args, payload, ideal_to_text(emap.ideal).rstrip())
    return EXIT_OK


def cmd_sink(args):
    D = sinking(_load(args))
    emit(args, graph_to_json(D), graph_to_text(D).rstrip())
    return EXIT_OK


def cmd_iron(args):
    D = sinking(_load(args))
    ironed = iron_forest(D, args.root) if args.root else ironing(D)
    emit(args, graph_to_json(ironed), graph_to_text(ironed).rstrip())
    return EXIT_OK


def cmd_blocks(args):
    D = _load(args)
    if is_cycle(D):
        blocks, ends = blocks_cycle(D), blockends_cycle(D)
        payload = {'kind': 'cycle', 'blocks': [list(b) for b in blocks], 'blockends': ends,
                   'classic': not ends}
    elif is_forest(D):
        blocks, ends = blocks_forest(D), blockends_forest(D)
        cross = blockends_from_blocks(D)
        if cross != ends:
            logger.warning(f"Blockend characterization {ends} differs from block ends {cross}")
        payload = {'kind': 'forest', 'blocks': [list(b) for b in blocks], 'blockends': ends}
    else:
        raise GraphError("blocks needs a forest or a cycle")
    lines = [f"{payload['kind']}: {len(blocks)} blocks"]
    lines += ['  ' + ' '.join(_edge_label(D, g) for g in b) for b in blocks]
    lines.append('  blockends: ' + (' '.join(_edge_label(D, g) for g in ends) or '-'))
    emit(args, payload, '\n'.join(lines))
    return EXIT_OK


def cmd_order(args):
    D = _load(args)
    if is_cycle(D):
        ord = kflip_order(D, args.kflip) if args.kflip else descending_cycle_order(D)
    else:
        ord = natural_forest_order(D)
    emit(args, {'order': list(ord.perm)}, str(ord))
    return EXIT_OK


def cmd_recursion(args):
    D = _load(args)
    if is_cycle(D):
        totals, pd = cycle_betti_recursion_total(D)
        payload = {'kind': 'cycle', 'totals': list(totals), 'pd': pd}
    elif is_forest(D):
        totals, pd = forest_betti_recursion_total(D)
        payload = {'kind': 'forest', 'totals': list(totals), 'pd': pd}
        if args.graded:
            graded = forest_betti_recursion_graded(D)
            payload['graded'] = [{'i': i, 'deg': d, 'count': c} for (i, d), c in sorted(graded.items())]
    else:
        raise GraphError("recursion needs a forest or a cycle")
    text = f"{payload['kind']}: totals {fmt_ranks(totals)}, pd {pd}"
    if 'graded' in payload:
        text += '\n' + '\n'.join(f"  β_{g['i']},{g['deg']} = {g['count']}" for g in payload['graded'])
    emit(args, payload, text)
    return EXIT_OK


def cmd_ek_split(args):
    split = ek_split_cycle(args.n)
    outer_ok = validate_splitting(split.outer)
    inner_ok = validate_splitting(split.inner)
    payload = split.to_json()
    payload['outer_valid'] = outer_ok
    payload['inner_valid'] = inner_ok
    lines = [
        f"C_{args.n}: |G(J∩K)| = {split.outer.intersection.n}, splitting valid={outer_ok}",
        f"  J∩K = J′ + K′: |G(J′∩K′)| = {split.inner.intersection.n}, splitting valid={inner_ok}",
    ]
    ok = outer_ok and inner_ok
    if args.betti:
        holds = betti_splitting_holds(split.outer.ideal, split.outer.J, split.outer.K)
        payload['betti_splitting'] = holds
        lines.append(f"  Betti splitting: {holds}")
        ok = ok and holds
    emit(args, payload, '\n'.join(lines))
    return EXIT_OK if ok else EXIT_NEGATIVE


def register(subparsers):
    graph = subparsers.add_parser('graph', help='Weighted oriented graphs and their edge ideals')
    sub = graph.add_subparsers(dest='graph_command', required=True)

    def add(name, func, help_text, needs_graph=True):
        p = sub.add_parser(name, help=help_text)
        if needs_graph:
            p.add_argument('graph', help='Graph file (text or JSON)')
        p.set_defaults(func=func)
        return p

    add('edge-ideal', cmd_edge_ideal, 'Edge ideal I(D)')
    add('sink', cmd_sink, 'Reset sink weights to 1')
    p = add('iron', cmd_iron, 'Sink, then orient a cycle or path forward (or a tree away from --root)')
    p.add_argument('--root', help='Root vertex for trees')
    add('blocks', cmd_blocks, 'Blocks and blockends of a forest or cycle')
    p = add('order', cmd_order, 'Natural forest order, or descending / k-flip cycle order')
    p.add_argument('--kflip', type=int, help='Use the k-flip order of a cycle')
    p = add('recursion', cmd_recursion, 'Total Betti numbers and pd by recursion')
    p.add_argument('--graded', action='store_true', help='Also the graded forest recursion')
    p = add('ek-split', cmd_ek_split, 'E-K splittings of the classic cycle C_n', needs_graph=False)
    p.add_argument('n', type=int)
    p.add_argument('--betti', action='store_true', help='Also check the Betti splitting with the oracle')
