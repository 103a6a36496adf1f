"""
Matching commands: matching, critical, morse-digraph, types, friendly, minimal
"""

import logging

import networkx as nx

from components.bridge_theory import SymbolClass, classify_structural
from components.matching_engine import (
    bridge_matching, classify_by_run, critical_counts, critical_symbols, friendliness_report,
    matching_to_json, morse_digraph, validate_matching,
)
from components.morse_complex import differential, is_minimal, lcm_adjacency_ok
from components.order_search import search_friendly, search_minimal
from components.taylor_symbols import bits, complex_for, format_symbol

from cli.helpers import (
    EXIT_NEGATIVE, EXIT_OK, add_ideal_argument, add_search_arguments, budget_arg, emit, field_arg,
    fmt_ranks, load_ideal_arg, order_arg,
)

logger = logging.getLogger(__name__)


def cmd_matching(args):
    I = load_ideal_arg(args)
    ord = order_arg(args, I)
    A = bridge_matching(I, ord)
    report = validate_matching(A, I, ord)
    payload = matching_to_json(A, I, include_classes=args.classes)
    payload['order'] = list(ord.perm)
    payload['validation'] = report.to_json()
    lines = [f"order {ord}: {len(A)} edges, valid={report.ok}"]
    for s, t in A.pairs:
        lines.append(f"  {format_symbol(s)} -> {format_symbol(t)}  (sbridge {A.removed_generator(s, t)})")
    emit(args, payload, '\n'.join(lines))
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_critical(args):
    I = load_ideal_arg(args)
    ord = order_arg(args, I)
    crit = critical_symbols(bridge_matching(I, ord), I)
    T = complex_for(I)
    payload = {
        'order': list(ord.perm),
        'counts': list(critical_counts(crit)),
        'critical': {str(k): [bits(s) for s in v] for k, v in crit.items() if v},
    }
    lines = [f"critical counts {fmt_ranks(critical_counts(crit))}"]
    for k in sorted(crit):
        for s in crit[k]:
            lines.append(f"  {format_symbol(s)}  lcm={T.lcm(s)}")
    emit(args, payload, '\n'.join(lines))
    return EXIT_OK


def cmd_morse_digraph(args):
    I = load_ideal_arg(args)
    ord = order_arg(args, I)
    G = morse_digraph(bridge_matching(I, ord), I)
    acyclic = nx.is_directed_acyclic_graph(G)
    payload = {
        'order': list(ord.perm),
        'acyclic': acyclic,
        'edges': [
            {'source': bits(u), 'target': bits(v), 'matched': d['matched']}
            for u, v, d in G.edges(data=True)
        ],
    }
    matched = sum(1 for _, _, d in G.edges(data=True) if d['matched'])
    text = f"Morse digraph: {G.number_of_nodes()} vertices, {G.number_of_edges()} edges ({matched} reversed), acyclic={acyclic}"
    emit(args, payload, text)
    return EXIT_OK


def cmd_types(args):
    I = load_ideal_arg(args)
    ord = order_arg(args, I)
    A = bridge_matching(I, ord)
    classes = classify_by_run(A)
    T = complex_for(I)
    grouped = {c: [] for c in SymbolClass}
    disagreements = []
    for s, c in sorted(classes.items()):
        grouped[c].append(s)
        if s and classify_structural(s, T, ord) != c:
            disagreements.append(s)
    if disagreements:
        logger.warning(f"Structural and run classifications differ on {len(disagreements)} symbols")
    payload = {
        'order': list(ord.perm),
        'type1': [bits(s) for s in grouped[SymbolClass.TYPE1]],
        'type2': [bits(s) for s in grouped[SymbolClass.TYPE2]],
        'potential_type2_only': [bits(s) for s in grouped[SymbolClass.POTENTIAL_TYPE2_ONLY]],
        'structural_agrees': not disagreements,
    }
    lines = [f"order {ord}"]
    for c in (SymbolClass.TYPE1, SymbolClass.TYPE2, SymbolClass.POTENTIAL_TYPE2_ONLY):
        lines.append(f"  {c}: " + (' '.join(format_symbol(s) for s in grouped[c]) or '-'))
    emit(args, payload, '\n'.join(lines))
    return EXIT_OK


def _run_search(args, search, **extra):
    I = load_ideal_arg(args)
    report = search(
        I, mode=args.mode, budget=budget_arg(args), seed=args.seed, witness_cap=args.witness_cap,
        threads=args.threads, reduce_cycle=args.reduce_cycle, force=args.force, **extra,
    )
    emit(args, report.to_json(), str(report))
    return EXIT_OK if report.found else EXIT_NEGATIVE


def cmd_friendly(args):
    if args.search:
        return _run_search(args, search_friendly)
    I = load_ideal_arg(args)
    report = friendliness_report(I, order_arg(args, I))
    text = f"order {args.order or 'identity'}: bridge-friendly={report['friendly']}"
    if not report['criterion']['friendly']:
        w = report['criterion']['witness']
        text += f"\n  witness: symbol {w['symbol']} gap {w['gap']}"
    emit(args, report, text)
    return EXIT_OK if report['friendly'] else EXIT_NEGATIVE


def cmd_minimal(args):
    if args.search:
        return _run_search(args, search_minimal, field=field_arg(args))
    I = load_ideal_arg(args)
    ord = order_arg(args, I)
    A = bridge_matching(I, ord)
    D = differential(A, I)
    minimal = is_minimal(D)
    payload = {
        'order': list(ord.perm),
        'minimal': minimal,
        'ranks': list(D.ranks),
        'lcm_adjacency': lcm_adjacency_ok(A, I),
    }
    text = f"order {ord}: bridge-minimal={minimal}, ranks {fmt_ranks(D.ranks)}"
    emit(args, payload, text)
    return EXIT_OK if minimal else EXIT_NEGATIVE


def register(subparsers):
    p = subparsers.add_parser('matching', help='Bridge matching for an order')
    add_ideal_argument(p)
    p.add_argument('--classes', action='store_true', help='Include symbol classes in JSON')
    p.set_defaults(func=cmd_matching)

    p = subparsers.add_parser('critical', help='Critical symbols of the bridge matching')
    add_ideal_argument(p)
    p.set_defaults(func=cmd_critical)

    p = subparsers.add_parser('morse-digraph', help='Base digraph with matched edges reversed')
    add_ideal_argument(p)
    p.set_defaults(func=cmd_morse_digraph)

    p = subparsers.add_parser('types', help='Type-1, type-2 and potentially-type-2-only symbols')
    add_ideal_argument(p)
    p.set_defaults(func=cmd_types)

    p = subparsers.add_parser('friendly', help='Bridge-friendliness for an order, or search')
    add_ideal_argument(p)
    add_search_arguments(p)
    p.set_defaults(func=cmd_friendly)

    p = subparsers.add_parser('minimal', help='Bridge-minimality for an order, or search')
    add_ideal_argument(p)
    add_search_arguments(p)
    p.set_defaults(func=cmd_minimal)
