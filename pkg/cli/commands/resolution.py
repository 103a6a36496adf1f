"""
Resolution commands: resolution, betti, oracle
"""

import logging

from components.homology_oracle import strand_exactness, tor_betti
from components.matching_engine import bridge_matching
from components.morse_complex import betti_from_criticals, differential, resolution_report

from cli.helpers import EXIT_OK, add_ideal_argument, emit, field_arg, fmt_ranks, load_ideal_arg, order_arg

logger = logging.getLogger(__name__)


def _graded_text(table) -> list[str]:
    return [f"  β_{i},{d} = {c}" for (i, d), c in sorted(table.graded().items())]


def cmd_resolution(args):
    I = load_ideal_arg(args)
    ord = order_arg(args, I)
    A = bridge_matching(I, ord)
    report = resolution_report(A, I)
    report['order'] = list(ord.perm)
    lines = [
        f"order {ord}: ranks {fmt_ranks(report['ranks'])}",
        f"  minimal={report['minimal']} lcm_adjacency={report['lcm_adjacency']} square_zero={report['square_zero']}",
    ]
    if args.certify:
        strands = strand_exactness(differential(A, I), I, field_arg(args))
        report['strand_exactness'] = strands.to_json()
        lines.append(f"  strand exactness: {'ok' if strands.ok else 'FAILED'} ({strands.checked} strands)")
    emit(args, report, '\n'.join(lines))
    return EXIT_OK


def cmd_betti(args):
    I = load_ideal_arg(args)
    ord = order_arg(args, I)
    table = betti_from_criticals(bridge_matching(I, ord), I)
    payload = {'order': list(ord.perm), 'criticals': table.to_json()}
    lines = [f"critical Betti candidates {fmt_ranks(table.totals())}"] + _graded_text(table)
    if args.oracle:
        betti = tor_betti(I, field_arg(args))
        payload['oracle'] = betti.to_json()
        payload['equal'] = table == betti
        lines.append(f"oracle {fmt_ranks(betti.totals())}: {'equal' if table == betti else 'differs'}")
    emit(args, payload, '\n'.join(lines))
    return EXIT_OK


def cmd_oracle(args):
    I = load_ideal_arg(args)
    betti = tor_betti(I, field_arg(args))
    lines = [f"Betti numbers {fmt_ranks(betti.totals())}, pd {betti.pd}"] + _graded_text(betti)
    emit(args, betti.to_json(), '\n'.join(lines))
    return EXIT_OK


def register(subparsers):
    p = subparsers.add_parser('resolution', help='Morse resolution matrices and minimality verdicts')
    add_ideal_argument(p)
    p.add_argument('--certify', action='store_true', help='Check strand exactness with the oracle')
    p.set_defaults(func=cmd_resolution)

    p = subparsers.add_parser('betti', help='Betti candidates from critical symbols')
    add_ideal_argument(p)
    p.add_argument('--oracle', action='store_true', help='Compare with Tor computed independently')
    p.set_defaults(func=cmd_betti)

    p = subparsers.add_parser('oracle', help='Graded Betti numbers via Tor')
    add_ideal_argument(p, order=False)
    p.set_defaults(func=cmd_oracle)
