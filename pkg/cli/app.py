#!/usr/bin/env python
"""
Resolution engine command line

Usage:
    python -m cli [--format json] [--log-level DEBUG] <command> <ideal> [options]

Examples:
    python -m cli minimal data/ideals/four_cycle.txt --order 0,1,2,3
    python -m cli compare data/ideals/four_cycle.txt --order 3,0,1,2
    python -m cli friendly data/ideals/cycle5.txt --search --threads 4
    python -m cli graph iron data/graphs/weirdforest.txt --root x
    python -m cli graph recursion data/graphs/heavy_cycle5.txt

Exit codes:
    0 success, 1 negative verdict, 2 input error, 3 capacity or budget exceeded
"""

import argparse
import logging
import sys
import time

from lib.errors import BudgetExceeded, EngineError
from lib.logging_config import format_duration, kvlog, setup_logging

from cli.commands import graph, ideal, matching, resolution
from cli.helpers import emit

logger = logging.getLogger(__name__)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='bm_resolutions',
        description='Bridge-matching resolutions of monomial ideals',
    )
    parser.add_argument('--format', choices=['text', 'json'], help='Report format (default output.format)')
    parser.add_argument('--threads', type=int, help='Worker processes for order searches (default search.threads)')
    parser.add_argument('--prime', type=int, help='Characteristic of the modular oracle (default field.prime)')
    parser.add_argument('--rational', action='store_true', help='Run the oracle over Q')
    parser.add_argument('--log-level', help='DEBUG, INFO, NOTICE, WARNING, ERROR')

    subparsers = parser.add_subparsers(dest='command', required=True)
    ideal.register(subparsers)
    matching.register(subparsers)
    resolution.register(subparsers)
    graph.register(subparsers)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)

    start = time.time()
    try:
        code = args.func(args)
    except BudgetExceeded as e:
        if e.report is not None:
            emit(args, e.report.to_json(), str(e.report))
        kvlog(logger, logging.WARNING, command=args.command, error_type=type(e).__name__, error_msg=str(e))
        return e.exit_code
    except EngineError as e:
        kvlog(logger, logging.ERROR, command=args.command, error_type=type(e).__name__, error_msg=str(e))
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code

    kvlog(logger, logging.DEBUG, command=args.command, exit_code=code,
          duration=format_duration(int((time.time() - start) * 1000)))
    return code


if __name__ == '__main__':
    sys.exit(main())
