# coding: utf-8
"""
ramp analyze|sweep|optimize|validate [--config run.json] [overrides]

Exit codes: 0 success, 1 validation failure, 2 configuration or usage
error, 3 infeasible optimization, 4 oracle precondition failure.
"""
import argparse
import logging
import sys

from ramp import __version__
from ramp.cli.commands import COMMANDS
from ramp.cli.commands import EXIT_CONFIG
from ramp.cli.commands import EXIT_INFEASIBLE
from ramp.cli.commands import EXIT_ORACLE
from ramp.cli.config import FORMATS
from ramp.cli.config import load_run_config
from ramp.exceptions import ConfigurationError
from ramp.exceptions import DomainError
from ramp.exceptions import InfeasibleError
from ramp.exceptions import OracleError


logger = logging.getLogger(__name__)

HELP = {
    'analyze': 'evaluate one design point per configured scheme',
    'sweep': 'sweep t, block size or replica count and emit a table per scheme',
    'optimize': 'find the smallest t that meets the DUE (and NDE) targets',
    'validate': 'check the closed forms against enumeration and Monte Carlo',
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='path to a JSON run configuration')
    common.add_argument('--seed', type=int, help='oracle seed')
    common.add_argument('--trials', type=int, help='Monte Carlo trials per estimate')
    common.add_argument('--format', choices=FORMATS, dest='output_format', help='output format')
    common.add_argument('--out', help='write data to this file (plus a .meta.json sidecar) instead of stdout')
    common.add_argument('--t', type=int, help='correction capability of the code')
    common.add_argument('--perf-filter', type=float, help='fraction of errors reaching the capacity tier')
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG logs on stderr')

    parser = argparse.ArgumentParser(prog='ramp', description='Replication-aware memory error protection calculator')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True
    for name in COMMANDS:
        subparsers.add_parser(name, parents=[common], help=HELP[name])
    return parser


def configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def main(argv=None, stdout=None):
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    stdout = stdout or sys.stdout

    try:
        run = load_run_config(
            args.config,
            seed=args.seed,
            trials=args.trials,
            output_format=args.output_format,
            out=args.out,
            t=args.t,
            perf_filter=args.perf_filter,
        )
        return COMMANDS[args.command](run, stdout)
    except InfeasibleError as e:
        print(f'ramp: infeasible (binding constraint: {e.constraint}): {e}', file=sys.stderr)
        return EXIT_INFEASIBLE
    except OracleError as e:
        print(f'ramp: oracle error: {e}', file=sys.stderr)
        return EXIT_ORACLE
    except (ConfigurationError, DomainError) as e:
        print(f'ramp: error: {e}', file=sys.stderr)
        return EXIT_CONFIG


if __name__ == '__main__':
    sys.exit(main())
