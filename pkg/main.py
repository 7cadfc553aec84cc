#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Main Entry Point
Adaptive quantum noise control codes: construct, check, sweep, adapt, decode
"""

import argparse
import logging
import logging.handlers
import sys
from pathlib import Path
from typing import List, Optional

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.absolute()))

from config import Config
from engine.command_router import (
    FIELD_PARSERS,
    LOG_LEVELS,
    SIDES,
    CommandRouter,
    resolve_run_config,
)
from core.errors import InvalidConfigError

logger = logging.getLogger(__name__)


class ToolArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with the tool's usage code instead of argparse's 2"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(Config.EXIT_CODES['usage'], f"{self.prog}: error: {message}\n")


def _flag(name: str):
    """argparse type wrapper around the shared value parser of one field"""
    parse = FIELD_PARSERS[name]

    def convert(text: str):
        try:
            return parse(text)
        except InvalidConfigError as e:
            raise argparse.ArgumentTypeError(str(e)) from None

    convert.__name__ = name
    return convert


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps unset flags out of the namespace so config files can fill them
    quiet = argparse.SUPPRESS

    common = ToolArgumentParser(add_help=False)
    common.add_argument('--config', default=quiet, help='JSON file of option values')
    common.add_argument('--out', type=_flag('out'), default=quiet,
                        help=f"output directory (default ${Config.OUTPUT_ENV_VAR} or "
                             f"{Config.OUTPUT['default_dir']})")
    common.add_argument('--log-level', dest='log_level', type=str.upper, choices=LOG_LEVELS,
                        default=quiet)
    common.add_argument('--seed', type=_flag('seed'), default=quiet)
    common.add_argument('--max-iter', dest='max_iter', type=_flag('max_iter'), default=quiet)

    family = ToolArgumentParser(add_help=False)
    family.add_argument('--p', type=_flag('p'), default=quiet, help='odd prime')
    family.add_argument('--i', type=_flag('i'), default=quiet, help='family index')
    family.add_argument('--askew', action='store_true', default=quiet,
                        help='prepend the all-zero row to the CDM')

    simulation = ToolArgumentParser(add_help=False)
    simulation.add_argument('--px', type=_flag('px'), default=quiet)
    simulation.add_argument('--pz', type=_flag('pz'), default=quiet)
    simulation.add_argument('--mode', type=_flag('mode'), default=quiet,
                            help='success criterion: exact or degenerate')

    parser = ToolArgumentParser(
        prog=Config.TOOL_NAME,
        description='Adaptive quantum noise control codes from cyclic difference matrices',
    )
    parser.add_argument('--version', action='version',
                        version=f"{Config.TOOL_NAME} {Config.TOOL_VERSION}")
    commands = parser.add_subparsers(dest='command', required=True)

    construct = commands.add_parser('construct', parents=[common, family],
                                    help='build a code pair and export alist files')
    construct.add_argument('--r', type=_flag('r'), default=quiet, help='rebalance level')

    commands.add_parser('check', parents=[common, family],
                        help='audit the six criteria over every rebalance level')

    sweep = commands.add_parser('sweep', parents=[common, family, simulation],
                                help='block error rates over an (r, px, pz) grid')
    sweep.add_argument('--r', dest='r_values', type=_flag('r_values'), default=quiet,
                       help='levels as lo:hi:step (default: all legal)')
    sweep.add_argument('--trials', type=_flag('trials'), default=quiet)
    sweep.add_argument('--jobs', type=_flag('jobs'), default=quiet,
                       help='worker processes (default: logical CPUs)')

    adapt = commands.add_parser('adapt', parents=[common, family, simulation],
                                help='closed-loop adaptive run')
    adapt.add_argument('--r', type=_flag('r'), default=quiet, help='initial level')
    adapt.add_argument('--horizon', type=_flag('horizon'), default=quiet, help='blocks')
    adapt.add_argument('--policy', type=_flag('policy'), default=quiet)
    adapt.add_argument('--prior', dest='prior_mode', type=_flag('prior_mode'), default=quiet)
    adapt.add_argument('--period', type=_flag('period'), default=quiet,
                       help='blocks between pz redraws')
    adapt.add_argument('--pz-range', dest='pz_range', type=_flag('pz_range'), default=quiet,
                       help='lo:hi of the uniform pz process')
    adapt.add_argument('--baseline-r', dest='baseline_r', type=_flag('baseline_r'), default=quiet,
                       help='also run a fixed level on the same channel')
    adapt.add_argument('--jobs', type=_flag('jobs'), default=quiet,
                       help='accepted for symmetry; one trace runs on one worker')

    decode = commands.add_parser('decode', parents=[common, family],
                                 help='decode one syndrome (debugging)')
    decode.add_argument('--r', type=_flag('r'), default=quiet)
    decode.add_argument('--alist', type=_flag('alist'), default=quiet,
                        help='check matrix file; otherwise built from --p/--i/--r')
    decode.add_argument('--side', type=_flag('side'), default=quiet, choices=SIDES)
    decode.add_argument('--syndrome', type=_flag('syndrome'), default=quiet)
    decode.add_argument('--prior', dest='prior_p', type=_flag('prior_p'), default=quiet)

    return parser


def setup_logging(level: str, output_dir: Path):
    """Root logger: stderr plus a rotating file under <out>/logs"""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    try:
        log_dir = output_dir / Config.OUTPUT['logs_subdir']
        log_dir.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.handlers.RotatingFileHandler(
            log_dir / Config.LOGGING['file'],
            maxBytes=Config.LOGGING['max_size'],
            backupCount=Config.LOGGING['backup_count'],
            encoding='utf-8',
        ))
    except OSError as e:
        print(f"{Config.TOOL_NAME}: cannot open log file: {e}", file=sys.stderr)

    logging.basicConfig(
        level=getattr(logging, level),
        format=Config.LOGGING['format'],
        handlers=handlers,
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point; returns the process exit code"""
    parser = build_parser()
    args = vars(parser.parse_args(argv))
    command = args.pop('command')
    config_path = args.pop('config', None)

    try:
        run = resolve_run_config(command, args, config_path)
    except InvalidConfigError as e:
        parser.print_usage(sys.stderr)
        print(f"{Config.TOOL_NAME} {command}: error: {e}", file=sys.stderr)
        return Config.EXIT_CODES['usage']

    setup_logging(run.log_level, run.output_dir)

    issues = Config.validate_config()
    if issues:
        logger.error("Configuration issues found:")
        for issue in issues:
            logger.error(f"  - {issue}")
        return Config.EXIT_CODES['usage']

    logger.info(f"{Config.TOOL_NAME} {Config.TOOL_VERSION}: {command}")
    return CommandRouter().route(run)


if __name__ == "__main__":
    sys.exit(main())
