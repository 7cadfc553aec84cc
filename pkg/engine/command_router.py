#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Command Router
Resolve a run configuration and route it to the subcommand handler
"""

import dataclasses
import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

import numpy as np

from config import Config
from core.alist import load_alist
from core.errors import DimensionMismatchError, FormatError, InvalidConfigError
from analytics.system_health import SystemHealthMonitor
from codes.criteria import check_criteria
from codes.family import AqnccConfig, assemble, export_pair, params
from decoding.bp_decoder import bp_syndrome_decode
from failsafe.crash_handler import CrashHandler
from simulation.adaptive import run_adaptive, trace_csv
from simulation.channel import ChannelModel, PzProcess
from simulation.sweep import run_sweep, sweep_csv, sweep_summary
from storage.file_engine import FileEngine

logger = logging.getLogger(__name__)

COMMANDS = ('construct', 'check', 'sweep', 'adapt', 'decode')
SIDES = ('phase', 'bit')
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


# ============================================================================
# VALUE PARSING (shared by command-line flags and config files)
# ============================================================================

def _split(text: str) -> List[str]:
    return [part.strip() for part in str(text).split(':')]


def parse_int(value: Any) -> int:
    if isinstance(value, bool):
        raise InvalidConfigError(f"expected an integer, got {value!r}")
    if isinstance(value, float):
        if not value.is_integer():
            raise InvalidConfigError(f"expected an integer, got {value!r}")
        return int(value)
    try:
        return int(str(value).strip())
    except ValueError:
        raise InvalidConfigError(f"expected an integer, got {value!r}") from None


def parse_float(value: Any) -> float:
    if isinstance(value, bool):
        raise InvalidConfigError(f"expected a number, got {value!r}")
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise InvalidConfigError(f"expected a number, got {value!r}") from None
    if not math.isfinite(number):
        raise InvalidConfigError(f"expected a finite number, got {value!r}")
    return number


def parse_bool(value: Any) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ('1', 'true', 'yes', 'on'):
        return True
    if text in ('0', 'false', 'no', 'off'):
        return False
    raise InvalidConfigError(f"expected a boolean, got {value!r}")


def parse_int_range(value: Any) -> List[int]:
    """'lo:hi:step' or 'lo:hi' (inclusive), 'a,b,c', a single value or a list"""
    if isinstance(value, (list, tuple)):
        return [parse_int(v) for v in value]
    text = str(value).strip()
    if ',' in text:
        return [parse_int(v) for v in text.split(',')]
    parts = _split(text)
    if len(parts) == 1:
        return [parse_int(parts[0])]
    if len(parts) not in (2, 3):
        raise InvalidConfigError(f"range {text!r} is not lo:hi[:step]")
    lo, hi = parse_int(parts[0]), parse_int(parts[1])
    step = parse_int(parts[2]) if len(parts) == 3 else 1
    if step < 1 or lo > hi:
        raise InvalidConfigError(f"range {text!r} needs lo <= hi and a positive step")
    return list(range(lo, hi + 1, step))


def parse_float_range(value: Any) -> List[float]:
    """Like parse_int_range; grid values are rounded to 12 significant digits"""
    if isinstance(value, (list, tuple)):
        return [parse_float(v) for v in value]
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return [parse_float(value)]
    text = str(value).strip()
    if ',' in text:
        return [parse_float(v) for v in text.split(',')]
    parts = _split(text)
    if len(parts) == 1:
        return [parse_float(parts[0])]
    if len(parts) != 3:
        raise InvalidConfigError(f"range {text!r} is not lo:hi:step")
    lo, hi, step = (parse_float(part) for part in parts)
    if step <= 0.0 or lo > hi:
        raise InvalidConfigError(f"range {text!r} needs lo <= hi and a positive step")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [float(format(lo + k * step, '.12g')) for k in range(count)]


def parse_interval(value: Any) -> Tuple[float, float]:
    """'lo:hi' or a two-element list"""
    parts = list(value) if isinstance(value, (list, tuple)) else _split(value)
    if len(parts) != 2:
        raise InvalidConfigError(f"interval {value!r} is not lo:hi")
    lo, hi = (parse_float(part) for part in parts)
    return lo, hi


def _choice(options) -> Callable[[Any], str]:
    def parse(value: Any) -> str:
        text = str(value)
        if text not in options:
            raise InvalidConfigError(f"{text!r} is not one of {list(options)}")
        return text
    return parse


def _text(value: Any) -> str:
    return str(value)


# ============================================================================
# RUN CONFIGURATION
# ============================================================================

@dataclass
class RunConfig:
    """Fully resolved run; every field except p has a default"""

    command: str
    p: Optional[int] = None
    i: int = 0
    r: int = 0
    r_values: Optional[List[int]] = None
    askew: bool = False
    px: List[float] = field(default_factory=lambda: [Config.SIMULATION['px']])
    pz: Optional[List[float]] = None
    period: int = Config.ADAPTIVE['period']
    pz_range: Tuple[float, float] = (Config.ADAPTIVE['pz_lo'], Config.ADAPTIVE['pz_hi'])
    trials: int = Config.SIMULATION['trials']
    horizon: int = Config.ADAPTIVE['horizon']
    max_iter: int = Config.DECODER['max_iter']
    mode: str = Config.SIMULATION['mode']
    seed: int = Config.SIMULATION['seed']
    jobs: Optional[int] = None
    policy: str = Config.ADAPTIVE['policy']
    prior_mode: str = Config.ADAPTIVE['prior']
    baseline_r: Optional[int] = None
    alist: Optional[str] = None
    side: str = 'phase'
    syndrome: Optional[str] = None
    prior_p: Optional[float] = None
    out: Optional[str] = None
    log_level: str = Config.LOGGING['level']

    def family(self, r: Optional[int] = None) -> AqnccConfig:
        return AqnccConfig(self.p, self.i, self.r if r is None else r, self.askew)

    @property
    def output_dir(self) -> Path:
        return Path(self.out) if self.out else Config.output_dir()

    def as_dict(self) -> Dict[str, Any]:
        data = dataclasses.asdict(self)
        data['pz_range'] = list(self.pz_range)
        return data

    def validate(self):
        """Raise InvalidConfigError naming the offending flag"""
        if self.command not in COMMANDS:
            raise InvalidConfigError(f"unknown command {self.command!r}")

        if self.command == 'decode' and self.alist:
            self._validate_decode()
            return
        if self.p is None:
            raise InvalidConfigError("--p is required")
        try:
            family = self.family()
        except InvalidConfigError as e:
            raise InvalidConfigError(f"--p/--i/--r/--askew: {e}") from None

        if self.max_iter < 1:
            raise InvalidConfigError(f"--max-iter must be at least 1, got {self.max_iter}")
        if self.jobs is not None and self.jobs < 1:
            raise InvalidConfigError(f"--jobs must be at least 1, got {self.jobs}")
        if self.seed < 0:
            raise InvalidConfigError(f"--seed must be non-negative, got {self.seed}")
        for name, values in (('--px', self.px), ('--pz', self.pz or [])):
            for value in values:
                if not 0.0 <= value < 0.5:
                    raise InvalidConfigError(f"{name} value {value} outside [0, 0.5)")

        if self.command == 'sweep':
            if self.trials < 1:
                raise InvalidConfigError(f"--trials must be at least 1, got {self.trials}")
            for r in self.r_values or []:
                if r not in family.r_values:
                    raise InvalidConfigError(f"--r value {r} outside [0, {family.r_max}]")
            if not self.px or (self.pz is not None and not self.pz):
                raise InvalidConfigError("--px and --pz need at least one value")
        elif self.command == 'adapt':
            if self.horizon < 1:
                raise InvalidConfigError(f"--horizon must be at least 1, got {self.horizon}")
            if len(self.px) != 1:
                raise InvalidConfigError("--px takes a single value for adapt")
            if self.pz is not None and len(self.pz) != 1:
                raise InvalidConfigError("--pz takes a single value for adapt")
            if self.period < 1:
                raise InvalidConfigError(f"--period must be at least 1, got {self.period}")
            lo, hi = self.pz_range
            if not 0.0 <= lo <= hi < 0.5:
                raise InvalidConfigError(f"--pz-range [{lo}, {hi}] must satisfy 0 <= lo <= hi < 0.5")
            if self.baseline_r is not None and self.baseline_r not in family.r_values:
                raise InvalidConfigError(f"--baseline-r {self.baseline_r} outside [0, {family.r_max}]")
        elif self.command == 'decode':
            self._validate_decode()

    def _validate_decode(self):
        if self.syndrome is None:
            raise InvalidConfigError("--syndrome is required")
        if not self.syndrome or set(self.syndrome) - {'0', '1'}:
            raise InvalidConfigError("--syndrome must be a string of 0s and 1s")
        if self.prior_p is not None and not 0.0 < self.prior_p < 0.5:
            raise InvalidConfigError(f"--prior {self.prior_p} outside (0, 0.5)")
        if self.max_iter < 1:
            raise InvalidConfigError(f"--max-iter must be at least 1, got {self.max_iter}")


# field name -> converter applied to config-file values and flag strings
FIELD_PARSERS: Dict[str, Callable[[Any], Any]] = {
    'p': parse_int,
    'i': parse_int,
    'r': parse_int,
    'r_values': parse_int_range,
    'askew': parse_bool,
    'px': parse_float_range,
    'pz': parse_float_range,
    'period': parse_int,
    'pz_range': parse_interval,
    'trials': parse_int,
    'horizon': parse_int,
    'max_iter': parse_int,
    'mode': _choice(Config.SIMULATION['modes']),
    'seed': parse_int,
    'jobs': parse_int,
    'policy': _choice(Config.ADAPTIVE['policies']),
    'prior_mode': _choice(Config.ADAPTIVE['priors']),
    'baseline_r': parse_int,
    'alist': _text,
    'side': _choice(SIDES),
    'syndrome': _text,
    'prior_p': parse_float,
    'out': _text,
    'log_level': _choice(LOG_LEVELS),
}


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """Config-file values keyed by RunConfig field; dashes in keys are accepted"""
    try:
        raw = FileEngine.load_json(path)
    except FileNotFoundError:
        raise InvalidConfigError(f"--config file {path} does not exist") from None
    except FormatError as e:
        raise InvalidConfigError(f"--config: {e}") from None
    if not isinstance(raw, dict):
        raise InvalidConfigError(f"--config file {path} must hold a JSON object")

    values = {}
    for key, value in raw.items():
        name = str(key).replace('-', '_')
        if name not in FIELD_PARSERS:
            raise InvalidConfigError(f"unknown key {key!r} in config file {path}")
        try:
            values[name] = FIELD_PARSERS[name](value)
        except InvalidConfigError as e:
            raise InvalidConfigError(f"config key {key!r}: {e}") from None
    return values


def resolve_run_config(command: str, flags: Dict[str, Any],
                       config_path: Optional[Union[str, Path]] = None) -> RunConfig:
    """Defaults, then config file, then explicit flags; validated before returning"""
    values: Dict[str, Any] = {}
    if config_path:
        values.update(load_config_file(config_path))
    values.update({key: value for key, value in flags.items() if value is not None})

    run = RunConfig(command=command, **values)
    run.validate()
    return run


# ============================================================================
# ROUTER
# ============================================================================

class CommandRouter:
    """Subcommand dispatch with exit-code mapping"""

    def __init__(self):
        self.config = Config
        self.monitor = SystemHealthMonitor()
        self.command_handlers: Dict[str, Callable[[RunConfig], int]] = {
            'construct': self.handle_construct,
            'check': self.handle_check,
            'sweep': self.handle_sweep,
            'adapt': self.handle_adapt,
            'decode': self.handle_decode,
        }

    def route(self, run: RunConfig) -> int:
        handler = self.command_handlers.get(run.command)
        if handler is None:
            logger.error(f"Unknown command: {run.command}")
            return self.config.EXIT_CODES['usage']

        try:
            return handler(run)
        except (InvalidConfigError, FormatError, DimensionMismatchError, FileNotFoundError) as e:
            logger.error(f"{run.command}: {e}")
            return self.config.EXIT_CODES['usage']
        except Exception as e:
            return CrashHandler(run.output_dir).handle_crash(e, {'run_config': run.as_dict()})

    def envelope(self, run: RunConfig, results: Any) -> Dict[str, Any]:
        """JSON results envelope: tool, resolved config, environment"""
        return {
            'tool': self.config.get_tool_info(),
            'command': run.command,
            'created_at': self.monitor.timestamp(),
            'environment': self.monitor.snapshot(),
            'config': run.as_dict(),
            'results': results,
        }

    def handle_construct(self, run: RunConfig) -> int:
        pair = assemble(run.family())
        code_params = params(pair)
        cfg = pair.config
        name = f"aqncc_p{cfg.p}_i{cfg.i}_r{cfg.r}{'_askew' if cfg.askew else ''}"
        written = export_pair(pair, run.output_dir / name, code_params, run_config=run.as_dict())

        print(f"{code_params.notation}  girth {code_params.girth}  "
              f"ranks {code_params.rank_h1}/{code_params.rank_h2}")
        for kind, path in written.items():
            print(f"  {kind}: {path}")
        return self.config.EXIT_CODES['success']

    def handle_check(self, run: RunConfig) -> int:
        report = check_criteria(run.family(0))
        print(report.format())
        if report.all_required_pass:
            return self.config.EXIT_CODES['success']
        return self.config.EXIT_CODES['criteria_failed']

    def handle_sweep(self, run: RunConfig) -> int:
        family = run.family()
        r_values = run.r_values if run.r_values is not None else list(family.r_values)
        pz_values = run.pz if run.pz is not None else [Config.SIMULATION['pz']]
        jobs = run.jobs or self.monitor.default_jobs()

        results = run_sweep(family, r_values, run.px, pz_values, run.trials, run.seed,
                            mode=run.mode, max_iter=run.max_iter, jobs=jobs)

        out = run.output_dir
        csv_path = FileEngine.save_text(out / self.config.OUTPUT['sweep_csv'], sweep_csv(results))
        payload = {
            'points': [res.as_dict() for res in results],
            'summary': sweep_summary(results),
        }
        json_path = FileEngine.save_json(out / self.config.OUTPUT['sweep_json'],
                                         self.envelope(run, payload))

        for res in results:
            print(f"r={res.point.family.r:<3} px={res.point.px:<8g} pz={res.point.pz:<8g} "
                  f"BER={res.ber:.3e}  [{res.ci_lo:.3e}, {res.ci_hi:.3e}]")
        print(f"Wrote {csv_path} and {json_path}")
        return self.config.EXIT_CODES['success']

    def handle_adapt(self, run: RunConfig) -> int:
        if run.pz is not None:
            process = PzProcess.constant(run.pz[0])
        else:
            lo, hi = run.pz_range
            process = PzProcess(period=run.period, lo=lo, hi=hi)
        channel = ChannelModel(run.px[0], process, run.seed)

        trace = run_adaptive(run.family(), channel, run.policy, run.horizon, run.seed,
                             run.prior_mode, run.mode, run.max_iter, run.baseline_r)

        out = run.output_dir
        csv_path = FileEngine.save_text(out / self.config.OUTPUT['adaptive_csv'], trace_csv(trace))
        payload = {'channel': channel.as_dict(), 'summary': trace.summary()}
        json_path = FileEngine.save_json(out / self.config.OUTPUT['adaptive_json'],
                                         self.envelope(run, payload))

        print(f"Adaptive ({run.policy}): {trace.block_fail}/{len(trace.records)} blocks failed, "
              f"BER={trace.ber:.3e}")
        if trace.baseline is not None:
            print(f"Fixed r={run.baseline_r}: {trace.baseline.block_fail}/{len(trace.records)} "
                  f"blocks failed, BER={trace.baseline.ber:.3e}")
        print(f"Wrote {csv_path} and {json_path}")
        return self.config.EXIT_CODES['success']

    def handle_decode(self, run: RunConfig) -> int:
        if run.alist:
            h = load_alist(run.alist)
        else:
            pair = assemble(run.family())
            h = pair.h1 if run.side == 'phase' else pair.h2

        syndrome = np.array([int(ch) for ch in run.syndrome], dtype=np.uint8)
        if syndrome.size != h.n_rows:
            raise DimensionMismatchError(
                f"--syndrome has {syndrome.size} bits but the matrix has {h.n_rows} checks"
            )
        prior = run.prior_p
        if prior is None:
            prior = Config.SIMULATION['pz'] if run.side == 'phase' else Config.SIMULATION['px']

        outcome = bp_syndrome_decode(h, syndrome, prior, run.max_iter)
        print(f"estimate:   {outcome.bitstring()}")
        print(f"weight:     {int(outcome.estimate.sum())}")
        print(f"converged:  {str(outcome.converged).lower()}")
        print(f"iterations: {outcome.iterations_used}")
        return self.config.EXIT_CODES['success']
