#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Adaptive Protocol
Closed feedback loop: the receiver asks for more phase layers when only
phase decoding fails
"""

import csv
import io
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from config import Config
from core.errors import InvalidConfigError
from analytics.block_error_stats import clopper_pearson, format_rate
from codes.family import AqnccConfig, assemble
from simulation.channel import ChannelModel, sample_error
from simulation.policy import HOLD, policy_update
from simulation.trial import EXACT, TrialRecord, TrialRunner

logger = logging.getLogger(__name__)

TRACE_COLUMNS = ('block', 'pz_true', 'r', 'phase_ok', 'bit_ok')

ESTIMATE = 'estimate'
MIDPOINT = 'midpoint'
ORACLE = 'oracle'


class PzEstimator:
    """Exponentially weighted fraction of qubits the phase decoder flipped"""

    def __init__(self, initial: float, window: int):
        if window < 1:
            raise InvalidConfigError(f"estimate window must be at least 1, got {window}")
        self.value = initial
        self.alpha = 1.0 / window

    def update(self, flipped: int, n: int) -> float:
        self.value = (1.0 - self.alpha) * self.value + self.alpha * (flipped / n)
        return self.value


@dataclass
class AdaptiveTrace:
    family: AqnccConfig
    channel: ChannelModel
    policy: str
    prior_mode: str
    horizon: int
    seed: int
    mode: str
    max_iter: int
    records: List[TrialRecord] = field(default_factory=list)
    baseline: Optional['AdaptiveTrace'] = None

    @property
    def block_fail(self) -> int:
        return sum(not rec.block_ok for rec in self.records)

    @property
    def phase_fail(self) -> int:
        return sum(not rec.phase_ok for rec in self.records)

    @property
    def bit_fail(self) -> int:
        return sum(not rec.bit_ok for rec in self.records)

    @property
    def ber(self) -> float:
        return self.block_fail / len(self.records)

    @property
    def r_levels(self) -> List[int]:
        return [rec.r_used for rec in self.records]

    def summary(self, confidence: Optional[float] = None) -> Dict[str, Any]:
        ci_lo, ci_hi = clopper_pearson(self.block_fail, len(self.records), confidence)
        levels = self.r_levels
        data = {
            'policy': self.policy,
            'prior': self.prior_mode,
            'initial_r': self.family.r,
            'blocks': len(self.records),
            'phase_fail': self.phase_fail,
            'bit_fail': self.bit_fail,
            'block_fail': self.block_fail,
            'ber': self.ber,
            'ci_lo': ci_lo,
            'ci_hi': ci_hi,
            'r_min': min(levels),
            'r_max': max(levels),
            'r_mean': float(np.mean(levels)),
            'r_changes': int(np.count_nonzero(np.diff(levels))),
        }
        if self.baseline is not None:
            data['baseline'] = self.baseline.summary(confidence)
        return data


def trace_csv(trace: AdaptiveTrace) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(TRACE_COLUMNS)
    for rec in trace.records:
        writer.writerow([rec.block_index, format_rate(rec.pz_true), rec.r_used,
                         int(rec.phase_ok), int(rec.bit_ok)])
    return buffer.getvalue()


def _simulate(family: AqnccConfig, channel: ChannelModel, policy: str, horizon: int,
              seed: int, prior_mode: str, mode: str, max_iter: int) -> AdaptiveTrace:
    process_seq, error_seq = np.random.SeedSequence(seed).spawn(2)
    pz_stream = channel.pz_process.stream(np.random.default_rng(process_seq))
    error_rng = np.random.default_rng(error_seq)

    n = family.n
    runners: Dict[int, TrialRunner] = {}
    estimator = PzEstimator(channel.pz_process.midpoint, Config.ADAPTIVE['estimate_window'])
    bounds = (0, family.r_max)
    trace = AdaptiveTrace(family, channel, policy, prior_mode, horizon, seed, mode, max_iter)

    r = family.r
    for block in range(horizon):
        pz = next(pz_stream)
        err = sample_error(n, channel.px, pz, error_rng)

        if r not in runners:
            runners[r] = TrialRunner(assemble(family.with_r(r)), mode, max_iter)

        if prior_mode == ORACLE:
            prior_z = pz
        elif prior_mode == MIDPOINT:
            prior_z = channel.pz_process.midpoint
        else:
            prior_z = estimator.value

        record = runners[r].run(err, (prior_z, channel.px), block_index=block, pz_true=pz)
        trace.records.append(record)
        estimator.update(record.phase_estimate_weight, n)

        next_r = policy_update(r, (record.phase_ok, record.bit_ok), bounds, policy)
        if next_r != r:
            logger.debug(f"Block {block}: r {r} -> {next_r}")
        r = next_r

    return trace


def run_adaptive(family: AqnccConfig, channel: ChannelModel, policy: Optional[str] = None,
                 horizon: Optional[int] = None, seed: Optional[int] = None,
                 prior_mode: Optional[str] = None, mode: str = EXACT,
                 max_iter: Optional[int] = None,
                 baseline_r: Optional[int] = None) -> AdaptiveTrace:
    """Sequential adaptive run starting at family.r

    A level change decided after block b applies from block b + 1. With
    baseline_r set, a fixed-level trace is replayed on the same pz sequence
    and the same error patterns and attached as trace.baseline.
    """
    policy = Config.ADAPTIVE['policy'] if policy is None else policy
    horizon = Config.ADAPTIVE['horizon'] if horizon is None else horizon
    seed = channel.seed if seed is None else seed
    prior_mode = Config.ADAPTIVE['prior'] if prior_mode is None else prior_mode
    max_iter = Config.DECODER['max_iter'] if max_iter is None else max_iter

    if horizon < 1:
        raise InvalidConfigError(f"horizon must be at least 1, got {horizon}")
    if policy not in Config.ADAPTIVE['policies']:
        raise InvalidConfigError(f"unknown policy {policy!r}; choose from {Config.ADAPTIVE['policies']}")
    if prior_mode not in Config.ADAPTIVE['priors']:
        raise InvalidConfigError(f"unknown prior {prior_mode!r}; choose from {Config.ADAPTIVE['priors']}")

    logger.info(f"Adaptive run: p={family.p} i={family.i} r0={family.r} policy={policy} "
                f"prior={prior_mode} horizon={horizon}")
    trace = _simulate(family, channel, policy, horizon, seed, prior_mode, mode, max_iter)
    logger.info(f"Adaptive run finished: {trace.block_fail}/{horizon} blocks failed")

    if baseline_r is not None:
        fixed = family.with_r(baseline_r)
        trace.baseline = _simulate(fixed, channel, HOLD, horizon, seed, prior_mode, mode, max_iter)
        logger.info(f"Baseline r={baseline_r}: {trace.baseline.block_fail}/{horizon} blocks failed")

    return trace
