#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Static Sweep
Block error rates over a (r, px, pz) grid at fixed rebalance levels
"""

import csv
import io
import logging
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import get_context
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import Config
from core.errors import InvalidConfigError
from analytics.block_error_stats import clopper_pearson, format_rate
from codes.family import AqnccConfig, assemble
from simulation.channel import sample_error
from simulation.trial import EXACT, TrialRunner

logger = logging.getLogger(__name__)

SWEEP_COLUMNS = ('p', 'i', 'r', 'askew', 'px', 'pz', 'trials', 'phase_fail',
                 'bit_fail', 'block_fail', 'ber', 'ci_lo', 'ci_hi', 'seed')

# probabilities enter the seed hash as integers
_SEED_SCALE = 10 ** 12


@dataclass(frozen=True)
class SweepPoint:
    family: AqnccConfig
    px: float
    pz: float


@dataclass(frozen=True)
class SweepResult:
    point: SweepPoint
    trials: int
    phase_fail: int
    bit_fail: int
    block_fail: int
    ci_lo: float
    ci_hi: float
    seed: int
    mode: str
    max_iter: int

    @property
    def ber(self) -> float:
        """Block error rate"""
        return self.block_fail / self.trials

    @property
    def phase_rate(self) -> float:
        return self.phase_fail / self.trials

    @property
    def bit_rate(self) -> float:
        return self.bit_fail / self.trials

    def csv_row(self) -> List[str]:
        fam = self.point.family
        return [
            str(fam.p), str(fam.i), str(fam.r), str(int(fam.askew)),
            format_rate(self.point.px), format_rate(self.point.pz),
            str(self.trials), str(self.phase_fail), str(self.bit_fail), str(self.block_fail),
            format_rate(self.ber), format_rate(self.ci_lo), format_rate(self.ci_hi),
            str(self.seed),
        ]

    def as_dict(self) -> Dict[str, Any]:
        fam = self.point.family
        return {
            'p': fam.p, 'i': fam.i, 'r': fam.r, 'askew': fam.askew,
            'px': self.point.px, 'pz': self.point.pz,
            'trials': self.trials, 'phase_fail': self.phase_fail, 'bit_fail': self.bit_fail,
            'block_fail': self.block_fail, 'ber': self.ber, 'ci_lo': self.ci_lo,
            'ci_hi': self.ci_hi, 'seed': self.seed, 'mode': self.mode, 'max_iter': self.max_iter,
        }


def trial_rng(seed: int, point: SweepPoint, trial: int) -> np.random.Generator:
    """Generator for one trial, a pure function of (seed, grid point, trial index)"""
    fam = point.family
    entropy = [seed, fam.p, fam.i, fam.r, int(fam.askew),
               round(point.px * _SEED_SCALE), round(point.pz * _SEED_SCALE), trial]
    return np.random.default_rng(np.random.SeedSequence(entropy))


@lru_cache(maxsize=None)
def _runner(family: AqnccConfig, mode: str, max_iter: int) -> TrialRunner:
    return TrialRunner(assemble(family), mode, max_iter)


def _run_chunk(task: Tuple[SweepPoint, int, int, int, str, int]) -> Tuple[int, int, int]:
    """Failure counts (phase, bit, block) for trials [start, stop) of one grid point"""
    point, start, stop, seed, mode, max_iter = task
    runner = _runner(point.family, mode, max_iter)
    n = point.family.n
    phase_fail = bit_fail = block_fail = 0
    for trial in range(start, stop):
        err = sample_error(n, point.px, point.pz, trial_rng(seed, point, trial))
        record = runner.run(err, (point.pz, point.px), block_index=trial, pz_true=point.pz)
        phase_fail += not record.phase_ok
        bit_fail += not record.bit_ok
        block_fail += not record.block_ok
    return phase_fail, bit_fail, block_fail


def sweep_grid(family: AqnccConfig, r_values: Sequence[int],
               px_values: Sequence[float], pz_values: Sequence[float]) -> List[SweepPoint]:
    """Grid points in CSV order: r outermost, then px, then pz"""
    points = []
    for r in r_values:
        level = family.with_r(r)
        for px in px_values:
            for pz in pz_values:
                points.append(SweepPoint(level, float(px), float(pz)))
    return points


def run_sweep(family: AqnccConfig, r_values: Sequence[int], px_values: Sequence[float],
              pz_values: Sequence[float], trials: int, seed: int, mode: str = EXACT,
              max_iter: Optional[int] = None, jobs: int = 1,
              confidence: Optional[float] = None) -> List[SweepResult]:
    """Run `trials` independent blocks at every grid point

    Work is cut into fixed (grid point, trial range) chunks whose counts are
    summed, so the result does not depend on jobs.
    """
    if trials < 1:
        raise InvalidConfigError(f"trials must be at least 1, got {trials}")
    if jobs < 1:
        raise InvalidConfigError(f"jobs must be at least 1, got {jobs}")
    max_iter = Config.DECODER['max_iter'] if max_iter is None else max_iter

    points = sweep_grid(family, r_values, px_values, pz_values)
    if not points:
        raise InvalidConfigError("sweep grid is empty")

    chunk = Config.SIMULATION['chunk_trials']
    tasks = [(point, start, min(start + chunk, trials), seed, mode, max_iter)
             for point in points for start in range(0, trials, chunk)]
    logger.info(f"Sweep: {len(points)} grid points x {trials} trials, "
                f"{len(tasks)} work units on {jobs} worker(s)")

    if jobs == 1:
        counts = [_run_chunk(task) for task in tasks]
    else:
        with get_context('spawn').Pool(processes=jobs) as pool:
            counts = pool.map(_run_chunk, tasks, chunksize=1)

    totals: Dict[SweepPoint, np.ndarray] = {point: np.zeros(3, dtype=np.int64) for point in points}
    for task, count in zip(tasks, counts):
        totals[task[0]] += count

    results = []
    for point in points:
        phase_fail, bit_fail, block_fail = (int(v) for v in totals[point])
        ci_lo, ci_hi = clopper_pearson(block_fail, trials, confidence)
        result = SweepResult(point, trials, phase_fail, bit_fail, block_fail,
                             ci_lo, ci_hi, seed, mode, max_iter)
        logger.info(f"p={point.family.p} r={point.family.r} px={point.px} pz={point.pz}: "
                    f"{block_fail}/{trials} blocks failed")
        results.append(result)
    return results


def sweep_csv(results: Sequence[SweepResult]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(SWEEP_COLUMNS)
    for result in results:
        writer.writerow(result.csv_row())
    return buffer.getvalue()


def sweep_summary(results: Sequence[SweepResult]) -> Dict[str, Any]:
    """Best level per (px, pz) and its gain over r = 0"""
    best: Dict[Tuple[float, float], Dict[str, Any]] = {}
    baseline = {(res.point.px, res.point.pz): res.ber for res in results
                if res.point.family.r == 0}
    for res in results:
        key = (res.point.px, res.point.pz)
        if key not in best or res.ber < best[key]['ber']:
            best[key] = {'px': res.point.px, 'pz': res.point.pz,
                         'r': res.point.family.r, 'ber': res.ber}
    for key, entry in best.items():
        base = baseline.get(key)
        entry['ber_r0'] = base
        entry['gain_over_r0'] = (base / entry['ber']) if base and entry['ber'] else None
    return {'best_levels': list(best.values())}

