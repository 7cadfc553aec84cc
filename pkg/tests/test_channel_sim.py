#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Channel Simulation Tests
Tests for sampling, trials, the feedback policy, sweeps and adaptive runs
"""

import unittest
from unittest.mock import patch

import numpy as np

from config import Config
from core.errors import InvalidConfigError
from analytics.block_error_stats import clopper_pearson, rate_gap_sigma
from codes.family import AqnccConfig, assemble
from simulation.adaptive import PzEstimator, run_adaptive, trace_csv
from simulation.channel import ChannelModel, PauliPattern, PzProcess, sample_error
from simulation.policy import FEEDBACK, HOLD, INCREASE_ONLY, policy_update
from simulation.sweep import SweepPoint, run_sweep, sweep_csv, sweep_summary, trial_rng
from simulation.trial import DEGENERATE, EXACT, TrialRecord, TrialRunner, clamp_prior, run_trial
from tests import SLOW_TESTS


class TestSampling(unittest.TestCase):
    """Test asymmetric Pauli sampling"""

    def test_zero_rates(self):
        err = sample_error(49, 0.0, 0.0, np.random.default_rng(0))
        self.assertFalse(err.e_x.any())
        self.assertFalse(err.e_z.any())

    def test_replay(self):
        first = sample_error(841, 0.005, 0.02, np.random.default_rng(42))
        second = sample_error(841, 0.005, 0.02, np.random.default_rng(42))
        np.testing.assert_array_equal(first.e_x, second.e_x)
        np.testing.assert_array_equal(first.e_z, second.e_z)

    def test_mean_weight(self):
        """Test that the bit-flip weight concentrates around n * px"""
        n, px = 10 ** 6, 0.005
        err = sample_error(n, px, 0.0, np.random.default_rng(7))
        sigma = np.sqrt(n * px * (1 - px))
        self.assertLess(abs(int(err.e_x.sum()) - n * px), 3 * sigma)

    def test_y_errors(self):
        pattern = PauliPattern(np.array([1, 0, 1], dtype=np.uint8), np.array([1, 1, 0], dtype=np.uint8))
        self.assertEqual(pattern.y_count, 1)
        self.assertEqual(pattern.n, 3)

    def test_rejects_bad_probabilities(self):
        rng = np.random.default_rng(0)
        for px, pz in ((0.5, 0.0), (0.0, 0.5), (-0.1, 0.0)):
            with self.assertRaises(InvalidConfigError):
                sample_error(10, px, pz, rng)


class TestPzProcess(unittest.TestCase):
    """Test the phase-rate process"""

    def test_constant(self):
        stream = PzProcess.constant(0.02).stream(np.random.default_rng(0))
        self.assertEqual({next(stream) for _ in range(250)}, {0.02})

    def test_piecewise_windows(self):
        """Test that pz is redrawn exactly at multiples of the period"""
        process = PzProcess(period=100, lo=0.0, hi=0.03)
        stream = process.stream(np.random.default_rng(3))
        values = [next(stream) for _ in range(500)]
        for start in range(0, 500, 100):
            window = values[start:start + 100]
            self.assertEqual(len(set(window)), 1)
            self.assertTrue(0.0 <= window[0] <= 0.03)
        self.assertGreater(len(set(values)), 1)

    def test_validation(self):
        with self.assertRaises(InvalidConfigError):
            PzProcess(period=0)
        with self.assertRaises(InvalidConfigError):
            PzProcess(lo=0.03, hi=0.01)
        with self.assertRaises(InvalidConfigError):
            PzProcess.constant(0.5)
        with self.assertRaises(InvalidConfigError):
            ChannelModel(0.6, PzProcess.constant(0.01))


class TestTrial(unittest.TestCase):
    """Test single-block trials"""

    def setUp(self):
        self.pair = assemble(AqnccConfig(7))

    def test_zero_error(self):
        err = PauliPattern(np.zeros(49, dtype=np.uint8), np.zeros(49, dtype=np.uint8))
        record = run_trial(self.pair, err, (0.02, 0.005))
        self.assertTrue(record.block_ok)
        self.assertEqual((record.phase_iterations, record.bit_iterations), (0, 0))

    def test_weight_one_phase_errors(self):
        runner = TrialRunner(self.pair, EXACT)
        for col in range(49):
            e_z = np.zeros(49, dtype=np.uint8)
            e_z[col] = 1
            record = runner.run(PauliPattern(np.zeros(49, dtype=np.uint8), e_z), (0.01, 0.01))
            self.assertTrue(record.phase_ok)
            self.assertTrue(record.block_ok)
            self.assertEqual(record.phase_estimate_weight, 1)

    def test_degenerate_never_worse(self):
        """Test that degenerate success includes every exact success"""
        exact = TrialRunner(self.pair, EXACT, max_iter=30)
        degenerate = TrialRunner(self.pair, DEGENERATE, max_iter=30)
        rng = np.random.default_rng(17)
        for _ in range(40):
            err = sample_error(49, 0.05, 0.08, rng)
            a = exact.run(err, (0.08, 0.05))
            b = degenerate.run(err, (0.08, 0.05))
            self.assertTrue(b.phase_ok or not a.phase_ok)
            self.assertTrue(b.bit_ok or not a.bit_ok)

    def test_record_invariant(self):
        with self.assertRaises(ValueError):
            TrialRecord(0, 0.01, 0, True, False, True, 1, 1)

    def test_rejects_length_mismatch(self):
        err = PauliPattern(np.zeros(25, dtype=np.uint8), np.zeros(25, dtype=np.uint8))
        with self.assertRaises(InvalidConfigError):
            run_trial(self.pair, err, (0.01, 0.01))

    def test_rejects_unknown_mode(self):
        with self.assertRaises(InvalidConfigError):
            TrialRunner(self.pair, 'approximate')

    def test_prior_clamp(self):
        floor = Config.DECODER['prior_floor']
        self.assertEqual(clamp_prior(0.0), floor)
        self.assertEqual(clamp_prior(0.5), 0.5 - floor)
        self.assertEqual(clamp_prior(0.02), 0.02)


class TestPolicy(unittest.TestCase):
    """Test the rebalance feedback rules"""

    def test_feedback(self):
        self.assertEqual(policy_update(0, (False, True), (0, 13)), 1)
        self.assertEqual(policy_update(5, (True, True), (0, 13)), 5)
        self.assertEqual(policy_update(5, (False, False), (0, 13)), 5)
        self.assertEqual(policy_update(5, (True, False), (0, 13)), 4)

    def test_clamping(self):
        self.assertEqual(policy_update(13, (False, True), (0, 13)), 13)
        self.assertEqual(policy_update(0, (True, False), (0, 13)), 0)

    def test_other_policies(self):
        self.assertEqual(policy_update(3, (True, False), (0, 13), INCREASE_ONLY), 3)
        self.assertEqual(policy_update(3, (False, True), (0, 13), INCREASE_ONLY), 4)
        self.assertEqual(policy_update(3, (False, True), (0, 13), HOLD), 3)

    def test_rejects_bad_input(self):
        with self.assertRaises(InvalidConfigError):
            policy_update(14, (True, True), (0, 13))
        with self.assertRaises(InvalidConfigError):
            policy_update(1, (True, True), (0, 13), 'random')


class TestStatistics(unittest.TestCase):
    """Test binomial intervals"""

    def test_interval_contains_rate(self):
        lo, hi = clopper_pearson(30, 1000)
        self.assertLess(lo, 0.03)
        self.assertGreater(hi, 0.03)

    def test_edges(self):
        self.assertEqual(clopper_pearson(0, 50)[0], 0.0)
        self.assertEqual(clopper_pearson(50, 50)[1], 1.0)
        self.assertAlmostEqual(clopper_pearson(0, 50, 0.95)[1], 1 - 0.025 ** (1 / 50), places=9)

    def test_rejects_bad_counts(self):
        with self.assertRaises(InvalidConfigError):
            clopper_pearson(3, 0)
        with self.assertRaises(InvalidConfigError):
            clopper_pearson(5, 4)

    def test_gap(self):
        self.assertGreater(rate_gap_sigma(10, 1000, 100, 1000), 3.0)
        self.assertEqual(rate_gap_sigma(0, 10, 0, 10), 0.0)


class TestSweep(unittest.TestCase):
    """Test static sweeps"""

    def setUp(self):
        self.family = AqnccConfig(5)

    def _sweep(self, **kwargs):
        options = dict(r_values=[0, 1], px_values=[0.01], pz_values=[0.02, 0.05],
                       trials=30, seed=99, max_iter=30)
        options.update(kwargs)
        return run_sweep(self.family, **options)

    def test_rejects_zero_trials(self):
        with self.assertRaises(InvalidConfigError):
            self._sweep(trials=0)

    def test_grid_and_rates(self):
        results = self._sweep()
        self.assertEqual([(res.point.family.r, res.point.pz) for res in results],
                         [(0, 0.02), (0, 0.05), (1, 0.02), (1, 0.05)])
        for res in results:
            self.assertEqual(res.trials, 30)
            self.assertEqual(res.ber, res.block_fail / 30)
            self.assertLessEqual(res.ci_lo, res.ber)
            self.assertGreaterEqual(res.ci_hi, res.ber)
            self.assertLessEqual(max(res.phase_fail, res.bit_fail), res.block_fail)
            self.assertLessEqual(res.block_fail, res.phase_fail + res.bit_fail)

    def test_csv_is_reproducible(self):
        first = sweep_csv(self._sweep())
        second = sweep_csv(self._sweep())
        self.assertEqual(first, second)
        lines = first.splitlines()
        self.assertEqual(lines[0], "p,i,r,askew,px,pz,trials,phase_fail,bit_fail,block_fail,"
                                   "ber,ci_lo,ci_hi,seed")
        self.assertEqual(len(lines), 5)
        self.assertTrue(lines[1].startswith("5,0,0,0,0.01,0.02,30,"))
        self.assertTrue(lines[1].endswith(",99"))

    def test_chunking_and_workers_do_not_change_counts(self):
        """Test that serial, chunked and parallel sweeps agree exactly"""
        serial = self._sweep()
        with patch.dict(Config.SIMULATION, {'chunk_trials': 7}):
            chunked = self._sweep()
            parallel = self._sweep(jobs=2)
        for a, b, c in zip(serial, chunked, parallel):
            counts = (a.phase_fail, a.bit_fail, a.block_fail)
            self.assertEqual(counts, (b.phase_fail, b.bit_fail, b.block_fail))
            self.assertEqual(counts, (c.phase_fail, c.bit_fail, c.block_fail))

    def test_trial_streams_are_distinct(self):
        point = SweepPoint(self.family, 0.01, 0.02)
        first = trial_rng(99, point, 0).random(8)
        np.testing.assert_array_equal(first, trial_rng(99, point, 0).random(8))
        self.assertFalse(np.array_equal(first, trial_rng(99, point, 1).random(8)))
        self.assertFalse(np.array_equal(first, trial_rng(100, point, 0).random(8)))
        other = SweepPoint(self.family, 0.01, 0.03)
        self.assertFalse(np.array_equal(first, trial_rng(99, other, 0).random(8)))

    def test_summary(self):
        summary = sweep_summary(self._sweep())
        self.assertEqual(len(summary['best_levels']), 2)
        for entry in summary['best_levels']:
            self.assertIn(entry['r'], (0, 1))


class TestAdaptive(unittest.TestCase):
    """Test the closed-loop protocol"""

    def setUp(self):
        self.family = AqnccConfig(7)
        self.process = PzProcess(period=100, lo=0.0, hi=0.06)
        self.channel = ChannelModel(0.01, self.process, seed=5)

    def test_hold_keeps_level(self):
        channel = ChannelModel(0.01, PzProcess.constant(0.05), seed=1)
        trace = run_adaptive(self.family.with_r(1), channel, HOLD, horizon=150, max_iter=30)
        self.assertEqual(set(trace.r_levels), {1})

    def test_pz_constant_within_windows(self):
        trace = run_adaptive(self.family, self.channel, FEEDBACK, horizon=300, max_iter=30)
        pz = [rec.pz_true for rec in trace.records]
        for start in range(0, 300, 100):
            self.assertEqual(len(set(pz[start:start + 100])), 1)

    def test_levels_stay_in_bounds(self):
        trace = run_adaptive(self.family, self.channel, FEEDBACK, horizon=300, max_iter=30)
        self.assertTrue(all(0 <= r <= self.family.r_max for r in trace.r_levels))
        summary = trace.summary()
        self.assertEqual(summary['blocks'], 300)
        self.assertEqual(summary['ber'], summary['block_fail'] / 300)

    def test_level_change_applies_next_block(self):
        trace = run_adaptive(self.family, self.channel, FEEDBACK, horizon=300, max_iter=30)
        for prev, cur in zip(trace.records, trace.records[1:]):
            bounds = (0, self.family.r_max)
            expected = policy_update(prev.r_used, (prev.phase_ok, prev.bit_ok), bounds, FEEDBACK)
            self.assertEqual(cur.r_used, expected)

    def test_replay_is_identical(self):
        first = run_adaptive(self.family, self.channel, FEEDBACK, horizon=200, max_iter=30)
        second = run_adaptive(self.family, self.channel, FEEDBACK, horizon=200, max_iter=30)
        self.assertEqual(trace_csv(first), trace_csv(second))
        self.assertEqual(trace_csv(first).splitlines()[0], "block,pz_true,r,phase_ok,bit_ok")

    def test_paired_baseline_sees_same_channel(self):
        trace = run_adaptive(self.family, self.channel, FEEDBACK, horizon=200,
                             max_iter=30, baseline_r=0)
        self.assertIsNotNone(trace.baseline)
        self.assertEqual([rec.pz_true for rec in trace.records],
                         [rec.pz_true for rec in trace.baseline.records])
        self.assertEqual(set(trace.baseline.r_levels), {0})
        self.assertIn('baseline', trace.summary())

    def test_prior_modes(self):
        for prior in ('estimate', 'midpoint', 'oracle'):
            trace = run_adaptive(self.family, self.channel, FEEDBACK, horizon=50,
                                 prior_mode=prior, max_iter=30)
            self.assertEqual(len(trace.records), 50)

    def test_rejects_bad_arguments(self):
        with self.assertRaises(InvalidConfigError):
            run_adaptive(self.family, self.channel, FEEDBACK, horizon=0)
        with self.assertRaises(InvalidConfigError):
            run_adaptive(self.family, self.channel, 'sometimes', horizon=10)
        with self.assertRaises(InvalidConfigError):
            run_adaptive(self.family, self.channel, FEEDBACK, horizon=10, prior_mode='guess')

    def test_estimator(self):
        estimator = PzEstimator(0.0, window=4)
        self.assertAlmostEqual(estimator.update(10, 100), 0.025)
        self.assertAlmostEqual(estimator.update(0, 100), 0.01875)


@unittest.skipUnless(SLOW_TESTS, "set AQNCC_SLOW_TESTS=1 for statistical acceptance runs")
class TestStatisticalAcceptance(unittest.TestCase):
    """Long runs checking the rebalancing and adaptive gains"""

    def test_rebalancing_gain_at_p29(self):
        family = AqnccConfig(29)
        results = run_sweep(family, [0, 2, 4, 6, 8], [0.005], [0.02], trials=20000,
                            seed=Config.SIMULATION['seed'], jobs=4)
        by_r = {res.point.family.r: res.ber for res in results}
        self.assertLessEqual(min(by_r.values()), 0.5 * by_r[0])

    def test_block_error_grows_with_pz(self):
        family = AqnccConfig(29)
        low, high = run_sweep(family, [0], [0.005], [0.01, 0.03], trials=20000,
                              seed=Config.SIMULATION['seed'], jobs=4)
        self.assertGreater(rate_gap_sigma(low.block_fail, low.trials,
                                          high.block_fail, high.trials), 3.0)

    def test_adaptive_beats_fixed_level(self):
        family = AqnccConfig(29)
        channel = ChannelModel(0.005, PzProcess(period=100, lo=0.0, hi=0.03),
                               seed=Config.SIMULATION['seed'])
        trace = run_adaptive(family, channel, FEEDBACK, horizon=100000, baseline_r=0)
        self.assertTrue(all(0 <= r <= family.r_max for r in trace.r_levels))
        self.assertLess(trace.block_fail, trace.baseline.block_fail)


if __name__ == '__main__':
    unittest.main()
