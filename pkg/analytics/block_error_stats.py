#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Block Error Statistics
Failure rates with exact binomial confidence intervals
"""

import logging
import math
from typing import Optional, Tuple

from scipy import stats

from config import Config
from core.errors import InvalidConfigError

logger = logging.getLogger(__name__)


def clopper_pearson(failures: int, trials: int,
                    confidence: Optional[float] = None) -> Tuple[float, float]:
    """Two-sided exact interval for a binomial proportion"""
    confidence = Config.SIMULATION['confidence'] if confidence is None else confidence
    if not 0.0 < confidence < 1.0:
        raise InvalidConfigError(f"confidence {confidence} outside (0, 1)")
    if trials <= 0:
        raise InvalidConfigError("at least one trial is needed for an interval")
    if not 0 <= failures <= trials:
        raise InvalidConfigError(f"failures {failures} outside [0, {trials}]")

    alpha = 1.0 - confidence
    lo = 0.0 if failures == 0 else float(stats.beta.ppf(alpha / 2, failures, trials - failures + 1))
    hi = 1.0 if failures == trials else float(stats.beta.ppf(1 - alpha / 2, failures + 1, trials - failures))
    return lo, hi


def rate_gap_sigma(failures_a: int, trials_a: int, failures_b: int, trials_b: int) -> float:
    """How many pooled standard errors rate_b sits above rate_a

    Positive when b fails more often. Zero when both samples are free of
    failures or entirely failed.
    """
    rate_a = failures_a / trials_a
    rate_b = failures_b / trials_b
    pooled = (failures_a + failures_b) / (trials_a + trials_b)
    spread = math.sqrt(pooled * (1.0 - pooled) * (1.0 / trials_a + 1.0 / trials_b))
    if spread == 0.0:
        return 0.0
    return (rate_b - rate_a) / spread


def format_rate(value: float) -> str:
    """Fixed textual form used in every results file"""
    return format(value, '.12g')
