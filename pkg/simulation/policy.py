#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Rebalance Policy
Receiver feedback rules mapping decoding outcomes to the next level r
"""

import logging
from typing import Tuple

from config import Config
from core.errors import InvalidConfigError

logger = logging.getLogger(__name__)

FEEDBACK = 'feedback'
INCREASE_ONLY = 'increase-only'
HOLD = 'hold'


def policy_update(r: int, outcome: Tuple[bool, bool], bounds: Tuple[int, int],
                  policy: str = FEEDBACK) -> int:
    """Next rebalance level after a block

    outcome is (phase_ok, bit_ok). A phase failure with a clean bit decode
    asks for one more phase layer; under the feedback policy the mirrored
    case asks for one fewer. Both failing carries no direction.
    """
    lo, hi = bounds
    if policy not in Config.ADAPTIVE['policies']:
        raise InvalidConfigError(f"unknown policy {policy!r}; choose from {Config.ADAPTIVE['policies']}")
    if not lo <= r <= hi:
        raise InvalidConfigError(f"r = {r} outside [{lo}, {hi}]")

    phase_ok, bit_ok = outcome
    if policy == HOLD:
        return r
    if not phase_ok and bit_ok:
        return min(r + 1, hi)
    if policy == FEEDBACK and phase_ok and not bit_ok:
        return max(r - 1, lo)
    return r
