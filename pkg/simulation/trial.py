#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Block Trial
Decode one Pauli pattern against a code pair, phase and bit separately
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from config import Config
from core.errors import InvalidConfigError
from core.gf2 import in_rowspace, syndrome
from codes.family import CodePair
from decoding.bp_decoder import SumProductDecoder
from simulation.channel import PauliPattern

logger = logging.getLogger(__name__)

EXACT = 'exact'
DEGENERATE = 'degenerate'


@dataclass(frozen=True)
class TrialRecord:
    block_index: int
    pz_true: float
    r_used: int
    phase_ok: bool
    bit_ok: bool
    block_ok: bool
    phase_iterations: int
    bit_iterations: int
    phase_estimate_weight: int = 0

    def __post_init__(self):
        if self.block_ok != (self.phase_ok and self.bit_ok):
            raise ValueError("block_ok must equal phase_ok AND bit_ok")


def clamp_prior(prior: float) -> float:
    """Keep a channel probability inside the decoder's open interval"""
    floor = Config.DECODER['prior_floor']
    clamped = min(max(prior, floor), 0.5 - floor)
    if clamped != prior:
        logger.debug(f"Prior {prior} clamped to {clamped}")
    return clamped


class TrialRunner:
    """Two decoders bound to one code pair: H1' for phase flips, H2' for bit flips"""

    def __init__(self, pair: CodePair, mode: str = EXACT, max_iter: Optional[int] = None):
        if mode not in (EXACT, DEGENERATE):
            raise InvalidConfigError(f"success mode must be '{EXACT}' or '{DEGENERATE}', got {mode!r}")
        self.pair = pair
        self.mode = mode
        self.phase_decoder = SumProductDecoder(pair.h1, max_iter)
        self.bit_decoder = SumProductDecoder(pair.h2, max_iter)

    def _success(self, outcome, actual: np.ndarray, stabilizers) -> bool:
        if not outcome.converged:
            return False
        if np.array_equal(outcome.estimate, actual):
            return True
        # residual equivalent to a stabilizer of the other type
        return self.mode == DEGENERATE and in_rowspace(outcome.estimate ^ actual, stabilizers)

    def run(self, err: PauliPattern, priors: Tuple[float, float],
            block_index: int = 0, pz_true: float = float('nan')) -> TrialRecord:
        """priors = (pz, px) handed to the phase and bit decoders"""
        if err.n != self.pair.config.n:
            raise InvalidConfigError(f"error length {err.n} does not match n = {self.pair.config.n}")

        prior_z, prior_x = (clamp_prior(p) for p in priors)

        phase = self.phase_decoder.decode(syndrome(self.pair.h1, err.e_z), prior_z)
        bit = self.bit_decoder.decode(syndrome(self.pair.h2, err.e_x), prior_x)

        phase_ok = self._success(phase, err.e_z, self.pair.h2)
        bit_ok = self._success(bit, err.e_x, self.pair.h1)

        return TrialRecord(
            block_index=block_index,
            pz_true=pz_true,
            r_used=self.pair.config.r,
            phase_ok=phase_ok,
            bit_ok=bit_ok,
            block_ok=phase_ok and bit_ok,
            phase_iterations=phase.iterations_used,
            bit_iterations=bit.iterations_used,
            phase_estimate_weight=int(phase.estimate.sum()),
        )


def run_trial(pair: CodePair, err: PauliPattern, priors: Tuple[float, float],
              mode: str = EXACT, max_iter: Optional[int] = None) -> TrialRecord:
    return TrialRunner(pair, mode, max_iter).run(err, priors)
