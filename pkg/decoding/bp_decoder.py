#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Sum-Product Decoder
Syndrome-form belief propagation on the Tanner graph of one check matrix
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from config import Config
from core.errors import DecoderInputError
from core.gf2 import BinMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DecodeOutcome:
    """Hard-decision estimate; converged means H·estimate reproduces the syndrome"""

    estimate: np.ndarray
    converged: bool
    iterations_used: int

    def bitstring(self) -> str:
        return "".join(str(int(b)) for b in self.estimate)


class SumProductDecoder:
    """Flooding-schedule sum-product decoder bound to one check matrix

    Edge arrays are built once; every decode call allocates its own message
    buffers, so one instance can serve concurrent callers.
    """

    def __init__(self, h: BinMatrix, max_iter: Optional[int] = None):
        self.h = h
        self.max_iter = Config.DECODER['max_iter'] if max_iter is None else max_iter
        self.tanh_floor = Config.DECODER['tanh_floor']
        self.atanh_limit = 1.0 - Config.DECODER['atanh_clamp']

        if self.max_iter < 0:
            raise DecoderInputError(f"max_iter must be non-negative, got {self.max_iter}")

        self.checks, self.variables = h.edges
        self.n_checks, self.n_vars = h.shape

    def _syndrome_of(self, bits: np.ndarray) -> np.ndarray:
        counts = np.bincount(self.checks, weights=bits[self.variables], minlength=self.n_checks)
        return counts.astype(np.int64) & 1

    def decode(self, syndrome, prior_p: float) -> DecodeOutcome:
        target = np.asarray(syndrome, dtype=np.int64).reshape(-1)
        if target.size != self.n_checks:
            raise DecoderInputError(
                f"syndrome length {target.size} does not match {self.n_checks} checks"
            )
        if target.size and not np.isin(target, (0, 1)).all():
            raise DecoderInputError("syndrome entries must be 0 or 1")
        if not 0.0 < prior_p < 0.5:
            raise DecoderInputError(f"prior {prior_p} outside (0, 0.5)")

        estimate = np.zeros(self.n_vars, dtype=np.uint8)
        if not target.any():
            return DecodeOutcome(estimate, True, 0)

        channel = np.full(self.n_vars, np.log((1.0 - prior_p) / prior_p))
        # a satisfied check keeps the tanh-rule sign, an unsatisfied one flips it
        check_sign = 1.0 - 2.0 * target[self.checks]
        c2v = np.zeros(self.checks.size)

        for iteration in range(1, self.max_iter + 1):
            incoming = np.bincount(self.variables, weights=c2v, minlength=self.n_vars)
            v2c = (channel + incoming)[self.variables] - c2v

            t = np.tanh(0.5 * v2c)
            negative = (t < 0.0).astype(np.float64)
            log_mag = np.log(np.maximum(np.abs(t), self.tanh_floor))

            log_total = np.bincount(self.checks, weights=log_mag, minlength=self.n_checks)
            neg_total = np.bincount(self.checks, weights=negative, minlength=self.n_checks)

            magnitude = np.exp(log_total[self.checks] - log_mag)
            others_negative = (neg_total[self.checks] - negative).astype(np.int64) & 1
            product = check_sign * (1.0 - 2.0 * others_negative) * magnitude
            c2v = 2.0 * np.arctanh(np.clip(product, -self.atanh_limit, self.atanh_limit))

            posterior = channel + np.bincount(self.variables, weights=c2v, minlength=self.n_vars)
            # LLR of exactly 0 decides "no error"
            estimate = (posterior < 0.0).astype(np.uint8)

            if np.array_equal(self._syndrome_of(estimate), target):
                logger.debug(f"BP converged after {iteration} iterations")
                return DecodeOutcome(estimate, True, iteration)

        logger.debug(f"BP stopped after {self.max_iter} iterations without convergence")
        return DecodeOutcome(estimate, False, self.max_iter)


def bp_syndrome_decode(h: BinMatrix, syndrome, prior_p: float,
                       max_iter: Optional[int] = None) -> DecodeOutcome:
    """Decode one syndrome against h; see SumProductDecoder"""
    return SumProductDecoder(h, max_iter).decode(syndrome, prior_p)
