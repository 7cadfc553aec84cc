"""
AQNCC Toolkit - Simulation Module
Pauli sampling, block trials, static sweeps and the adaptive loop
"""

__version__ = "1.0.0"

from .channel import ChannelModel, PauliPattern, PzProcess, sample_error
from .trial import DEGENERATE, EXACT, TrialRecord, TrialRunner, clamp_prior, run_trial
from .policy import FEEDBACK, HOLD, INCREASE_ONLY, policy_update
from .sweep import SweepPoint, SweepResult, run_sweep, sweep_csv, sweep_summary
from .adaptive import AdaptiveTrace, PzEstimator, run_adaptive, trace_csv

__all__ = [
    'ChannelModel',
    'PauliPattern',
    'PzProcess',
    'sample_error',
    'DEGENERATE',
    'EXACT',
    'TrialRecord',
    'TrialRunner',
    'clamp_prior',
    'run_trial',
    'FEEDBACK',
    'HOLD',
    'INCREASE_ONLY',
    'policy_update',
    'SweepPoint',
    'SweepResult',
    'run_sweep',
    'sweep_csv',
    'sweep_summary',
    'AdaptiveTrace',
    'PzEstimator',
    'run_adaptive',
    'trace_csv',
]
