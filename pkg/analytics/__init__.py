"""
AQNCC Toolkit - Analytics Module
Error-rate statistics and run-environment reporting
"""

__version__ = "1.0.0"

from .block_error_stats import clopper_pearson, rate_gap_sigma, format_rate
from .system_health import SystemHealthMonitor

__all__ = [
    'clopper_pearson',
    'rate_gap_sigma',
    'format_rate',
    'SystemHealthMonitor',
]
