"""
AQNCC Toolkit - Failsafe Module
Crash reporting for the command-line tool
"""

__version__ = "1.0.0"

from .crash_handler import CrashHandler

__all__ = [
    'CrashHandler',
]
