"""
AQNCC Toolkit - Engine Module
Run configuration and subcommand routing
"""

__version__ = "1.0.0"

from .command_router import CommandRouter, RunConfig, resolve_run_config

__all__ = [
    'CommandRouter',
    'RunConfig',
    'resolve_run_config',
]
