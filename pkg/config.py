#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Configuration File
Centralized configuration for all modules
"""

import os
from pathlib import Path
from typing import Dict, Any, List

# ============================================================================
# TOOLKIT CONFIGURATION
# ============================================================================
class Config:
    """Main Configuration Class"""

    # Tool Information
    TOOL_NAME = "aqncc"
    TOOL_VERSION = "1.0.0"

    # Path Configuration
    BASE_DIR = Path(__file__).parent.absolute()
    OUTPUT_ENV_VAR = "AQNCC_OUTPUT_DIR"

    OUTPUT = {
        'default_dir': 'results',
        'logs_subdir': 'logs',
        'sweep_csv': 'sweep.csv',
        'sweep_json': 'sweep.json',
        'adaptive_csv': 'adaptive.csv',
        'adaptive_json': 'adaptive.json',
        'crash_log': 'crash_log.json',
    }

    # Sum-product decoder settings
    DECODER = {
        'max_iter': 100,
        'tanh_floor': 1e-15,     # smallest |tanh| kept before taking logs
        'atanh_clamp': 1e-12,    # check messages stay inside (-1 + c, 1 - c)
        'prior_floor': 1e-6,     # priors are clamped into [floor, 0.5 - floor]
    }

    # Monte Carlo defaults
    SIMULATION = {
        'trials': 1000,
        'seed': 20100601,
        'mode': 'exact',
        'modes': ['exact', 'degenerate'],
        'confidence': 0.95,
        'chunk_trials': 2000,    # trials per parallel work unit
        'px': 0.005,
        'pz': 0.02,
    }

    # Adaptive protocol defaults
    ADAPTIVE = {
        'horizon': 10000,
        'period': 100,
        'pz_lo': 0.0,
        'pz_hi': 0.03,
        'policy': 'feedback',
        'policies': ['feedback', 'increase-only', 'hold'],
        'prior': 'estimate',
        'priors': ['estimate', 'midpoint', 'oracle'],
        'estimate_window': 100,
    }

    # Logging Configuration
    LOGGING = {
        'level': 'INFO',
        'format': '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        'file': 'aqncc.log',
        'max_size': 10485760,  # 10MB
        'backup_count': 5,
    }

    # Exit codes of the command-line tool
    EXIT_CODES = {
        'success': 0,
        'usage': 1,
        'criteria_failed': 2,
        'runtime': 3,
    }

    # Time Settings
    TIMEZONE = 'UTC'
    DATE_FORMAT = '%Y-%m-%d %H:%M:%S'

    @classmethod
    def get_tool_info(cls) -> Dict[str, Any]:
        """Get tool information dictionary"""
        return {
            'name': cls.TOOL_NAME,
            'version': cls.TOOL_VERSION,
        }

    @classmethod
    def output_dir(cls) -> Path:
        """Default output directory, honouring the environment override"""
        override = os.environ.get(cls.OUTPUT_ENV_VAR)
        if override:
            return Path(override)
        return Path(cls.OUTPUT['default_dir'])

    @classmethod
    def validate_config(cls) -> List[str]:
        """Validate configuration and return list of issues"""
        issues = []

        if cls.DECODER['max_iter'] < 1:
            issues.append("DECODER.max_iter must be at least 1")

        if not 0.0 < cls.DECODER['prior_floor'] < 0.25:
            issues.append("DECODER.prior_floor must lie in (0, 0.25)")

        if not 0.0 < cls.DECODER['atanh_clamp'] < 1.0:
            issues.append("DECODER.atanh_clamp must lie in (0, 1)")

        if cls.SIMULATION['mode'] not in cls.SIMULATION['modes']:
            issues.append(f"SIMULATION.mode is not one of {cls.SIMULATION['modes']}")

        if cls.ADAPTIVE['period'] < 1:
            issues.append("ADAPTIVE.period must be at least 1")

        if cls.ADAPTIVE['estimate_window'] < 1:
            issues.append("ADAPTIVE.estimate_window must be at least 1")

        return issues

# Global config instance
config = Config()

if __name__ == "__main__":
    # Validate configuration when run directly
    issues = config.validate_config()
    if issues:
        print("Configuration Issues:")
        for issue in issues:
            print(f"  - {issue}")
    else:
        print("Configuration is valid!")
