#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Run Environment
Machine snapshot and timestamps embedded in every results envelope
"""

import logging
import platform
from datetime import datetime
from typing import Any, Dict

import numpy as np
import psutil
import pytz
import scipy

from config import Config

logger = logging.getLogger(__name__)


class SystemHealthMonitor:
    """Describes the machine a run executed on"""

    def __init__(self):
        self.config = Config
        self.timezone = pytz.timezone(self.config.TIMEZONE)

    def now(self) -> datetime:
        return datetime.now(self.timezone)

    def timestamp(self) -> str:
        return self.now().isoformat()

    @staticmethod
    def default_jobs() -> int:
        """Worker count when --jobs is not given"""
        return psutil.cpu_count(logical=True) or 1

    def snapshot(self) -> Dict[str, Any]:
        """Static facts about the host; never raises"""
        try:
            memory = psutil.virtual_memory()
            return {
                'platform': platform.platform(),
                'python_version': platform.python_version(),
                'numpy_version': np.__version__,
                'scipy_version': scipy.__version__,
                'cpu_cores': psutil.cpu_count(logical=False),
                'cpu_threads': psutil.cpu_count(logical=True),
                'total_ram': memory.total,
                'available_ram': memory.available,
            }
        except Exception as e:
            logger.error(f"Failed to get system info: {e}")
            return {}
