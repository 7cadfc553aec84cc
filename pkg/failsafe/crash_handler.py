#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
AQNCC Toolkit - Crash Handler
Turn an unexpected runtime error into a crash report and exit code 3
"""

import logging
import traceback
from pathlib import Path
from typing import Any, Dict, Optional, Union

from config import Config
from analytics.system_health import SystemHealthMonitor
from storage.file_engine import FileEngine

logger = logging.getLogger(__name__)


class CrashHandler:
    """Crash report writer for one output directory"""

    def __init__(self, output_dir: Union[str, Path, None] = None):
        self.config = Config
        self.output_dir = Path(output_dir) if output_dir is not None else self.config.output_dir()
        self.crash_log_file = self.output_dir / self.config.OUTPUT['crash_log']
        self.max_reports = 100
        self.monitor = SystemHealthMonitor()

    def handle_crash(self, error: BaseException, context: Optional[Dict[str, Any]] = None) -> int:
        """Log and persist the crash; returns the runtime exit code"""
        now = self.monitor.now()
        crash_info = {
            'crash_id': now.strftime("%Y%m%d_%H%M%S"),
            'timestamp': now.isoformat(),
            'error_type': type(error).__name__,
            'error_message': str(error),
            'traceback': "".join(traceback.format_exception(type(error), error, error.__traceback__)),
            'context': context or {},
            'tool': self.config.get_tool_info(),
        }

        logger.critical(f"Run crashed: {crash_info['error_type']}: {crash_info['error_message']}")
        logger.debug(crash_info['traceback'])
        self._log_crash(crash_info)
        return self.config.EXIT_CODES['runtime']

    def _log_crash(self, crash_info: Dict[str, Any]):
        """Append to the crash log, keeping the most recent reports"""
        try:
            crashes = []
            if self.crash_log_file.exists():
                crashes = FileEngine.load_json(self.crash_log_file)
                if not isinstance(crashes, list):
                    crashes = []
            crashes.append(crash_info)
            FileEngine.save_json(self.crash_log_file, crashes[-self.max_reports:])
            logger.error(f"Crash logged: {crash_info['crash_id']} in {self.crash_log_file}")
        except Exception as e:
            logger.error(f"Failed to log crash: {e}")
