"""
AQNCC Toolkit - Test Suite
Unit and acceptance tests
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# statistical acceptance runs take minutes; opt in with AQNCC_SLOW_TESTS=1
SLOW_TESTS = os.environ.get('AQNCC_SLOW_TESTS') == '1'
