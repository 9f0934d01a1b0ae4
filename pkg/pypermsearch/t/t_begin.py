# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Starts a test suite.
"""

from time import time

from pypermsearch.t.t_globals import TestGlobals


def t_begin(num_of_tests, quiet=False):
    """Resets the counters for a suite of C{num_of_tests} checks made with
    C{t_ok}, C{t_is} and C{t_raises}, and prints the TAP plan line unless
    C{quiet}.
    """
    g = TestGlobals
    g.t_quiet = quiet
    g.t_num_of_tests = num_of_tests
    g.t_counter = 1
    g.t_ok_cnt, g.t_not_ok_cnt = 0, 0
    g.t_failed = []
    g.t_clock = time()

    if not quiet:
        print('1..%d' % num_of_tests)
