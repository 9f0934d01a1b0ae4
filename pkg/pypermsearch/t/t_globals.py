# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Counters of the running test suite.
"""


class TestGlobals(object):
    """State shared by C{t_begin}, C{t_ok}, C{t_is} and C{t_end}: the
    planned number of tests, the next test number, the pass and fail
    counts, the messages of the failed tests and the start time.
    """
    t_quiet = False
    t_num_of_tests = 0
    t_counter = 0
    t_ok_cnt = 0
    t_not_ok_cnt = 0
    t_failed = []
    t_clock = 0.0
