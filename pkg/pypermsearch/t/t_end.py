# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Finish running tests and print statistics.
"""

import sys

from time import time

from pypermsearch.t.t_globals import TestGlobals


def t_end():
    """Finish running tests and print statistics.

    Returns whether exactly the planned number of tests ran and all of them
    passed. When quiet, prints 'ok' or 'not ok' followed by the failed
    tests; otherwise a summary line and the elapsed time.
    """
    g = TestGlobals
    ran = g.t_counter - 1

    all_ok = ran == g.t_num_of_tests == g.t_ok_cnt and g.t_not_ok_cnt == 0
    summary = 'Ran %d of %d tests: %d passed, %d failed' % \
        (ran, g.t_num_of_tests, g.t_ok_cnt, g.t_not_ok_cnt)

    if g.t_quiet:
        if all_ok:
            s = 'ok\n'
        else:
            s = 'not ok\n\t#####  %s\n' % summary
            s += ''.join('\t#####  failed: %s\n' % f for f in g.t_failed)
    else:
        if all_ok:
            s = 'All tests successful (%d of %d)' % (g.t_ok_cnt, g.t_num_of_tests)
        else:
            s = summary
        s += '\nElapsed time %.2f seconds.\n' % (time() - g.t_clock)

    sys.stdout.write(s)
    return all_ok
