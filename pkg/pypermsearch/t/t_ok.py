# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests if a condition is true.
"""

from pypermsearch.t.t_globals import TestGlobals


def t_ok(cond, msg=''):
    """Tests if a condition is true.

    Counts the test as passed if C{cond} is true and as failed otherwise,
    remembering C{msg} of a failed test for the summary of C{t_end}. Prints
    'ok N - msg' or 'not ok N - msg' unless the suite is quiet.
    """
    g = TestGlobals
    if cond:
        g.t_ok_cnt += 1
    else:
        g.t_not_ok_cnt += 1
        g.t_failed.append('%d %s' % (g.t_counter, msg))

    if not g.t_quiet:
        print('%sok %3d%s' % ('' if cond else 'not ',
                              g.t_counter, ' - ' + msg if msg else ''))

    g.t_counter += 1
