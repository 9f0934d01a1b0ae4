# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Run a series of tests.
"""

import sys

from importlib import import_module
from time import time

from pypermsearch.t.t_globals import TestGlobals


def t_run_tests(test_names, verbose=False):
    """Runs the test suites named in C{test_names}, each a module of
    C{pypermsearch.t} defining a function of the same name. If C{verbose}
    is true the individual tests are printed. Returns 0 when every suite
    passed and 1 otherwise.
    """
    maxlen = max(len(name) for name in test_names) if test_names else 0

    num_of_tests, counter, ok_cnt, not_ok_cnt = 0, 0, 0, 0
    failed_suites = []

    t0 = time()
    for name in test_names:
        if verbose:
            sys.stdout.write('\n----------  %s  ----------\n' % name)
        else:
            sys.stdout.write(name + '.' * (maxlen + 4 - len(name)))

        mod = import_module('pypermsearch.t.' + name)
        getattr(mod, name)(not verbose)

        g = TestGlobals
        if g.t_not_ok_cnt or g.t_counter - 1 != g.t_num_of_tests:
            failed_suites.append(name)
        num_of_tests += g.t_num_of_tests
        counter += g.t_counter - 1
        ok_cnt += g.t_ok_cnt
        not_ok_cnt += g.t_not_ok_cnt

    s = ''
    if verbose:
        s += '\n\n----------  Summary  ----------\n'

    if not failed_suites:
        s += 'All tests successful (%d of %d)' % (ok_cnt, num_of_tests)
        status = 0
    else:
        s += 'Ran %d of %d tests: %d passed, %d failed' % \
            (counter, num_of_tests, ok_cnt, not_ok_cnt)
        s += '\nFailed suites: %s' % ', '.join(failed_suites)
        status = 1

    s += '\nElapsed time %.2f seconds.\n' % (time() - t0)
    sys.stdout.write(s)

    return status
