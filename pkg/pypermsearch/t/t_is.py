# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests if two values or arrays are identical to some tolerance.
"""

from numpy import asarray, abs, argmax, atleast_1d

from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_globals import TestGlobals


def t_is(got, expected, prec=5, msg=''):
    """Tests if two values or arrays are identical to some tolerance.

    Increments the global test count and if the maximum difference
    between corresponding elements of C{got} and C{expected} is less
    than 10**(-C{prec}) then it increments the passed tests count,
    otherwise increments the failed tests count. With C{prec=None} the
    comparison is exact, which is how rational (L{Fraction}) results are
    checked. Prints 'ok' or 'not ok' followed by the MSG, unless the global
    variable t_quiet is true.
    """
    if prec is None:
        condition = got == expected
        t_ok(condition, msg)
        if not condition and not TestGlobals.t_quiet:
            print('         got: %r\n    expected: %r\n' % (got, expected))
        return

    g = atleast_1d(asarray(got, dtype=complex))
    e = atleast_1d(asarray(expected, dtype=complex))

    if g.shape == e.shape or e.shape == (0,):
        diff = abs(g - e).ravel()
        max_diff = diff.max() if diff.size else 0.0
        condition = max_diff < 10**(-prec)
    else:
        condition = False
        max_diff = None

    t_ok(condition, msg)
    if not condition and not TestGlobals.t_quiet:
        if max_diff is None:
            print('    dimension mismatch:\n             got: %s\n'
                  '        expected: %s\n' % (g.shape, e.shape))
        else:
            k = argmax(diff)
            print('    max diff @ %d: got %g, expected %g, diff %g > allowed '
                  'tol of %g\n' % (k, g.ravel()[k].real, e.ravel()[k].real,
                                   max_diff, 10**(-prec)))
