# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Uniform-distribution error from class errors on odd sizes.
"""

from fractions import Fraction

from pypermsearch.errors import InstanceError


def odd_error_combination(errs, n):
    """Returns M{((1 + 1/n) eps0 + (1 - 1/n) eps1) / 2}, the error on
    uniformly random permutations of [n], n odd, of an algorithm with errors
    C{eps0} on P0 and C{eps1} on P1; for odd n P0 holds a fraction
    M{(1 + 1/n)/2} of all permutations.

    C{errs} is an L{ErrorPair} or a pair.

    Example::
        odd_error_combination((0.3, 0.0), 3)    # 0.2
    """
    if n < 1 or n % 2 == 0:
        raise InstanceError('odd_error_combination: n must be odd, got %d' % n)
    eps0, eps1 = errs
    r = Fraction(1, n)
    return ((1 + r) * eps0 + (1 - r) * eps1) / 2
