# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Classical oracles that count their queries.
"""

from pypermsearch.errors import QueryError


class CountedOracle(object):
    """Classical oracle access to a function on [n].

    C{underlying} is an instance (anything with C{n} and a 1-based
    C{value(i)}) or a plain callable, in which case C{n} must be given.
    Every call C{oracle(i)} is answered by the underlying function and
    increments C{count}; answers are never altered.
    """

    def __init__(self, underlying, n=None):
        if n is None:
            n = underlying.n
        self.n = n
        self.underlying = underlying
        self._value = getattr(underlying, 'value', underlying)
        self.count = 0

    def __call__(self, i):
        if not 1 <= i <= self.n:
            raise QueryError('oracle query %r outside 1..%d' % (i, self.n))
        self.count += 1
        return self._value(i)
