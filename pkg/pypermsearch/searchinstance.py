# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Instances of unique search.
"""

from numpy import zeros

from pypermsearch.errors import InstanceError


class SearchInstance(object):
    """A function M{f: [n] -> {0,1}} marking at most one element.

    C{marked} is the 1-based marked element or C{None} for the lone no
    instance; C{answer} is 1 iff an element is marked. C{table} is the
    read-only 0-based bit table, C{table[i-1] == f(i)}.
    """

    kind = 'search'

    def __init__(self, n, marked=None):
        if n < 1:
            raise InstanceError('SearchInstance: domain size must be at least 1')
        if marked is not None and not 1 <= marked <= n:
            raise InstanceError('SearchInstance: marked element %r outside '
                                '1..%d' % (marked, n))
        self.n = n
        self.marked = marked
        table = zeros(n, dtype=int)
        if marked is not None:
            table[marked - 1] = 1
        table.setflags(write=False)
        self.table = table

    @property
    def answer(self):
        return 0 if self.marked is None else 1

    @property
    def map(self):
        return tuple(int(v) for v in self.table)

    def value(self, i):
        if not 1 <= i <= self.n:
            raise InstanceError('value: index %r outside 1..%d' % (i, self.n))
        return 1 if i == self.marked else 0

    __call__ = value

    def __eq__(self, other):
        if not isinstance(other, SearchInstance):
            return NotImplemented
        return self.n == other.n and self.marked == other.marked

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash((self.kind, self.n, self.marked))

    def __repr__(self):
        return 'search n=%d marked=%s' % (self.n,
            '-' if self.marked is None else self.marked)
