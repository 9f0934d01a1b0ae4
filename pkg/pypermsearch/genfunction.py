# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Total functions on [n] given by an explicit table.
"""

from numpy import asarray

from pypermsearch.errors import InstanceError


class GeneralFunction(object):
    """A total function M{h: [n] -> [n]} stored as an explicit table.

    The public interface is 1-based, as in M{[n] = {1..n}}: C{h(i)} and
    C{h.map} use values in M{1..n}. Internally the table is kept 0-based in
    the read-only array C{h.table}, so that C{h.table[i-1] == h(i) - 1}.
    Instances are immutable and compare equal when their maps agree,
    whatever their class.
    """

    kind = 'func'

    def __init__(self, values):
        table = asarray(values, dtype=int).ravel() - 1
        n = len(table)
        if n < 1:
            raise InstanceError('%s: domain size must be at least 1' %
                                type(self).__name__)
        if table.min() < 0 or table.max() >= n:
            raise InstanceError('%s: values must lie in 1..%d, got %r' %
                                (type(self).__name__, n, list(values)))
        table.setflags(write=False)
        self.n = n
        self.table = table
        self._check()

    def _check(self):
        pass

    @property
    def map(self):
        return tuple(int(v) + 1 for v in self.table)

    def value(self, i):
        """Returns M{h(i)} for a 1-based index C{i}.
        """
        if not 1 <= i <= self.n:
            raise InstanceError('value: index %r outside 1..%d' % (i, self.n))
        return int(self.table[i - 1]) + 1

    __call__ = value

    def preimage(self, v):
        """Returns the sorted 1-based preimage of C{v}.
        """
        return [i + 1 for i in range(self.n) if self.table[i] == v - 1]

    def __eq__(self, other):
        if not isinstance(other, GeneralFunction):
            return NotImplemented
        return self.map == other.map

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return '%s n=%d map=%s' % (self.kind, self.n,
                                   ','.join(str(v) for v in self.map))
