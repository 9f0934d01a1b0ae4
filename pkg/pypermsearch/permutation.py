# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Permutations on [n].
"""

from numpy import arange, empty, unique

from pypermsearch.errors import InstanceError
from pypermsearch.genfunction import GeneralFunction


class Permutation(GeneralFunction):
    """A bijection M{pi} on M{[n]}, built from the 1-based sequence
    M{pi(1), ..., pi(n)}.

    Besides the table of L{GeneralFunction} it keeps the inverse table,
    C{p.inv[v-1] == p.inverse(v) - 1}.

    Example::
        p = Permutation([2, 1, 3, 4])
        p(1)            # 2
        p.inverse(1)    # 2
    """

    kind = 'perm'

    def _check(self):
        if len(unique(self.table)) != self.n:
            raise InstanceError('Permutation: %r is not a bijection on 1..%d'
                                % (list(self.map), self.n))
        inv = empty(self.n, dtype=int)
        inv[self.table] = arange(self.n)
        inv.setflags(write=False)
        self.inv = inv

    def inverse(self, v):
        """Returns M{pi^-1(v)} for a 1-based value C{v}.
        """
        if not 1 <= v <= self.n:
            raise InstanceError('inverse: value %r outside 1..%d' % (v, self.n))
        return int(self.inv[v - 1]) + 1

    def compose(self, other):
        """Returns C{self o other}, i.e. C{other} applied first.
        """
        if other.n != self.n:
            raise InstanceError('compose: sizes %d and %d differ' %
                                (self.n, other.n))
        return Permutation(self.table[other.table] + 1)


def identity(n):
    """Returns the identity permutation on [n].
    """
    return Permutation(arange(1, n + 1))
