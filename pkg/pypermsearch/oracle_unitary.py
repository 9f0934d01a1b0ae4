# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Counted XOR oracle unitaries.
"""

from numpy import arange, asarray, where

from pypermsearch.apply_function_oracle import apply_function_oracle
from pypermsearch.errors import InstanceError
from pypermsearch.layout import value_width


class OracleUnitary(object):
    """XOR oracle M{|i>|b> -> |i>|b XOR g(i)>} of a function on [n] with a
    query tally.

    C{table[i-1]} is the encoded value of M{g(i)}: the bit itself for a
    search instance, M{v - 1} for a function into [n]. C{ancillas} lists the
    extra registers the oracle needs in the workspace, none for a plain
    table oracle. The phase form is obtained with the answer qubit in the
    M{|->} state, so there is a single kind of oracle and a single meaning of
    a query.
    """

    kind = 'xor'

    def __init__(self, table, width, name=''):
        self.table = asarray(table, dtype=int)
        self.n = len(self.table)
        self.width = width
        self.name = name
        self.count = 0
        self.ancillas = []
        if self.n and self.table.max() >= 2 ** width:
            raise InstanceError('OracleUnitary: values need more than %d '
                                'answer qubits' % width)

    @classmethod
    def search(cls, f):
        """Oracle of a L{SearchInstance}, one answer qubit."""
        return cls(f.table, 1, repr(f))

    @classmethod
    def function(cls, g):
        """Oracle of a L{GeneralFunction} or L{Permutation} on [n]."""
        return cls(g.table, value_width(g.n), repr(g))

    def apply(self, state, control='index', target='answer', route=None):
        self.count += 1
        return apply_function_oracle(state, self.table, control, target, route)

    def __repr__(self):
        return '<OracleUnitary %s queries=%d>' % (self.name, self.count)


class RelabeledOracle(object):
    """Oracle answering query M{i} with the inner oracle's answer at
    M{sigma(i)}; each use is one query to the inner oracle.
    """

    kind = 'xor'

    def __init__(self, inner, sigma):
        if sigma.n != inner.n:
            raise InstanceError('RelabeledOracle: relabeling on [%d] for an '
                                'oracle on [%d]' % (sigma.n, inner.n))
        self.inner = inner
        self.sigma = sigma
        self.n = inner.n
        self.width = inner.width
        self.ancillas = inner.ancillas
        self.count = 0

    def apply(self, state, control='index', target='answer', route=None):
        self.count += 1
        r = arange(self.n) if route is None else asarray(route, dtype=int)
        composed = where(r >= 0, self.sigma.table[r.clip(0)], -1)
        return self.inner.apply(state, control, target, composed)
