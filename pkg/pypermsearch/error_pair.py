# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Class-conditional error pairs and reduction configurations.
"""

from pypermsearch.errors import ErrorBudgetError, InstanceError


class ErrorPair(object):
    """Errors C{eps0} on the no side and C{eps1} on the yes side, each in
    [0, 1].
    """

    def __init__(self, eps0, eps1):
        for e in (eps0, eps1):
            if not 0 <= e <= 1:
                raise ErrorBudgetError('ErrorPair: error %r outside [0, 1]' % (e,))
        self.eps0 = eps0
        self.eps1 = eps1

    def can_rebalance(self):
        return self.eps0 + self.eps1 < 1

    def worst(self):
        return max(self.eps0, self.eps1)

    def __iter__(self):
        return iter((self.eps0, self.eps1))

    def __eq__(self, other):
        return isinstance(other, ErrorPair) and tuple(self) == tuple(other)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'ErrorPair(%s, %s)' % (self.eps0, self.eps1)


class ReductionConfig(object):
    """PERMUTATION size C{n} (even), assumed bound C{epsilon_bound} in
    [0, 1/2) on the solver's distributional error, and the seed of the
    random stream.

    The bound is only reported and used for rebalancing; the reduction
    itself never reads it.
    """

    def __init__(self, n, epsilon_bound=0, seed=0):
        if n < 2 or n % 2:
            raise InstanceError('ReductionConfig: n must be even, got %d' % n)
        if not 0 <= epsilon_bound < 0.5:
            raise ErrorBudgetError('ReductionConfig: epsilon bound %r outside '
                                   '[0, 1/2)' % (epsilon_bound,))
        self.n = n
        self.epsilon_bound = epsilon_bound
        self.seed = seed

    def __repr__(self):
        return 'ReductionConfig(n=%d, epsilon_bound=%s, seed=%d)' % (
            self.n, self.epsilon_bound, self.seed)
