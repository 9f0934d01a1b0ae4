# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""PERMUTATION on [n-1] through an algorithm for [n].
"""

from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.counted_oracle import CountedOracle
from pypermsearch.errors import InstanceError
from pypermsearch.relay import ask, answer, relay
from pypermsearch.run_classical import run_classical


def extended_solver(a, n=None):
    """Returns the algorithm for PERMUTATION_{n-1} that runs C{a} on the
    extension M{pi(n) = n} of its input: queries at M{n} are answered
    locally, every other query costs one query.
    """
    if n is None:
        n = a.n
    if n != a.n or n < 2:
        raise InstanceError('extended_solver: cannot extend %r to n = %d'
                            % (a, n))

    def ext_query(i):
        return answer(n) if i == n else ask(i)

    def extended(m):
        out = yield from relay(a.start(), ext_query)
        return out

    return ClassicalAlgorithm(n - 1, extended, 'ext(%s)' % a.name,
                              a.enumerable)


def odd_n_wrapper(a, p, randomness=None):
    """Evaluates C{a}, an algorithm for PERMUTATION_n, on the extension of
    the permutation C{p} of [n-1] and returns its output bit.

    C{a} should first be symmetrized with L{permutation_symmetrize}; then its
    error on uniformly random permutations of [n-1] is at most
    M{eps + 1/(2n)}.
    """
    if p.n + 1 != a.n:
        raise InstanceError('odd_n_wrapper: permutation on [%d] for an algorithm '
                            'on [%d]' % (p.n, a.n))
    return run_classical(extended_solver(a), CountedOracle(p),
                         randomness).output
