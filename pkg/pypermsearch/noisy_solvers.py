# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Classical fixtures with exactly known class-conditional errors.
"""


from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.errors import ErrorBudgetError
from pypermsearch.idx_step import query, draw


def _check(name, eps0, eps1):
    for e in (eps0, eps1):
        if not 0 <= e <= 1:
            raise ErrorBudgetError('%s: error %r outside [0, 1]' % (name, e))


def _flip(eps):
    """Request that draws 1 with probability C{eps}.
    """
    return draw([1 - eps, eps])


def noisy_search_solver(n, eps0, eps1):
    """Returns a unique-search algorithm that finds the answer by scanning
    all of [n], then flips it with probability C{eps0} on the no instance
    and C{eps1} on yes instances. Its error on every instance of a class is
    exactly that class's C{eps}.

    Rational C{eps} values (ints or L{Fraction}s) keep exact enumeration
    exact.
    """
    _check('noisy_search_solver', eps0, eps1)

    def noisy_search(n):
        found = 0
        for i in range(1, n + 1):
            v = yield query(i)
            if v == 1:
                found = 1
        flip = yield _flip(eps1 if found else eps0)
        return found ^ flip

    return ClassicalAlgorithm(n, noisy_search, 'noisy_search_%s_%s' %
                              (eps0, eps1))


def noisy_perm_solver(n, eps0, eps1):
    """Returns a PERMUTATION algorithm with exact error C{eps0} on every P0
    instance and C{eps1} on every P1 instance: it scans for M{pi^-1(1)}
    and flips the answer with the class's error probability.
    """
    _check('noisy_perm_solver', eps0, eps1)

    def noisy_perm(n):
        ans = 0
        for i in range(1, n + 1):
            v = yield query(i)
            if v == 1:
                ans = 1 if i % 2 == 0 else 0
                break
        flip = yield _flip(eps1 if ans else eps0)
        return ans ^ flip

    return ClassicalAlgorithm(n, noisy_perm, 'noisy_perm_%s_%s' %
                              (eps0, eps1))
