# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Small classical algorithms for unique search.
"""

from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.idx_step import query, rand


def scan_search_solver(n):
    """Exact search: scans [n] and answers 1 at the first marked element.
    """
    def scan_search(n):
        for i in range(1, n + 1):
            v = yield query(i)
            if v == 1:
                return 1
        return 0

    return ClassicalAlgorithm(n, scan_search, 'scan_search')


def first_index_search(n):
    """Queries index 1 only and answers M{f(1)}; its error on a uniformly
    random yes instance is M{(n-1)/n}, all of it on the instances not
    marked at 1.
    """
    def first_index(n):
        v = yield query(1)
        return v

    return ClassicalAlgorithm(n, first_index, 'first_index')


def random_guess(n):
    """Outputs a fair coin without querying.
    """
    def guess(n):
        coin = yield rand(2)
        return coin

    return ClassicalAlgorithm(n, guess, 'random_guess')


def constant_output(n, bit):
    """Outputs C{bit} without querying.
    """
    def constant(n):
        return bit
        yield

    return ClassicalAlgorithm(n, constant, 'constant_%d' % bit)
