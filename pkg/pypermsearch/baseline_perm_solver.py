# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Exact classical solver for PERMUTATION.
"""

from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.idx_step import query


def baseline_perm_solver(n):
    """Returns the algorithm that scans M{i = 1..n} until M{pi(i) = 1} and
    answers 1 iff that M{i} is even. Its error is 0 and it makes at most n
    queries.
    """
    def scan(n):
        for i in range(1, n + 1):
            v = yield query(i)
            if v == 1:
                return 1 if i % 2 == 0 else 0
        return 0

    return ClassicalAlgorithm(n, scan, 'baseline')
