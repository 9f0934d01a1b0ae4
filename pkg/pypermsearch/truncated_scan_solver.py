# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Classical PERMUTATION solver with a query budget.
"""

from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.errors import InstanceError
from pypermsearch.idx_step import query, rand


def truncated_scan_solver(n, budget):
    """Returns the algorithm that scans the first C{budget} positions; if it
    finds M{pi(i) = 1} it answers the parity of M{i}, otherwise it outputs a
    fair coin.

    Under the uniform distribution on permutations its error is exactly
    M{(1 - budget/n)/2}.
    """
    if not 0 <= budget <= n:
        raise InstanceError('truncated_scan_solver: budget %d outside 0..%d'
                            % (budget, n))

    def truncated_scan(n):
        for i in range(1, budget + 1):
            v = yield query(i)
            if v == 1:
                return 1 if i % 2 == 0 else 0
        coin = yield rand(2)
        return coin

    return ClassicalAlgorithm(n, truncated_scan, 'truncated_scan_%d' % budget)
