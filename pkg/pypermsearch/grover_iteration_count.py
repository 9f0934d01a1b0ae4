# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Number of Grover iterations for a search space of size n.
"""

from numpy import arcsin, floor, pi, sqrt, sin


def grover_iteration_count(n):
    """Returns M{k = round(pi / (4 arcsin(1/sqrt(n))) - 1/2)}, at least 0,
    rounding halves up.

    Examples: 1 -> 0, 4 -> 1, 100 -> 7.
    """
    if n < 1:
        raise ValueError('grover_iteration_count: n must be positive, got %d' % n)
    x = pi / (4 * arcsin(1 / sqrt(n))) - 0.5
    return max(0, int(floor(x + 0.5)))


def grover_success_probability(n, k=None):
    """Closed form M{sin^2((2k+1) theta)}, M{sin theta = 1/sqrt(n)}."""
    if k is None:
        k = grover_iteration_count(n)
    return float(sin((2 * k + 1) * arcsin(1 / sqrt(n))) ** 2)
