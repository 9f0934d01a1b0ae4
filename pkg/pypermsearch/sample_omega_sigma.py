# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Random symmetries of PERMUTATION.
"""

from numpy import arange

from pypermsearch.errors import InstanceError
from pypermsearch.permutation import Permutation
from pypermsearch.sample_uniform_permutation import shuffle


def sample_omega_sigma(n, rng):
    """Returns C{(omega, sigma)}: M{omega} uniform among permutations on [n]
    fixing 1, M{sigma} uniform among permutations mapping odd points to odd
    points and even points to even points.

    Randomness is drawn for M{omega} first, then for the odd block of
    M{sigma}, then for its even block.
    """
    if n < 1:
        raise InstanceError('sample_omega_sigma: n must be at least 1')

    omega = arange(1, n + 1)
    omega[1:] = shuffle(omega[1:], rng)

    sigma = arange(1, n + 1)
    sigma[0::2] = shuffle(sigma[0::2], rng)
    sigma[1::2] = shuffle(sigma[1::2], rng)

    return Permutation(omega), Permutation(sigma)
