# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Uniformly random permutations.
"""

from numpy import arange, asarray

from pypermsearch.errors import InstanceError
from pypermsearch.permutation import Permutation


def shuffle(values, rng):
    """Returns a uniformly shuffled copy of C{values} (Fisher-Yates).

    Draws C{rng.randint(i + 1)} for C{i = len(values) - 1, ..., 1}, so the
    randomness space has exactly C{len(values)!} equally likely paths.
    """
    a = asarray(values, dtype=int).copy()
    for i in range(len(a) - 1, 0, -1):
        j = rng.randint(i + 1)
        a[i], a[j] = a[j], a[i]
    return a


def sample_uniform_permutation(n, rng):
    """Returns a permutation drawn uniformly from all M{n!} permutations
    on [n].
    """
    if n < 1:
        raise InstanceError('sample_uniform_permutation: n must be at least 1, '
                            'got %d' % n)
    return Permutation(shuffle(arange(1, n + 1), rng))
