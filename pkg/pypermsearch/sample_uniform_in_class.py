# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Uniformly random permutations from P0 or P1.
"""

from numpy import arange, zeros

from pypermsearch.errors import InstanceError
from pypermsearch.idx_class import P0, P1, CLASS_NAMES
from pypermsearch.permutation import Permutation
from pypermsearch.sample_uniform_permutation import shuffle


def sample_uniform_in_class(n, klass, rng):
    """Returns a permutation drawn uniformly from class C{klass} (C{P0} or
    C{P1}) of permutations on [n].

    The position of 1 is drawn uniformly among the odd (C{P0}) or even
    (C{P1}) slots, then the values M{2..n} are shuffled into the remaining
    slots. This is exact and rejection-free; for even n both classes have
    M{n!/2} members, for odd n P0 is the larger one.
    """
    if klass not in (P0, P1):
        raise InstanceError('sample_uniform_in_class: class must be P0 or P1, '
                            'got %r' % (klass,))
    if n < 1:
        raise InstanceError('sample_uniform_in_class: n must be at least 1')

    first = 1 if klass == P0 else 2
    slots = list(range(first, n + 1, 2))
    if not slots:
        raise InstanceError('sample_uniform_in_class: class %s is empty for '
                            'n = %d' % (CLASS_NAMES[klass], n))

    pos = slots[rng.randint(len(slots))]
    rest = shuffle(arange(2, n + 1), rng)

    values = zeros(n, dtype=int)
    values[pos - 1] = 1
    values[arange(n) != pos - 1] = rest
    return Permutation(values)
