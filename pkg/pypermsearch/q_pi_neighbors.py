# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""The members of Q_pi.
"""

from pypermsearch.build_h import build_h
from pypermsearch.errors import InstanceError
from pypermsearch.searchinstance import SearchInstance


def q_pi_neighbors(p):
    """Returns the M{n/2} members of M{Q_pi}, i.e. C{build_h(p, f)} for every
    yes instance C{f} of unique search on [n/2], ordered by the marked
    element.
    """
    if p.n % 2:
        raise InstanceError('q_pi_neighbors: n must be even, got %d' % p.n)
    m = p.n // 2
    return [build_h(p, SearchInstance(m, j)) for j in range(1, m + 1)]


def sample_q_pi(p, rng):
    """Returns a uniformly random member of M{Q_pi}.
    """
    if p.n % 2:
        raise InstanceError('sample_q_pi: n must be even, got %d' % p.n)
    m = p.n // 2
    return build_h(p, SearchInstance(m, rng.randint(m) + 1))
