# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Hybrid functions between a permutation and its unique-collision
neighbours.
"""

from numpy import zeros

from pypermsearch.errors import InstanceError
from pypermsearch.genfunction import GeneralFunction
from pypermsearch.idx_class import P0
from pypermsearch.parity_class import parity_class


def h_route(p):
    """Returns the routing table of M{h_{pi,f}}: C{r[i-1]} is the index
    M{j} of [n/2] such that M{h(i)} depends on M{f(j)}, or 0 if M{h(i) = pi(i)}
    regardless of M{f}.

    For M{pi} in P0 the even points route, M{i -> i/2}; for M{pi} in P1 the
    odd points route, M{i -> (i+1)/2}.
    """
    n = p.n
    if n % 2:
        raise InstanceError('h_route: n must be even, got %d' % n)
    r = zeros(n, dtype=int)
    if parity_class(p) == P0:
        r[1::2] = range(1, n // 2 + 1)
    else:
        r[0::2] = range(1, n // 2 + 1)
    return r


def build_h(p, f):
    """Returns M{h_{pi,f}} for a permutation C{p} on [n], n even, and a
    search instance C{f} on [n/2].

    If C{p} is in P0, M{h(i) = 1} when M{i} is even and M{f(i/2) = 1}; if
    C{p} is in P1, M{h(i) = 1} when M{i} is odd and M{f((i+1)/2) = 1};
    otherwise M{h(i) = pi(i)}. So M{h} equals C{p} when nothing is marked
    and is a member of M{Q_pi} otherwise.

    Example::
        build_h(Permutation([2, 1, 3, 4]), SearchInstance(2, 1)).map
        # (1, 1, 3, 4)
    """
    if p.n % 2:
        raise InstanceError('build_h: n must be even, got %d' % p.n)
    if f.n != p.n // 2:
        raise InstanceError('build_h: search domain %d does not match n/2 = %d'
                            % (f.n, p.n // 2))

    table = p.table.copy()
    if f.marked is not None:
        table[h_route(p) == f.marked] = 0
    return GeneralFunction(table + 1)
