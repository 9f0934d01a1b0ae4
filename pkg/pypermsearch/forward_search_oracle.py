# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Search oracle of the forward reduction, computed from a permutation
oracle.
"""

from numpy import arange, asarray, full, zeros

from pypermsearch.apply_function_oracle import apply_classical_xor
from pypermsearch.errors import InstanceError
from pypermsearch.layout import value_width


class ForwardSearchOracle(object):
    """XOR oracle of the search instance M{f} with M{f(i) = 1} iff
    M{pi(i) = 1} and M{i} is even, made of two queries to the permutation
    oracle C{p_oracle}: M{pi(i)} is computed into the work register, the
    answer is flipped when the work register holds 1 (encoded 0) on an even
    M{i}, and M{pi(i)} is queried again to erase the work register.

    With C{compact=True} the domain is [n/2] and M{f(j) = 1} iff
    M{pi(2j) = 1}.
    """

    kind = 'xor'

    def __init__(self, p_oracle, n, work='pwork', compact=False):
        if n % 2:
            raise InstanceError('ForwardSearchOracle: n must be even, got %d' % n)
        if p_oracle.n != n:
            raise InstanceError('ForwardSearchOracle: permutation oracle on '
                                '[%d], expected [%d]' % (p_oracle.n, n))
        self.p_oracle = p_oracle
        self.work = work
        self.compact = compact
        self.n = n // 2 if compact else n
        self.width = 1
        self.ancillas = [(work, value_width(n))] + list(p_oracle.ancillas)
        self.count = 0

    def apply(self, state, control='index', target='answer', route=None):
        self.count += 1
        layout = state.layout
        r = arange(self.n) if route is None else asarray(route, dtype=int)
        m = min(len(r), layout.size(control))

        p_route = full(m, -1, dtype=int)
        flip = zeros((m, layout.size(self.work)), dtype=int)
        for c in range(m):
            j = r[c]
            if j < 0:
                continue
            if self.compact:
                p_route[c] = 2 * j + 1
                flip[c, 0] = 1
            else:
                p_route[c] = j
                flip[c, 0] = 1 if j % 2 else 0

        state = self.p_oracle.apply(state, control, self.work, p_route)
        state = apply_classical_xor(state, control, self.work, target, flip)
        return self.p_oracle.apply(state, control, self.work, p_route)


def forward_search_oracle(p_oracle, n, compact=False):
    """Returns the search oracle of the forward reduction for the permutation
    oracle C{p_oracle} on [n], n even. Each use costs two permutation
    queries.

    @see: L{search_to_permutation}
    """
    if n % 2:
        raise InstanceError('forward_search_oracle: n must be even, got %d' % n)
    return ForwardSearchOracle(p_oracle, n, compact=compact)
