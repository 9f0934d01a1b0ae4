# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Clean simulation of an M{h_{pi,f}} query with two search queries.
"""

from numpy import arange, asarray, full, zeros

from pypermsearch.apply_function_oracle import apply_classical_xor
from pypermsearch.build_h import h_route
from pypermsearch.errors import InstanceError, LayoutError
from pypermsearch.layout import value_width


def clean_h_query(state, p, f_oracle, control='index', target='answer',
                  route=None, ancilla='hanc'):
    """Applies the XOR oracle of M{h_{pi,f}} to C{state}, where C{p} is the
    classically known permutation M{pi} and C{f_oracle} the search oracle
    of M{f} on [n/2].

    The ancilla qubit C{ancilla} must be present and, for the equality with
    the direct oracle, start in |0>. On branch M{|i>}:

        1. M{f} is queried at the routed index of M{i} into the ancilla,
        2. the answer register is XORed with M{pi(i)} if the ancilla is 0
           and with 1 if it is 1 (no query; M{pi} is known),
        3. M{f} is queried again, returning the ancilla to |0>.

    Points that do not route to M{f} get M{pi(i)} in both ancilla branches,
    so both queries are uniform across branches. Exactly two M{f}-queries
    are tallied on C{f_oracle}.

    @see: L{build_h}
    """
    if p.n % 2:
        raise InstanceError('clean_h_query: n must be even, got %d' % p.n)
    if f_oracle.n != p.n // 2:
        raise InstanceError('clean_h_query: search domain %d does not match '
                            'n/2 = %d' % (f_oracle.n, p.n // 2))
    layout = state.layout
    if not layout.has(ancilla):
        raise LayoutError('clean_h_query: missing ancilla register %r' % ancilla)

    dc = layout.size(control)
    r = arange(p.n) if route is None else asarray(route, dtype=int)
    m = min(len(r), dc)
    hr = h_route(p)

    f_route = full(m, -1, dtype=int)
    write = zeros((m, layout.size(ancilla)), dtype=int)
    for c in range(m):
        j = r[c]
        if j < 0:
            continue
        if hr[j]:
            f_route[c] = hr[j] - 1
            write[c, 0] = p.table[j]
            ## write[c, 1] stays 0: h(i) = 1 encodes as 0
        else:
            write[c, 0] = p.table[j]
            write[c, 1] = p.table[j]

    state = f_oracle.apply(state, control, ancilla, f_route)
    state = apply_classical_xor(state, control, ancilla, target, write)
    return f_oracle.apply(state, control, ancilla, f_route)


class CleanHOracle(object):
    """Oracle unitary of M{h_{pi,f}} built from L{clean_h_query}; every use
    costs two queries to the search oracle C{f_oracle}.
    """

    kind = 'xor'

    def __init__(self, p, f_oracle, ancilla='hanc'):
        if p.n % 2:
            raise InstanceError('CleanHOracle: n must be even, got %d' % p.n)
        self.p = p
        self.f_oracle = f_oracle
        self.ancilla = ancilla
        self.n = p.n
        self.width = value_width(p.n)
        self.ancillas = [(ancilla, 1)] + list(f_oracle.ancillas)
        self.count = 0

    def apply(self, state, control='index', target='answer', route=None):
        self.count += 1
        return clean_h_query(state, self.p, self.f_oracle, control, target,
                             route, self.ancilla)
