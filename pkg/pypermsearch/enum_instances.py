# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Enumeration of problem instances.
"""

from itertools import permutations

from numpy import zeros

from pypermsearch.genfunction import GeneralFunction
from pypermsearch.parity_class import parity_class
from pypermsearch.permutation import Permutation
from pypermsearch.q_pi_neighbors import q_pi_neighbors
from pypermsearch.searchinstance import SearchInstance


def enum_permutations(n, klass=None):
    """Returns all permutations on [n] in lexicographic order, optionally
    only those of class C{klass} (C{P0} or C{P1}).
    """
    perms = [Permutation(v) for v in permutations(range(1, n + 1))]
    if klass is None:
        return perms
    return [p for p in perms if parity_class(p) == klass]


def enum_search_instances(n):
    """Returns the no instance on [n] followed by the n yes instances.
    """
    return [SearchInstance(n)] + [SearchInstance(n, j) for j in range(1, n + 1)]


def enum_q(n):
    """Returns every member of Q on [n], sorted by map.

    A member is fixed by its colliding pair (one odd, one even point, both
    mapped to 1) and an injective assignment of M{2..n} to the other M{n-2}
    points, so there are M{ceil(n/2) floor(n/2) (n-1)!} of them.
    """
    members = []
    for a in range(1, n + 1, 2):
        for b in range(2, n + 1, 2):
            others = [i for i in range(n) if i not in (a - 1, b - 1)]
            for vals in permutations(range(2, n + 1), n - 2):
                table = zeros(n, dtype=int)
                table[[a - 1, b - 1]] = 1
                table[others] = vals
                members.append(GeneralFunction(table))
    members.sort(key=lambda h: h.map)
    return members


def sampling_multiplicity(n, klass):
    """Returns the multiplicity table C{{h: count}} of M{h_{pi,f}} over all
    pairs of M{pi} in C{klass} and yes instances M{f} on [n/2].

    Drawing M{pi} uniformly from the class and then M{h} uniformly from
    M{Q_pi} gives the uniform distribution on Q exactly when every member
    of Q appears and all counts agree.
    """
    counts = {}
    for p in enum_permutations(n, klass):
        for h in q_pi_neighbors(p):
            counts[h] = counts.get(h, 0) + 1
    return counts
