# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests for the hybrid functions M{h_{pi,f}} and membership in Q.
"""

from pypermsearch.build_h import build_h, h_route
from pypermsearch.enum_instances import enum_permutations, enum_q, \
    sampling_multiplicity
from pypermsearch.errors import InstanceError
from pypermsearch.genfunction import GeneralFunction
from pypermsearch.idx_class import P0, P1
from pypermsearch.is_in_q import is_in_q
from pypermsearch.parity_class import parity_class
from pypermsearch.permutation import Permutation, identity
from pypermsearch.q_pi_neighbors import q_pi_neighbors, sample_q_pi
from pypermsearch.rand_stream import SeededStream
from pypermsearch.sample_uniform_permutation import sample_uniform_permutation
from pypermsearch.searchinstance import SearchInstance

from pypermsearch.t.t_begin import t_begin
from pypermsearch.t.t_is import t_is
from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_raises import t_raises
from pypermsearch.t.t_end import t_end


def _differences(h, p):
    return sum(1 for a, b in zip(h.map, p.map) if a != b)


def _diff_points(perms, n):
    """Returns, per permutation and marked point, the 1-based points where
    M{h_{pi,f}} differs from M{pi}, paired with the class of M{pi}.
    """
    out = []
    for p in perms:
        klass = parity_class(p)
        for j in range(1, n // 2 + 1):
            h = build_h(p, SearchInstance(n // 2, j))
            pts = [i + 1 for i in range(n) if h.map[i] != p.map[i]]
            out.append((klass, pts))
    return out


def _check_diff_points(diffs, n, t):
    t_ok(all(len(pts) == 1 for _, pts in diffs),
         t + 'n = %d, h differs from pi at exactly one point' % n)
    t_ok(all((pts[0] % 2 == 0) == (klass == P0) for klass, pts in diffs),
         t + 'n = %d, the point is even iff pi is in P0' % n)


def t_build_h(quiet=False):
    """Tests for C{build_h}, C{is_in_q}, C{q_pi_neighbors} and the exact
    sampling property.
    """
    n_tests = 30

    t_begin(n_tests, quiet)

    t = 'build_h : '
    h = build_h(Permutation([2, 1, 3, 4]), SearchInstance(2, 1))
    t_is(h.map, (1, 1, 3, 4), None, t + 'P1 routes odd points')
    h = build_h(Permutation([1, 3, 2, 4]), SearchInstance(2, 2))
    t_is(h.map, (1, 3, 2, 1), None, t + 'P0 routes even points')
    t_ok(all(build_h(p, SearchInstance(2)) == p for p in enum_permutations(4)),
         t + 'unmarked f gives h = pi')
    t_raises(InstanceError, build_h, (Permutation([2, 1, 3]),
             SearchInstance(1, 1)), t + 'odd n')
    t_raises(InstanceError, build_h, (identity(4), SearchInstance(3)),
             t + 'search domain is not n/2')
    for n in (2, 4, 6):
        _check_diff_points(_diff_points(enum_permutations(n), n), n, t)
    rng = SeededStream(8)
    perms = [sample_uniform_permutation(8, rng) for _ in range(300)]
    _check_diff_points(_diff_points(perms, 8), 8, t + 'sampled, ')

    t = 'h_route : '
    t_is(list(h_route(Permutation([1, 3, 2, 4]))), [0, 1, 0, 2], None, t + 'P0')
    t_is(list(h_route(Permutation([2, 1, 3, 4]))), [1, 0, 2, 0], None, t + 'P1')

    t = 'is_in_q : '
    t_ok(not is_in_q(identity(4)), t + 'bijection')
    t_ok(is_in_q(GeneralFunction([1, 1, 3, 4])), t + 'pair {1,2}')
    t_ok(not is_in_q(GeneralFunction([1, 3, 1, 4])), t + 'pair {1,3}, both odd')
    t_ok(not is_in_q(GeneralFunction([2, 1, 2, 4])), t + 'colliding value 2')
    t_ok(not is_in_q(GeneralFunction([1, 1, 1, 4])), t + 'three-way collision')

    t = 'q_pi_neighbors : '
    t_is(q_pi_neighbors(Permutation([1, 2])), [GeneralFunction([1, 1])], None,
         t + 'n = 2')
    ok = True
    for p in enum_permutations(4):
        hs = q_pi_neighbors(p)
        ok = ok and len(hs) == 2 and len(set(hs)) == 2 and \
            all(is_in_q(h) and _differences(h, p) == 1 for h in hs)
    t_ok(ok, t + 'n/2 members of Q, each one point away from pi')
    t_raises(InstanceError, q_pi_neighbors, (identity(3),), t + 'odd n')

    t = 'sample_q_pi : '
    rng = SeededStream(3)
    p = Permutation([4, 6, 1, 3, 2, 5])
    hs = q_pi_neighbors(p)
    draws = [sample_q_pi(p, rng) for _ in range(60)]
    t_ok(all(h in hs for h in draws), t + 'draws lie in Q_pi')
    t_ok(set(draws) == set(hs), t + 'every member is drawn')

    t = 'sampling_multiplicity : '
    for n in (4, 6):
        q = set(enum_q(n))
        for klass in (P0, P1):
            counts = sampling_multiplicity(n, klass)
            t_ok(set(counts) == q and set(counts.values()) == set([1]),
                 t + 'n = %d, class %d, uniform on Q' % (n, klass))
    rng = SeededStream(0)
    t_ok(all(is_in_q(sample_q_pi(p, rng)) for p in enum_permutations(6, P1)),
         t + 'every sample is in Q')

    t_end()


if __name__ == '__main__':
    t_build_h(quiet=False)
