# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests for instances, classes and their text forms.
"""

from os import close, remove
from tempfile import mkstemp

from pypermsearch.enum_instances import enum_permutations, \
    enum_search_instances, enum_q
from pypermsearch.errors import InstanceError
from pypermsearch.genfunction import GeneralFunction
from pypermsearch.idx_class import P0, P1, Q, NOT_CLASSIFIED
from pypermsearch.loadinstance import loadinstance
from pypermsearch.parity_class import parity_class, instance_class
from pypermsearch.permutation import Permutation, identity
from pypermsearch.saveinstance import saveinstance
from pypermsearch.searchinstance import SearchInstance

from pypermsearch.t.t_begin import t_begin
from pypermsearch.t.t_is import t_is
from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_raises import t_raises
from pypermsearch.t.t_end import t_end


def t_instances(quiet=False):
    """Tests for permutations, search instances, classes and text forms.
    """
    forms = ['perm n=4 map=2,1,3,4', 'func n=4 map=1,1,3,4',
             'search n=4 marked=2', 'search n=4 marked=-']

    n_tests = 26 + len(forms)

    t_begin(n_tests, quiet)

    t = 'parity_class : '
    t_is(parity_class(Permutation([1, 2])), P0, None, t + 'identity on [2] is P0')
    t_is(parity_class(Permutation([2, 1])), P1, None, t + 'transposition is P1')
    t_is(parity_class(Permutation([3, 1, 2, 4])), P1, None, t + '[3,1,2,4] is P1')

    t = 'Permutation : '
    p = Permutation([2, 1, 3, 4])
    t_ok(p(1) == 2 and p.inverse(1) == 2, t + 'value and inverse')
    t_is(p.compose(Permutation([3, 2, 1, 4])).map, (3, 1, 2, 4), None,
         t + 'compose applies the argument first')
    t_is(identity(3).map, (1, 2, 3), None, t + 'identity')
    t_raises(InstanceError, Permutation, ([1, 1, 3],), t + 'not a bijection')
    t_raises(InstanceError, p.value, (5,), t + 'index out of range')
    t_raises(InstanceError, Permutation, ([0, 1],), t + 'value out of range')

    t = 'GeneralFunction : '
    h = GeneralFunction([1, 1, 3, 4])
    t_is(h.preimage(1), [1, 2], None, t + 'preimage')
    t_ok(GeneralFunction([2, 1]) == Permutation([2, 1]), t + 'equality by map')
    t_ok(hash(GeneralFunction([2, 1])) == hash(Permutation([2, 1])),
         t + 'hash by map')

    t = 'SearchInstance : '
    t_ok(SearchInstance(4, 2).answer == 1 and SearchInstance(4).answer == 0,
         t + 'answer')
    t_is(SearchInstance(4, 2).map, (0, 1, 0, 0), None, t + 'bit table')
    t_raises(InstanceError, SearchInstance, (4, 5), t + 'marked out of range')

    t = 'instance_class : '
    t_is(instance_class(identity(4)), P0, None, t + 'identity')
    t_is(instance_class(GeneralFunction([1, 1, 3, 4])), Q, None,
         t + 'collision {1,2}')
    t_is(instance_class(GeneralFunction([1, 3, 1, 4])), NOT_CLASSIFIED, None,
         t + 'collision {1,3} has no even point')

    t = 'saveinstance/loadinstance : '
    for s in forms:
        t_is(saveinstance(loadinstance(s)), s, None, t + s)

    fd, fname = mkstemp(suffix='.txt')
    close(fd)
    try:
        saveinstance(Permutation([3, 1, 2]), fname)
        t_ok(loadinstance(fname) == Permutation([3, 1, 2]), t + 'through a file')
    finally:
        remove(fname)
    t_raises(InstanceError, loadinstance, ('perm n=3 map=1,2',),
             t + 'map shorter than n')
    t_raises(InstanceError, loadinstance, ('tree n=3',), t + 'unknown kind')
    t_ok(isinstance(loadinstance('func n=2 map=2,1'), GeneralFunction) and
         not isinstance(loadinstance('func n=2 map=2,1'), Permutation),
         t + 'func stays a general function')

    t = 'enum_instances : '
    t_ok([len(enum_permutations(4, k)) for k in (None, P0, P1)] == [24, 12, 12],
         t + 'even n splits n! in halves')
    t_ok([len(enum_permutations(3, k)) for k in (P0, P1)] == [4, 2],
         t + 'odd n favours P0')
    s = enum_search_instances(3)
    t_ok(len(s) == 4 and s[0].answer == 0 and
         [f.marked for f in s[1:]] == [1, 2, 3], t + 'search instances')
    t_ok(len(enum_q(4)) == 24 and len(enum_q(6)) == 1080, t + '|Q|')

    t_end()


if __name__ == '__main__':
    t_instances(quiet=False)
