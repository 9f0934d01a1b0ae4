# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests for the composed oracles: clean M{h}-queries, the forward search
oracle and relabeled oracles.
"""

from pypermsearch.build_h import build_h
from pypermsearch.clean_h_query import clean_h_query, CleanHOracle
from pypermsearch.enum_instances import enum_permutations, \
    enum_search_instances
from pypermsearch.errors import InstanceError, LayoutError
from pypermsearch.forward_search_oracle import forward_search_oracle
from pypermsearch.layout import Layout
from pypermsearch.oracle_matrix import oracle_matrix
from pypermsearch.oracle_unitary import OracleUnitary, RelabeledOracle
from pypermsearch.permutation import Permutation, identity
from pypermsearch.searchinstance import SearchInstance
from pypermsearch.statevector import StateVector

from pypermsearch.t.t_begin import t_begin
from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_raises import t_raises
from pypermsearch.t.t_end import t_end


def _dist(a, b):
    return abs(a - b).max()


def _forward_instance(p, compact):
    """Search instance the forward oracle of C{p} should realize."""
    i = p.inverse(1)
    if compact:
        return SearchInstance(p.n // 2, i // 2 if i % 2 == 0 else None)
    return SearchInstance(p.n, i if i % 2 == 0 else None)


def t_oracles(quiet=False):
    """Operator-level tests of C{CleanHOracle}, C{ForwardSearchOracle} and
    C{RelabeledOracle} at n = 4.
    """
    n_tests = 13

    t_begin(n_tests, quiet)

    t = 'clean_h_query : '
    layout = Layout([('index', 2), ('answer', 2), ('hanc', 1)])
    worst, tally_ok = 0.0, True
    for p in enum_permutations(4):
        for f in enum_search_instances(2):
            f_oracle = OracleUnitary.search(f)
            u, cols = oracle_matrix(CleanHOracle(p, f_oracle), layout,
                                    fixed={'hanc': 0})
            v, _ = oracle_matrix(OracleUnitary.function(build_h(p, f)), layout,
                                 fixed={'hanc': 0})
            worst = max(worst, _dist(u, v))
            tally_ok = tally_ok and f_oracle.count == 2 * len(cols)
    t_ok(worst < 1e-9, t + 'equals the direct h oracle on 24 x 3 instances')
    t_ok(tally_ok, t + 'two search queries per use')

    p = Permutation([2, 1, 3, 4])
    f_oracle = OracleUnitary.search(SearchInstance(2))
    u, _ = oracle_matrix(CleanHOracle(p, f_oracle), layout, fixed={'hanc': 0})
    v, _ = oracle_matrix(OracleUnitary.function(p), layout, fixed={'hanc': 0})
    t_ok(_dist(u, v) < 1e-9, t + 'unmarked f acts as the pi oracle')
    t_raises(LayoutError, clean_h_query,
             (StateVector.zero(Layout([('index', 2), ('answer', 2)])), p,
              f_oracle), t + 'missing ancilla')
    t_raises(InstanceError, clean_h_query,
             (StateVector.zero(layout), p,
              OracleUnitary.search(SearchInstance(3))),
             t + 'search domain is not n/2')
    o = CleanHOracle(p, f_oracle)
    t_ok(o.ancillas == [('hanc', 1)] and o.width == 2, t + 'declared ancilla')

    t = 'forward_search_oracle : '
    for compact in (False, True):
        layout = Layout([('index', 1 if compact else 2), ('answer', 1),
                         ('pwork', 2)])
        worst, tally_ok = 0.0, True
        for p in enum_permutations(4):
            p_oracle = OracleUnitary.function(p)
            u, cols = oracle_matrix(forward_search_oracle(p_oracle, 4, compact),
                                    layout, fixed={'pwork': 0})
            v, _ = oracle_matrix(OracleUnitary.search(_forward_instance(p, compact)),
                                 layout, fixed={'pwork': 0})
            worst = max(worst, _dist(u, v))
            tally_ok = tally_ok and p_oracle.count == 2 * len(cols)
        t_ok(worst < 1e-9 and tally_ok, t + '%s domain, all 24 permutations, '
             'two permutation queries per use' % ('compact' if compact else 'full'))
    o = forward_search_oracle(OracleUnitary.function(identity(4)), 4, True)
    t_ok(o.n == 2 and o.width == 1 and o.ancillas == [('pwork', 2)],
         t + 'compact domain and declared work register')
    t_raises(InstanceError, forward_search_oracle,
             (OracleUnitary.function(identity(3)), 3), t + 'odd n')

    t = 'RelabeledOracle : '
    layout = Layout([('index', 2), ('answer', 1)])
    inner = OracleUnitary.search(SearchInstance(4, 3))
    o = RelabeledOracle(inner, Permutation([3, 1, 2, 4]))
    u, cols = oracle_matrix(o, layout)
    v, _ = oracle_matrix(OracleUnitary.search(SearchInstance(4, 1)), layout)
    t_ok(_dist(u, v) < 1e-9, t + 'query i answered at sigma(i)')
    t_ok(inner.count == len(cols) and o.count == len(cols),
         t + 'one inner query per use')
    t_raises(InstanceError, RelabeledOracle, (inner, identity(3)),
             t + 'relabeling size mismatch')

    t_end()


if __name__ == '__main__':
    t_oracles(quiet=False)
