# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests for the permutation self-reduction and the odd-n extension.
"""

from fractions import Fraction

from pypermsearch.baseline_perm_solver import baseline_perm_solver
from pypermsearch.counted_oracle import CountedOracle
from pypermsearch.enum_instances import enum_permutations
from pypermsearch.error_bounds import odd_uniform_bound
from pypermsearch.errors import InstanceError
from pypermsearch.exact_error_perm import exact_error_perm
from pypermsearch.idx_class import P0
from pypermsearch.instance_errors import expected_answer, instance_errors
from pypermsearch.noisy_solvers import noisy_perm_solver
from pypermsearch.odd_error_combination import odd_error_combination
from pypermsearch.odd_n_wrapper import extended_solver, odd_n_wrapper
from pypermsearch.parity_class import parity_class
from pypermsearch.permutation import identity
from pypermsearch.permutation_symmetrize import permutation_symmetrize
from pypermsearch.quantum_solvers import probe_perm_solver
from pypermsearch.rand_stream import SeededStream
from pypermsearch.run_classical import run_classical
from pypermsearch.truncated_scan_solver import truncated_scan_solver

from pypermsearch.t.t_begin import t_begin
from pypermsearch.t.t_is import t_is
from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_raises import t_raises
from pypermsearch.t.t_end import t_end


def t_odd_n(quiet=False):
    """Tests for C{permutation_symmetrize}, C{extended_solver} and
    C{odd_n_wrapper}.
    """
    n_tests = 13

    t_begin(n_tests, quiet)

    F = Fraction

    t = 'permutation_symmetrize : '
    rep = exact_error_perm(permutation_symmetrize(baseline_perm_solver(4)), 4)
    t_ok(rep.worst_case == 0 and rep.query_max == 4,
         t + 'exact solver stays exact, query count unchanged')
    a = truncated_scan_solver(4, 2)
    rows = instance_errors(permutation_symmetrize(a), enum_permutations(4))
    no = set(e for p, e, _, _ in rows if parity_class(p) == P0)
    yes = set(e for p, e, _, _ in rows if parity_class(p) != P0)
    t_ok(no == set([F(1, 4)]) and yes == set([F(1, 4)]),
         t + 'every instance gets its class average error')
    t_ok(max(q for _, _, q, _ in rows) == 2, t + 'at most 2 queries')
    tr = run_classical(permutation_symmetrize(baseline_perm_solver(6)),
                       CountedOracle(identity(6)), SeededStream(3))
    t_is(tr.output, 0, None, t + 'identity on [6] answers 0')
    t_raises(InstanceError, permutation_symmetrize, (probe_perm_solver(4),),
             t + 'quantum algorithms are not relabeled here')

    t = 'extended_solver : '
    rep = exact_error_perm(extended_solver(baseline_perm_solver(4)), 3)
    t_ok(rep.worst_case == 0 and rep.query_max == 3,
         t + 'exact on [3], no query at the added point')
    a = permutation_symmetrize(truncated_scan_solver(4, 2))
    rep = exact_error_perm(extended_solver(a), 3)
    t_ok(rep.eps_mu == F(1, 4) and rep.eps_mu <= odd_uniform_bound(F(1, 4), 4),
         t + 'truncated scan: error 1/4, within eps + 1/(2n)')
    a = permutation_symmetrize(noisy_perm_solver(4, F(1, 2), 0))
    rep = exact_error_perm(extended_solver(a), 3)
    t_is(rep.eps_mu, odd_error_combination((F(1, 2), 0), 3), None,
         t + 'one-sided errors: class-weighted combination')
    t_ok(rep.eps_mu == F(1, 3) and
         rep.eps_mu <= odd_uniform_bound(exact_error_perm(a, 4).eps_mu, 4),
         t + 'one-sided errors: 1/3 within eps + 1/(2n)')
    t_raises(InstanceError, extended_solver, (baseline_perm_solver(4), 5),
             t + 'size mismatch')

    t = 'odd_n_wrapper : '
    for m in (3, 5):
        a = permutation_symmetrize(baseline_perm_solver(m + 1))
        rng = SeededStream(m)
        ok = all(odd_n_wrapper(a, p, rng) == expected_answer(p)
                 for p in enum_permutations(m))
        t_ok(ok, t + 'exact on every permutation of [%d]' % m)
    t_raises(InstanceError, odd_n_wrapper,
             (baseline_perm_solver(6), identity(4)), t + 'size mismatch')

    t_end()


if __name__ == '__main__':
    t_odd_n(quiet=False)
