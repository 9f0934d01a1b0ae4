# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests for exact and Monte Carlo error measurement and the uniformity
test.
"""

from fractions import Fraction

from pypermsearch.baseline_perm_solver import baseline_perm_solver
from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.errors import EnumerationError, InstanceError
from pypermsearch.exact_error_perm import exact_error_perm
from pypermsearch.exact_error_search import exact_error_search
from pypermsearch.grover_search import grover_circuit
from pypermsearch.idx_step import rand
from pypermsearch.instance_errors import instance_error
from pypermsearch.mc_error import mc_error
from pypermsearch.permutation import identity
from pypermsearch.psoption import psoption
from pypermsearch.rand_stream import SeededStream
from pypermsearch.search_solvers import first_index_search, random_guess
from pypermsearch.truncated_scan_solver import truncated_scan_solver
from pypermsearch.uniformity_test import uniformity_test

from pypermsearch.t.t_begin import t_begin
from pypermsearch.t.t_is import t_is
from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_raises import t_raises
from pypermsearch.t.t_end import t_end


def t_measure(quiet=False):
    """Tests for C{exact_error_search}, C{exact_error_perm}, C{mc_error},
    C{ErrorReport} and C{uniformity_test}.
    """
    n_tests = 30

    t_begin(n_tests, quiet)

    F = Fraction

    t = 'exact_error_search : '
    rep = exact_error_search(random_guess(5), 5)
    t_ok(rep.eps0 == rep.eps1 == rep.eps_mu == F(1, 2) and rep.query_max == 0,
         t + 'fair coin errs with probability 1/2 everywhere')
    alg = first_index_search(4)
    t_is([exact_error_search(alg, 4, v).eps_mu for v in ('mu0', 'mu1', 'mu')],
         [0, F(3, 4), F(3, 8)], None, t + 'first index under mu0, mu1 and mu')
    t_is(exact_error_search(alg, 4, 'mu1').variant, 'mu1', None,
         t + 'variant recorded')
    rep = exact_error_search(grover_circuit(4), 4, 'mu1')
    t_ok(abs(rep.eps_mu) < 1e-9 and abs(rep.worst_case) < 1e-9 and
         rep.query_max == 2, t + 'Grover on [4] is exact with 2 queries')
    t_raises(InstanceError, exact_error_search, (alg, 4, 'uniform'),
             t + 'uniform is not a search distribution')
    t_raises(InstanceError, exact_error_search, (alg, 5), t + 'domain mismatch')
    t_raises(EnumerationError, exact_error_search,
             (alg, 4, 'mu', psoption(MU_ENUM_CAP=3)), t + 'enumeration cap')

    t = 'exact_error_perm : '
    rep = exact_error_perm(baseline_perm_solver(5), 5)
    t_ok(rep.eps0 == rep.eps1 == rep.worst_case == 0 and rep.query_max == 5,
         t + 'baseline is exact on [5]')
    cases = [(4, 2, F(1, 4)), (4, 4, 0), (4, 0, F(1, 2)), (6, 3, F(1, 4))]
    t_ok(all(exact_error_perm(truncated_scan_solver(n, b), n).eps_mu == e
             for n, b, e in cases), t + 'truncated scan error (1 - b/n)/2')
    rep = exact_error_perm(truncated_scan_solver(5, 2), 5)
    t_is(rep.eps_mu, (72 * rep.eps0 + 48 * rep.eps1) / 120, None,
         t + 'uniform error weights the classes by size')
    t_is(rep.query_mean, F(2 * 96 + 24, 120), None, t + 'mean query count')
    t_raises(EnumerationError, exact_error_perm,
             (baseline_perm_solver(4), 4, psoption(PERM_ENUM_CAP=3)),
             t + 'n! enumeration cap')

    t = 'instance_error : '
    t_is(instance_error(truncated_scan_solver(4, 2), identity(4)), (0, 1, 1),
         None, t + 'found at position 1 after one query')

    def unbounded(n):
        coin = yield rand(2)
        return coin
    t_raises(EnumerationError, instance_error,
             (ClassicalAlgorithm(2, unbounded, 'unbounded', False), identity(2)),
             t + 'no finite randomness space')

    t = 'ErrorReport.to_record : '
    rec = exact_error_perm(truncated_scan_solver(4, 2), 4).to_record()
    t_ok(rec['eps_mu'] == 0.25 and rec['eps_mu_exact'] == '1/4' and
         rec['mode'] == 'exact' and rec['variant'] == 'uniform',
         t + 'exact rationals as floats and strings')
    t_is(rec['fixture'], 'truncated_scan_2', None, t + 'fixture name')
    rec = exact_error_search(grover_circuit(4), 4).to_record()
    t_ok('eps_mu_exact' not in rec and rec['ci_halfwidth'] is None,
         t + 'quantum errors are floats only')

    t = 'mc_error : '
    a = truncated_scan_solver(4, 2)
    r1 = mc_error(a, 4, 'uniform', 2000, SeededStream(5))
    r2 = mc_error(a, 4, 'uniform', 2000, SeededStream(5))
    t_ok(r1.eps_mu == r2.eps_mu and r1.eps0 == r2.eps0 and
         r1.query_mean == r2.query_mean, t + 'equal seeds give equal reports')
    t_ok(abs(r1.eps_mu - 0.25) <= r1.ci_halfwidth,
         t + 'truncated scan within the Hoeffding interval of 1/4')
    reps = [mc_error(a, 4, 'uniform', 400, SeededStream(100 + s))
            for s in range(100)]
    covered = sum(1 for r in reps if abs(r.eps_mu - 0.25) < r.ci_halfwidth)
    t_ok(covered >= 99,
         t + 'interval covers 1/4 in at least 99 of 100 seeded runs')
    t_ok(r1.mode == 'mc' and r1.worst_case is None and r1.query_max <= 2,
         t + 'mc report fields')
    rep = mc_error(baseline_perm_solver(6), 6, 'uniform', 300, SeededStream(1))
    t_ok(rep.eps_mu == 0 and rep.query_max <= 6, t + 'baseline never errs')
    rep = mc_error(grover_circuit(4), 4, 'mu', 100, SeededStream(2))
    t_ok(rep.eps_mu == 0 and rep.query_max == 2, t + 'quantum algorithm')
    rep = mc_error(random_guess(3), 3, 'mu0', 50, SeededStream(3))
    t_ok(rep.eps1 is None and rep.eps0 == rep.eps_mu, t + 'mu0 has no yes trials')
    t_raises(ValueError, mc_error, (a, 4, 'uniform', 0), t + 'no trials')

    t = 'uniformity_test : '
    res = uniformity_test(list(range(6)) * 100, 6)
    t_ok(res.passed and res.statistic == 0 and res.dof == 5, t + 'exact counts pass')
    t_ok(not uniformity_test([0] * 300 + [1] * 100, 2).passed, t + '3:1 skew fails')
    t_ok(not uniformity_test(list(range(3)) * 50, 6),
         t + 'labels never drawn count as empty cells')
    t_raises(ValueError, uniformity_test, ([], 4), t + 'empty sample set')
    t_raises(ValueError, uniformity_test, ([1, 2, 3], 2), t + 'too many labels')

    t_end()


if __name__ == '__main__':
    t_measure(quiet=False)
