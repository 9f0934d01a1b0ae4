# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests for reduction B, its symmetrization and rebalancing.
"""

from fractions import Fraction

from pypermsearch.baseline_perm_solver import baseline_perm_solver
from pypermsearch.counted_oracle import CountedOracle
from pypermsearch.error_bounds import bound_mu, bound_worst, lemma_worst
from pypermsearch.errors import ErrorBudgetError, InstanceError
from pypermsearch.exact_error_perm import exact_error_perm
from pypermsearch.exact_error_search import exact_error_search
from pypermsearch.grover_search import grover_circuit
from pypermsearch.instance_errors import instance_error
from pypermsearch.noisy_solvers import noisy_search_solver
from pypermsearch.oracle_unitary import OracleUnitary
from pypermsearch.psoption import psoption
from pypermsearch.quantum_algorithm import MixedQuantumAlgorithm
from pypermsearch.quantum_solvers import probe_perm_solver
from pypermsearch.rand_stream import SeededStream
from pypermsearch.rebalance import rebalance
from pypermsearch.reduction_b import reduction_b, reduce_b
from pypermsearch.search_solvers import first_index_search
from pypermsearch.searchinstance import SearchInstance
from pypermsearch.symmetrize_search import symmetrize_search
from pypermsearch.truncated_scan_solver import truncated_scan_solver

from pypermsearch.t.t_begin import t_begin
from pypermsearch.t.t_is import t_is
from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_raises import t_raises
from pypermsearch.t.t_end import t_end


def t_reduction_b(quiet=False):
    """Tests for C{reduction_b}, C{reduce_b}, C{symmetrize_search} and
    C{rebalance}, classical and quantum.
    """
    F = Fraction
    lemma_pairs = [(0, F(1, 2)), (F(1, 10), F(3, 10)), (F(1, 4), F(1, 4))]

    n_tests = 25 + len(lemma_pairs)

    t_begin(n_tests, quiet)

    t = 'reduction_b, baseline at n = 6 : '
    b = reduction_b(baseline_perm_solver(6))
    rep = exact_error_search(b, 3)
    t_is(rep.eps0, 0, None, t + 'no-instance error 0')
    t_is(rep.eps1, F(1, 2), None, t + 'yes error exactly 1/2')
    t_is(rep.eps_mu, bound_mu(0), None, t + 'mu error 1/4')
    t_ok(rep.query_max <= 6, t + 'at most 6 search queries')

    t = 'reduction_b, truncated scan at n = 4 : '
    a = truncated_scan_solver(4, 2)
    eps = exact_error_perm(a, 4).eps_mu
    t_is(eps, F(1, 4), None, t + 'solver error 1/4')
    rep = exact_error_search(reduction_b(a), 2)
    t_ok(rep.eps_mu <= bound_mu(eps) and rep.eps0 <= eps,
         t + 'mu error within (1 + 2 eps)/4, no-instance error within eps')
    t_is(rep.eps1, F(1, 2), None, t + 'yes error exactly 1/2')
    t_ok(rep.query_max <= 2, t + 'no more search queries than solver queries')

    t = 'reduce_b : '
    oracle = CountedOracle(SearchInstance(3))
    bits = [reduce_b(baseline_perm_solver(6), oracle, SeededStream(s))
            for s in range(10)]
    t_ok(bits == [0] * 10 and oracle.count <= 60,
         t + 'exact solver never errs on the no instance')
    t_raises(InstanceError, reduce_b, (baseline_perm_solver(6),
             CountedOracle(SearchInstance(4))), t + 'search domain is not n/2')
    a = truncated_scan_solver(6, 3)
    yes = SearchInstance(3, 2)
    t_ok(all(reduce_b(a, CountedOracle(yes), psopt=psoption(SEED=s)) ==
             reduce_b(a, CountedOracle(yes), SeededStream(s))
             for s in range(8)), t + 'default stream seeded from the config seed')
    t_raises(ErrorBudgetError, reduce_b, (baseline_perm_solver(6),
             CountedOracle(SearchInstance(3)), None, psoption(EPS_BOUND=0.5)),
             t + 'assumed bound 1/2')
    t_raises(InstanceError, reduction_b, (baseline_perm_solver(5),), t + 'odd n')

    t = 'quantum reduction_b : '
    a = probe_perm_solver(4, 2)
    b = reduction_b(a)
    t_ok(isinstance(b, MixedQuantumAlgorithm) and b.n == 2, t + 'mixed algorithm')
    f_oracle = OracleUnitary.search(SearchInstance(2, 1))
    reduce_b(a, f_oracle, SeededStream(2))
    t_is(f_oracle.count, 2, None, t + 'one solver query costs two search queries')
    rep_a = exact_error_perm(a, 4)
    rep = exact_error_search(b, 2)
    t_ok(rep.query_max == 2 * rep_a.query_max == 2, t + 'query factor 2')
    t_is([float(rep.eps0), float(rep.eps1)], [float(rep_a.eps_mu), 0.5], 9,
         t + 'errors (eps, 1/2) with eps = 1/4')

    t = 'symmetrize_search : '
    s = symmetrize_search(first_index_search(3))
    t_ok(all(instance_error(s, SearchInstance(3, j))[0] == F(2, 3)
             for j in (1, 2, 3)), t + 'every yes instance has error 2/3')
    t_is(instance_error(s, SearchInstance(3)), (0, 1, 1), None,
         t + 'no instance unchanged, one query')
    s = symmetrize_search(grover_circuit(4))
    err, q, _ = instance_error(s, SearchInstance(4, 2))
    t_ok(err < 1e-9 and q == 2, t + 'Grover is unchanged')

    t = 'rebalance : '
    b = reduction_b(baseline_perm_solver(6))
    r = rebalance(symmetrize_search(b), (0, F(1, 2)))
    t_is(exact_error_search(r, 3).worst_case, bound_worst(0), None,
         t + 'baseline at n = 6: worst-case error exactly 1/3')
    for eps0, eps1 in lemma_pairs:
        r = rebalance(symmetrize_search(noisy_search_solver(4, eps0, eps1)),
                      (eps0, eps1))
        t_is(exact_error_search(r, 4).worst_case, lemma_worst(eps0, eps1), None,
             t + 'worst-case error for (%s, %s)' % (eps0, eps1))
    r = rebalance(noisy_search_solver(2, F(1, 5), F(1, 5)), (F(1, 5), F(1, 5)))
    t_is(exact_error_search(r, 2).worst_case, F(1, 5), None,
         t + 'equal errors are left alone')
    b = reduction_b(probe_perm_solver(4, 2))
    r = rebalance(symmetrize_search(b), (F(1, 4), F(1, 2)))
    rep = exact_error_search(r, 2)
    t_is(rep.worst_case, float(lemma_worst(F(1, 4), F(1, 2))), 9,
         t + 'quantum B: worst-case error 2/5')
    t_ok(rep.query_max == 2, t + 'quantum B: query count unchanged')
    t_raises(ErrorBudgetError, rebalance, (b, (F(1, 2), F(1, 2))),
             t + 'eps0 + eps1 = 1')

    t_end()


if __name__ == '__main__':
    t_reduction_b(quiet=False)
