# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests for Grover search, the quantum runner and the quantum
PERMUTATION solvers.
"""

from pypermsearch.errors import CapacityError, InstanceError
from pypermsearch.grover_iteration_count import grover_iteration_count, \
    grover_success_probability
from pypermsearch.grover_search import grover_search, grover_circuit
from pypermsearch.idx_class import P1
from pypermsearch.instance_errors import expected_answer
from pypermsearch.oracle_unitary import OracleUnitary
from pypermsearch.parity_class import parity_class
from pypermsearch.permutation import Permutation, identity
from pypermsearch.psoption import psoption
from pypermsearch.quantum_solvers import grover_perm_solver, \
    probe_perm_solver, constant_circuit
from pypermsearch.rand_stream import SeededStream
from pypermsearch.run_quantum import run_quantum, run_mixed
from pypermsearch.sample_uniform_permutation import sample_uniform_permutation
from pypermsearch.searchinstance import SearchInstance

from pypermsearch.t.t_begin import t_begin
from pypermsearch.t.t_is import t_is
from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_raises import t_raises
from pypermsearch.t.t_end import t_end


def t_grover(quiet=False):
    """Tests for C{grover_iteration_count}, C{grover_search},
    C{run_quantum} and the inversion solver.
    """
    n_tests = 22

    t_begin(n_tests, quiet)

    t = 'grover_iteration_count : '
    t_is([grover_iteration_count(n) for n in (1, 4, 8, 16, 32, 64, 100)],
         [0, 1, 2, 3, 4, 6, 7], None, t + 'k for n = 1, 4, ..., 100')
    t_raises(ValueError, grover_iteration_count, (0,), t + 'n = 0')

    t = 'grover_search : '
    out = grover_search(OracleUnitary.search(SearchInstance(4, 3)), 4)
    t_is(out.p1, 1, 9, t + 'n = 4 succeeds with certainty after k = 1')
    t_is(out.query_count, 2, None, t + 'n = 4 makes k + 1 queries')
    out = grover_search(OracleUnitary.search(SearchInstance(8, 5)), 8)
    t_is(out.p1, 0.9453125, 9, t + 'n = 8 success sin^2(5 theta)')
    out = grover_search(OracleUnitary.search(SearchInstance(1, 1)), 1)
    t_ok(abs(out.p1 - 1) < 1e-12 and out.query_count == 1,
         t + 'n = 1, verification only')

    worst, counts_ok, no_ok = 0.0, True, True
    for n in (2, 4, 8, 16):
        k = grover_iteration_count(n)
        closed = grover_success_probability(n, k)
        for marked in sorted(set([1, (n + 1) // 2, n])):
            f_oracle = OracleUnitary.search(SearchInstance(n, marked))
            out = grover_search(f_oracle, n)
            worst = max(worst, abs(out.p1 - closed))
            counts_ok = counts_ok and out.query_count == k + 1 and \
                f_oracle.count == k + 1
        out = grover_search(OracleUnitary.search(SearchInstance(n)), n)
        no_ok = no_ok and out.p1 < 1e-12 and out.query_count == k + 1
    t_ok(worst < 1e-9, t + 'matches the closed form for n = 2, 4, 8, 16')
    t_ok(counts_ok, t + 'k + 1 queries')
    t_ok(no_ok, t + 'unmarked instance answers 0 with probability 1')

    t = 'run_quantum : '
    out = run_quantum(constant_circuit(4, 0), OracleUnitary.search(SearchInstance(4)))
    t_ok(out.p1 == 0 and out.query_count == 0, t + 'empty circuit outputs 0')
    out = run_quantum(constant_circuit(4, 1), OracleUnitary.search(SearchInstance(4)))
    t_ok(out.p1 == 1 and out.query_count == 0, t + 'constant 1')
    f_oracle = OracleUnitary.search(SearchInstance(8, 2))
    s1 = run_quantum(grover_circuit(8), f_oracle, 'shots', SeededStream(4), 64)
    s2 = run_quantum(grover_circuit(8), f_oracle, 'shots', SeededStream(4), 64)
    t_ok(s1.samples == s2.samples and len(s1.samples) == 64 and
         s1.mode == 'shots', t + 'shots mode is seeded')
    t_raises(CapacityError, run_quantum,
             (grover_circuit(8), f_oracle, 'exact', None, 1,
              psoption(QUBIT_CAP=3)), t + 'qubit cap')
    t_raises(InstanceError, run_quantum,
             (grover_circuit(4), f_oracle), t + 'oracle domain mismatch')
    t_raises(ValueError, run_quantum, (grover_circuit(8), f_oracle, 'dense'),
             t + 'unknown mode')
    out = run_mixed(grover_circuit(8), OracleUnitary.search(SearchInstance(8, 2)))
    t_is(out.p1, grover_success_probability(8), 9, t + 'run_mixed of a plain circuit')

    t = 'probe_perm_solver : '
    o = OracleUnitary.function(Permutation([2, 1, 3, 4]))
    out = run_quantum(probe_perm_solver(4, 2), o)
    t_ok(abs(out.p1 - 1) < 1e-12 and out.query_count == 1, t + 'pi(2) = 1')
    out = run_quantum(probe_perm_solver(4, 2), OracleUnitary.function(identity(4)))
    t_ok(out.p1 < 1e-12, t + 'pi(2) != 1')

    t = 'grover_perm_solver : '
    k = grover_iteration_count(8)
    closed = grover_success_probability(8)
    rng = SeededStream(8)
    worst, counts_ok = 0.0, True
    alg = grover_perm_solver(8)
    for _ in range(100):
        p = sample_uniform_permutation(8, rng)
        out = run_quantum(alg, OracleUnitary.function(p))
        expected = 1 - closed if parity_class(p) == P1 else 0.0
        worst = max(worst, abs(out.error(expected_answer(p)) - expected))
        counts_ok = counts_ok and out.query_count == 2 * (k + 1)
    t_ok(worst < 1e-9, t + 'error equals Grover error, 100 permutations of [8]')
    t_ok(counts_ok, t + '2(k + 1) permutation queries')

    alg = grover_perm_solver(8, compact=True)
    ok = True
    for p in (Permutation([3, 1, 2, 4, 5, 6, 7, 8]), identity(8),
              Permutation([8, 7, 6, 5, 4, 3, 2, 1])):
        out = run_quantum(alg, OracleUnitary.function(p))
        ok = ok and out.error(expected_answer(p)) < 1e-9 and \
            out.query_count == 2 * (grover_iteration_count(4) + 1)
    t_ok(ok, t + 'compact domain: exact with 2(k(4) + 1) queries')
    t_raises(InstanceError, grover_perm_solver, (5,), t + 'odd n')

    t_end()


if __name__ == '__main__':
    t_grover(quiet=False)
