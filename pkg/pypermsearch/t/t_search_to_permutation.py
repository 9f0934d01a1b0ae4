# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests for the forward reduction from PERMUTATION to unique search.
"""

from pypermsearch.counted_oracle import CountedOracle
from pypermsearch.errors import InstanceError
from pypermsearch.exact_error_perm import exact_error_perm
from pypermsearch.grover_search import grover_circuit
from pypermsearch.instance_errors import instance_error
from pypermsearch.oracle_unitary import OracleUnitary
from pypermsearch.permutation import Permutation, identity
from pypermsearch.quantum_algorithm import MixedQuantumAlgorithm
from pypermsearch.rand_stream import SeededStream
from pypermsearch.run_classical import run_classical
from pypermsearch.search_solvers import scan_search_solver, first_index_search
from pypermsearch.search_to_permutation import forward_reduction, \
    search_to_permutation
from pypermsearch.symmetrize_search import symmetrize_search

from pypermsearch.t.t_begin import t_begin
from pypermsearch.t.t_is import t_is
from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_raises import t_raises
from pypermsearch.t.t_end import t_end


def t_search_to_permutation(quiet=False):
    """Tests for C{forward_reduction} and C{search_to_permutation}.
    """
    n_tests = 13

    t_begin(n_tests, quiet)

    t = 'search_to_permutation : '
    scan = scan_search_solver(4)
    oracle = CountedOracle(Permutation([2, 1, 3, 4]))
    t_is(search_to_permutation(scan, oracle, 4), 1, None,
         t + 'pi^-1(1) = 2 answers 1')
    t_is(oracle.count, 2, None, t + 'one permutation query per search query')
    t_is(search_to_permutation(scan, CountedOracle(identity(4)), 4), 0, None,
         t + 'pi^-1(1) = 1 answers 0')

    t = 'forward_reduction, classical : '
    rep = exact_error_perm(forward_reduction(scan, 4), 4)
    t_ok(rep.worst_case == 0 and rep.query_max == 4,
         t + 'exact search gives an exact solver on all 24 permutations')
    rep = exact_error_perm(forward_reduction(scan_search_solver(2), 4, True), 4)
    t_ok(rep.worst_case == 0 and rep.query_max == 2, t + 'compact domain')
    tr = run_classical(forward_reduction(scan_search_solver(2), 4, True),
                       CountedOracle(identity(4)))
    t_is([i for i, _ in tr.queries], [2, 4], None,
         t + 'compact domain queries even positions only')
    rep = exact_error_perm(forward_reduction(first_index_search(4), 4), 4)
    t_ok(rep.eps0 == 0 and rep.eps1 == 1,
         t + 'search error carries over: f(1) is never marked')
    t_raises(InstanceError, forward_reduction, (scan_search_solver(3), 4),
             t + 'search domain mismatch')
    t_raises(InstanceError, forward_reduction, (scan_search_solver(5), 5),
             t + 'odd n')

    t = 'forward_reduction, quantum : '
    p_oracle = OracleUnitary.function(Permutation([2, 1, 3, 4]))
    bit = search_to_permutation(grover_circuit(4), p_oracle, 4,
                                rng=SeededStream(0))
    t_ok(bit == 1 and p_oracle.count == 4,
         t + 'Grover on [4]: answers 1 with 2(k + 1) = 4 queries')
    bit = search_to_permutation(grover_circuit(4),
                                OracleUnitary.function(identity(4)), 4,
                                rng=SeededStream(0))
    t_is(bit, 0, None, t + 'unmarked instance answers 0')
    p_oracle = OracleUnitary.function(Permutation([2, 3, 4, 5, 6, 7, 8, 1]))
    bit = search_to_permutation(grover_circuit(4), p_oracle, 8, True,
                                SeededStream(0))
    t_ok(bit == 1 and p_oracle.count == 4,
         t + 'compact domain on [8], pi^-1(1) = 8')

    alg = forward_reduction(symmetrize_search(grover_circuit(4)), 4)
    err, q, _ = instance_error(alg, Permutation([3, 1, 2, 4]))
    t_ok(isinstance(alg, MixedQuantumAlgorithm) and err < 1e-9 and q == 4,
         t + 'randomized search algorithm, exact with 4 queries')

    t_end()


if __name__ == '__main__':
    t_search_to_permutation(quiet=False)
