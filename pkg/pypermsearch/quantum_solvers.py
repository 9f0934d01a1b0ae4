# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Quantum algorithms for PERMUTATION and search used as reduction inputs.
"""

from pypermsearch.errors import InstanceError
from pypermsearch.grover_search import grover_circuit
from pypermsearch.layout import nbits, value_width
from pypermsearch.quantum_algorithm import QuantumAlgorithm
from pypermsearch.search_to_permutation import forward_reduction
from pypermsearch.statevector import apply_register_op, basis_permutation


def grover_perm_solver(n, compact=False):
    """Returns the inversion solver for PERMUTATION_n, n even: Grover search
    over the forward search oracle, each use of which costs two queries to
    the permutation oracle, for M{2(k+1)} queries in all with
    M{k = grover_iteration_count(n)} (of M{n/2} when C{compact}).

    @see: L{forward_search_oracle}
    """
    if n % 2:
        raise InstanceError('grover_perm_solver: n must be even, got %d' % n)
    alg = forward_reduction(grover_circuit(n // 2 if compact else n), n,
                            compact)
    alg.name = 'grover_perm%s_%d' % ('_compact' if compact else '', n)
    return alg


def probe_perm_solver(n, i=2):
    """Returns the one-query algorithm for PERMUTATION_n that queries the
    permutation at C{i} and answers yes iff M{pi(i) = 1}.
    """
    if not 1 <= i <= n:
        raise InstanceError('probe_perm_solver: probe %d outside 1..%d' % (i, n))

    def body(state, oracle):
        d = state.layout.size('index')
        state = apply_register_op(state, 'index', basis_permutation(d, 0, i - 1))
        return oracle.apply(state, 'index', 'answer')

    return QuantumAlgorithm(n, [('index', nbits(n)), ('answer', value_width(n))],
                            body, ('answer', lambda v: v == 0),
                            name='probe_%d' % i)


def constant_circuit(n, bit=0):
    """Returns the query-free quantum algorithm on [n] that outputs C{bit}."""
    def body(state, oracle):
        if bit:
            return apply_register_op(state, 'answer', basis_permutation(2, 0, 1))
        return state

    return QuantumAlgorithm(n, [('index', nbits(n)), ('answer', 1)], body,
                            name='constant_%d' % bit)
