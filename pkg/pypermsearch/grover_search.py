# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Grover search with a final verification query.
"""

from pypermsearch.grover_iteration_count import grover_iteration_count
from pypermsearch.layout import nbits
from pypermsearch.quantum_algorithm import QuantumAlgorithm
from pypermsearch.run_quantum import run_quantum
from pypermsearch.statevector import H, X, apply_register_op, \
    diffusion_matrix, uniform_prep


def grover_body(n, k):
    """Returns the body of C{k} Grover iterations over the first C{n} values
    of the C{'index'} register, followed by the verification query.
    """
    def body(state, oracle):
        d = state.layout.size('index')
        state = apply_register_op(state, 'index', uniform_prep(n, d))
        state = apply_register_op(state, 'answer', H.dot(X))    ## |->

        diffusion = diffusion_matrix(n, d)
        for _ in range(k):
            state = oracle.apply(state, 'index', 'answer')
            state = apply_register_op(state, 'index', diffusion)

        ## answer back to |0>, then check the candidate
        state = apply_register_op(state, 'answer', X.dot(H))
        return oracle.apply(state, 'index', 'answer')

    return body


def grover_circuit(n, k=None):
    """Returns Grover search on [n] as a L{QuantumAlgorithm} deciding whether
    the search oracle has a marked element.

    The phase oracle is the XOR oracle with the answer qubit in M{|->}; the
    diffusion acts on the M{n} valid indices only. After C{k} iterations
    (default L{grover_iteration_count}) the answer qubit is returned to |0>
    and the oracle is queried once more, so the output bit is M{f} at the
    measured index and the query count is M{k + 1}.
    """
    if n < 1:
        raise ValueError('grover_circuit: n must be positive, got %d' % n)
    if k is None:
        k = grover_iteration_count(n)
    return QuantumAlgorithm(n, [('index', nbits(n)), ('answer', 1)],
                            grover_body(n, k), name='grover_%d' % n)


def grover_search(f_oracle, n, psopt=None):
    """Runs Grover search on the search oracle C{f_oracle} over [n] and
    returns the exact L{QuantumOutcome}.

    On a marked instance the success probability is M{sin^2((2k+1) theta)}
    with M{sin theta = 1/sqrt(n)}; on the unmarked instance the output is 0
    with probability 1.

    Example::
        grover_search(OracleUnitary.search(SearchInstance(4, 3)), 4).p1
        # 1.0
    """
    return run_quantum(grover_circuit(n), f_oracle, psopt=psopt)
