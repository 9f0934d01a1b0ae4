# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Forward reduction: deciding PERMUTATION with a search algorithm.
"""

from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.errors import InstanceError
from pypermsearch.forward_search_oracle import ForwardSearchOracle
from pypermsearch.idx_step import query
from pypermsearch.layout import value_width
from pypermsearch.psoption import psoption
from pypermsearch.quantum_algorithm import QuantumAlgorithm, \
    MixedQuantumAlgorithm
from pypermsearch.rand_stream import SeededStream
from pypermsearch.relay import relay
from pypermsearch.run_classical import run_classical
from pypermsearch.run_quantum import run_mixed


def forward_reduction(search_alg, n, compact=False, work='pwork'):
    """Returns the PERMUTATION_n algorithm, n even, that runs C{search_alg}
    on the search instance M{f(i) = 1} iff M{pi(i) = 1} and M{i} is even.

    With C{compact=True} the instance is on [n/2], M{f(j) = 1} iff
    M{pi(2j) = 1}. The search domain must be [n] (or [n/2]). Classically
    each M{f}-query costs one permutation query; in the quantum case it is
    the two-query L{ForwardSearchOracle}.
    """
    if n % 2:
        raise InstanceError('forward_reduction: n must be even, got %d' % n)
    m = n // 2 if compact else n
    if search_alg.n != m:
        raise InstanceError('forward_reduction: search domain %d, expected %d'
                            % (search_alg.n, m))
    name = 'fwd(%s)' % search_alg.name

    if isinstance(search_alg, ClassicalAlgorithm):
        def f_query(i):
            if compact:
                v = yield query(2 * i)
                return 1 if v == 1 else 0
            v = yield query(i)
            return 1 if v == 1 and i % 2 == 0 else 0

        def forward(n):
            out = yield from relay(search_alg.start(), f_query)
            return out

        return ClassicalAlgorithm(n, forward, name, search_alg.enumerable)

    if isinstance(search_alg, QuantumAlgorithm):
        def body(state, oracle):
            return search_alg.body(state, ForwardSearchOracle(oracle, n, work,
                                                              compact))

        return QuantumAlgorithm(n, search_alg.registers + [(work, value_width(n))],
                                body, search_alg.readout, name)

    def prepare(stream, oracle):
        return search_alg.prepare(stream, ForwardSearchOracle(oracle, n, work,
                                                              compact))

    return MixedQuantumAlgorithm(n, prepare, name)


def search_to_permutation(search_alg, p_oracle, n, compact=False, rng=None,
                          psopt=None):
    """Decides PERMUTATION_n for the permutation oracle C{p_oracle} with the
    search algorithm C{search_alg} and returns the output bit; yes iff the
    search succeeds.

    The constructed M{f} is a valid unique-search instance for every
    permutation, with a marked element iff M{pi^-1(1)} is even, so the error
    is the search algorithm's error on that instance.

    @see: L{forward_reduction}
    """
    psopt = psoption(psopt)
    if rng is None:
        rng = SeededStream(psopt['SEED'])
    alg = forward_reduction(search_alg, n, compact)
    if isinstance(alg, ClassicalAlgorithm):
        return run_classical(alg, p_oracle, rng).output
    outcome = run_mixed(alg, p_oracle, rng, psopt)
    return rng.weighted(outcome.output_distribution)
