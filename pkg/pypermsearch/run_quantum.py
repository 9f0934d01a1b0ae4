# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Runs quantum query algorithms by exact statevector simulation.
"""

from sys import stderr
from warnings import warn

from pypermsearch.enum_randomness import enum_randomness
from pypermsearch.errors import CapacityError, InstanceError
from pypermsearch.layout import Layout
from pypermsearch.psoption import psoption
from pypermsearch.quantum_algorithm import QuantumAlgorithm, QuantumOutcome
from pypermsearch.rand_stream import SeededStream
from pypermsearch.statevector import StateVector


def run_quantum(alg, oracle, mode='exact', rng=None, shots=1, psopt=None):
    """Simulates C{alg} against C{oracle} and returns a L{QuantumOutcome}.

    The workspace is the algorithm's registers followed by the oracle's
    ancillas, all starting in |0>. In C{'exact'} mode the output distribution
    is read off the final statevector; in C{'shots'} mode C{shots} output bits
    are also drawn from the stream C{rng} (a L{SeededStream} on option SEED
    if omitted) and the reported distribution is their empirical one.

    Raises L{CapacityError} when the workspace exceeds option QUBIT_CAP.
    """
    psopt = psoption(psopt)
    if oracle.n != alg.n:
        raise InstanceError('run_quantum: oracle domain %d does not match n = %d '
                            'of %s' % (oracle.n, alg.n, alg.name))
    layout = Layout(alg.registers).extend(oracle.ancillas)
    if layout.nqubits > psopt['QUBIT_CAP']:
        raise CapacityError('run_quantum: %d qubits exceed the cap of %d' %
                            (layout.nqubits, psopt['QUBIT_CAP']))

    before = oracle.count
    state = alg.body(StateVector.zero(layout), oracle)
    queries = oracle.count - before

    nrm = state.norm()
    if abs(nrm - 1) > psopt['TOL']:
        warn('run_quantum: %s lost normalization, norm %.15g' % (alg.name, nrm))

    register, predicate = alg.readout
    probs = state.probabilities(register)
    p1 = float(sum(probs[v] for v in range(len(probs)) if predicate(v)))
    p1 = min(max(p1, 0.0), 1.0)

    if psopt['VERBOSE'] > 1:
        stderr.write('run_quantum: %s on %d qubits, %d queries, p1 = %.12g\n'
                     % (alg.name, layout.nqubits, queries, p1))

    if mode == 'exact':
        return QuantumOutcome((1 - p1, p1), queries)
    elif mode == 'shots':
        if shots < 1:
            raise ValueError('run_quantum: shots must be positive, got %d' % shots)
        if rng is None:
            rng = SeededStream(psopt['SEED'])
        samples = [rng.weighted((1 - p1, p1)) if 0 < p1 < 1 else int(p1 == 1)
                   for _ in range(shots)]
        q1 = sum(samples) / float(shots)
        return QuantumOutcome((1 - q1, q1), queries, 'shots', samples)
    else:
        raise ValueError('run_quantum: unknown mode %r' % (mode,))


def run_mixed(alg, oracle, rng=None, psopt=None):
    """Runs a L{MixedQuantumAlgorithm} (or a plain L{QuantumAlgorithm})
    against C{oracle}.

    Without C{rng} every classical randomness path is enumerated and the
    result is the exact output distribution, with C{query_count} the largest
    number of queries on any path. With a stream C{rng} one path is drawn
    and the outcome is its exact output distribution given that path.
    """
    psopt = psoption(psopt)
    if isinstance(alg, QuantumAlgorithm):
        return run_quantum(alg, oracle, psopt=psopt)
    if oracle.n != alg.n:
        raise InstanceError('run_mixed: oracle domain %d does not match n = %d '
                            'of %s' % (oracle.n, alg.n, alg.name))

    def run_path(choice, stream=None):
        inner, inner_oracle, flip = choice
        before = oracle.count
        out = run_mixed(inner, inner_oracle, stream, psopt)
        p1 = out.p1
        return (1 - p1 if flip else p1), oracle.count - before

    if rng is not None:
        p1, queries = run_path(alg.prepare(rng, oracle), rng)
        return QuantumOutcome((1 - p1, p1), queries)

    paths = enum_randomness(lambda s: alg.prepare(s, oracle),
                            psopt['MAX_PATHS'])
    p1, queries = 0.0, 0
    for prob, choice in paths:
        q1, q = run_path(choice)
        p1 += float(prob) * q1
        queries = max(queries, q)
    p1 = min(max(p1, 0.0), 1.0)
    return QuantumOutcome((1 - p1, p1), queries)
