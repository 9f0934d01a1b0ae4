# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Exact per-instance error of classical and quantum algorithms.
"""

from fractions import Fraction

from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.counted_oracle import CountedOracle
from pypermsearch.enum_randomness import enum_randomness
from pypermsearch.errors import EnumerationError, InstanceError
from pypermsearch.idx_class import P1
from pypermsearch.oracle_unitary import OracleUnitary
from pypermsearch.parity_class import parity_class
from pypermsearch.permutation import Permutation
from pypermsearch.psoption import psoption
from pypermsearch.run_classical import run_classical
from pypermsearch.run_quantum import run_mixed
from pypermsearch.searchinstance import SearchInstance


def expected_answer(instance):
    """Correct output bit on a search instance or a permutation."""
    if isinstance(instance, SearchInstance):
        return instance.answer
    if isinstance(instance, Permutation):
        return 1 if parity_class(instance) == P1 else 0
    raise InstanceError('expected_answer: %r is neither a search instance nor '
                        'a permutation' % (instance,))


def quantum_oracle(instance):
    """XOR oracle of an instance: one answer qubit for a search instance,
    M{ceil(log2 n)} for a permutation.
    """
    if isinstance(instance, SearchInstance):
        return OracleUnitary.search(instance)
    return OracleUnitary.function(instance)


def instance_error(alg, instance, psopt=None):
    """Returns C{(error, query_max, query_mean)} of C{alg} on C{instance}.

    Classical algorithms are run on every randomness path (the error is an
    exact L{Fraction}); quantum and mixed algorithms are simulated exactly,
    with the classical randomness enumerated, and report the largest query
    count as both maximum and mean.

    Raises L{EnumerationError} for a classical algorithm without a finite
    randomness space.
    """
    psopt = psoption(psopt)
    ans = expected_answer(instance)
    if instance.n != alg.n:
        raise InstanceError('instance_error: instance on [%d] for %s on [%d]'
                            % (instance.n, alg.name, alg.n))

    if not isinstance(alg, ClassicalAlgorithm):
        outcome = run_mixed(alg, quantum_oracle(instance), psopt=psopt)
        return outcome.error(ans), outcome.query_count, outcome.query_count

    if not alg.enumerable:
        raise EnumerationError('instance_error: %s declares no finite randomness '
                               'space, use mc mode' % alg.name)

    def run(stream):
        oracle = CountedOracle(instance)
        return run_classical(alg, oracle, stream).output, oracle.count

    paths = enum_randomness(run, psopt['MAX_PATHS'])
    err = sum((prob for prob, (out, _) in paths if out != ans), Fraction(0))
    qmax = max(q for _, (_, q) in paths)
    qmean = sum((prob * q for prob, (_, q) in paths), Fraction(0))
    return err, qmax, qmean


def instance_errors(alg, instances, psopt=None):
    """Returns the list of C{(instance, error, query_max, query_mean)} for
    every instance in C{instances}.
    """
    return [(h,) + instance_error(alg, h, psopt) for h in instances]
