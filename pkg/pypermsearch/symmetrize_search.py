# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Random relabeling of a search algorithm's queries.
"""

from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.idx_step import sample
from pypermsearch.oracle_unitary import RelabeledOracle
from pypermsearch.quantum_algorithm import MixedQuantumAlgorithm
from pypermsearch.relay import ask, relay
from pypermsearch.sample_uniform_permutation import sample_uniform_permutation


def symmetrize_search(b):
    """Returns B_sym: draw M{sigma} uniformly on [n], then run C{b} with
    every query M{i} sent to M{sigma(i)}.

    B_sym makes the same number of queries as C{b}. Its error on each yes
    instance equals C{b}'s average error over the uniform yes distribution,
    and on the no instance it equals C{b}'s error there.
    """
    if isinstance(b, ClassicalAlgorithm):
        def b_sym(n):
            sigma = yield sample(lambda s: sample_uniform_permutation(n, s))
            out = yield from relay(b.start(), lambda i: ask(sigma.value(i)))
            return out

        return ClassicalAlgorithm(b.n, b_sym, 'sym(%s)' % b.name, b.enumerable)

    def prepare(stream, oracle):
        sigma = sample_uniform_permutation(b.n, stream)
        return b, RelabeledOracle(oracle, sigma), False

    return MixedQuantumAlgorithm(b.n, prepare, 'sym(%s)' % b.name)
