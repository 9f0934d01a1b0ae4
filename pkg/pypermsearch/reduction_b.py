# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Reduction from UNIQUE SEARCH on [n/2] to PERMUTATION on [n].
"""

from sys import stderr

from pypermsearch.build_h import h_route
from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.clean_h_query import CleanHOracle
from pypermsearch.error_pair import ReductionConfig
from pypermsearch.errors import InstanceError, QueryError
from pypermsearch.idx_class import P0, P1
from pypermsearch.idx_step import query, rand, sample
from pypermsearch.psoption import psoption
from pypermsearch.quantum_algorithm import MixedQuantumAlgorithm
from pypermsearch.rand_stream import SeededStream
from pypermsearch.relay import relay
from pypermsearch.run_classical import run_classical
from pypermsearch.run_quantum import run_mixed
from pypermsearch.sample_uniform_in_class import sample_uniform_in_class


def _h_query(p, hr):
    """Generator function answering an M{h_{pi,f}} query with at most one
    query to M{f}.
    """
    def h_query(i):
        if not 1 <= i <= p.n:
            raise QueryError('reduction_b: query %r outside 1..%d' % (i, p.n))
        j = int(hr[i - 1])
        if j:
            v = yield query(j)
            if v:
                return 1
        return p.value(i)

    return h_query


def reduction_b(a):
    """Returns algorithm B for UNIQUE SEARCH on [n/2], built from an
    algorithm C{a} for PERMUTATION on [n], n even.

    B flips a fair coin, draws M{pi} uniformly from P0 (coin 0) or P1 (coin
    1), runs C{a} on M{h_{pi,f}} and outputs its answer, negated on coin 1.
    For a classical C{a} the result is a L{ClassicalAlgorithm} and each
    M{h}-query costs at most one M{f}-query; for a quantum C{a} it is a
    L{MixedQuantumAlgorithm} whose M{h}-queries are L{clean_h_query}
    simulations costing two M{f}-queries each.

    If C{a} has error at most M{eps} on uniformly random permutations, B
    errs with probability M{(eps0 + eps1)/2 <= eps} on the no instance and
    exactly 1/2 on the uniform yes distribution.
    """
    n = a.n
    if n < 2 or n % 2:
        raise InstanceError('reduction_b: n must be even, got %d' % n)

    if isinstance(a, ClassicalAlgorithm):
        def b(m):
            coin = yield rand(2)
            klass = P1 if coin else P0
            p = yield sample(lambda s: sample_uniform_in_class(n, klass, s))
            out = yield from relay(a.start(), _h_query(p, h_route(p)))
            return 1 - out if coin else out

        return ClassicalAlgorithm(n // 2, b, 'B(%s)' % a.name, a.enumerable)

    def prepare(stream, oracle):
        coin = stream.randint(2)
        p = sample_uniform_in_class(n, P1 if coin else P0, stream)
        return a, CleanHOracle(p, oracle), coin == 1

    return MixedQuantumAlgorithm(n // 2, prepare, 'B(%s)' % a.name)


def reduce_b(a, f_oracle, rng=None, psopt=None):
    """Runs B once against the search oracle C{f_oracle} and returns its
    output bit.

    C{f_oracle} is a L{CountedOracle} for a classical C{a} and an
    L{OracleUnitary} for a quantum one; its tally records the search
    queries made. C{rng} is the random stream, by default a L{SeededStream}
    on the seed of the L{ReductionConfig} built from C{a.n} and the options
    EPS_BOUND and SEED. Raises L{InstanceError} for odd n and
    L{ErrorBudgetError} for an assumed bound outside [0, 1/2).

    @see: L{reduction_b}
    """
    psopt = psoption(psopt)
    cfg = ReductionConfig(a.n, psopt['EPS_BOUND'], psopt['SEED'])
    if rng is None:
        rng = SeededStream(cfg.seed)
    b = reduction_b(a)
    if f_oracle.n != b.n:
        raise InstanceError('reduce_b: search domain %d does not match n/2 = %d'
                            % (f_oracle.n, b.n))

    if isinstance(b, ClassicalAlgorithm):
        bit = run_classical(b, f_oracle, rng).output
    else:
        outcome = run_mixed(b, f_oracle, rng, psopt)
        bit = rng.weighted(outcome.output_distribution)

    if psopt['VERBOSE'] > 1:
        stderr.write('reduce_b: %s output %d after %d search queries\n'
                     % (b.name, bit, f_oracle.count))
    return bit
