# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Rebalancing of one-sided errors into a worst-case error below 1/2.
"""

from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.error_bounds import rebalance_probability
from pypermsearch.error_pair import ErrorPair
from pypermsearch.errors import ErrorBudgetError
from pypermsearch.idx_step import draw
from pypermsearch.quantum_algorithm import MixedQuantumAlgorithm
from pypermsearch.quantum_solvers import constant_circuit
from pypermsearch.relay import ask, relay


def rebalance(b_sym, errs):
    """Returns the algorithm that with probability
    M{p = |eps1 - eps0| / (1 + |eps1 - eps0|)} outputs the constant bit of
    the weaker side (1 if C{eps1 > eps0}, else 0) and otherwise runs
    C{b_sym}.

    C{errs} is an L{ErrorPair} (or a pair) of worst-case errors of C{b_sym}
    on the no and yes sides, with M{eps0 + eps1 < 1}. The result has
    worst-case error M{max(eps0, eps1) / (1 + |eps0 - eps1|)}, below 1/2.
    Rational errors keep the coin weights, and hence exact enumeration,
    rational.

    @see: L{error_bounds.lemma_worst}
    """
    if not isinstance(errs, ErrorPair):
        errs = ErrorPair(*errs)
    if not errs.can_rebalance():
        raise ErrorBudgetError('rebalance: eps0 + eps1 = %s is not below 1'
                               % (errs.eps0 + errs.eps1))

    p = rebalance_probability(errs.eps0, errs.eps1)
    bit = 1 if errs.eps1 > errs.eps0 else 0
    name = 'rebal(%s)' % b_sym.name

    if isinstance(b_sym, ClassicalAlgorithm):
        def rebalanced(n):
            c = yield draw([1 - p, p])
            if c:
                return bit
            out = yield from relay(b_sym.start(), ask)
            return out

        return ClassicalAlgorithm(b_sym.n, rebalanced, name, b_sym.enumerable)

    constant = constant_circuit(b_sym.n, bit)

    def prepare(stream, oracle):
        c = stream.weighted([1 - p, p])
        return (constant if c else b_sym), oracle, False

    return MixedQuantumAlgorithm(b_sym.n, prepare, name)
