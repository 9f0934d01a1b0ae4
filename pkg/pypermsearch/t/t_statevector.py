# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests for layouts, statevectors and the XOR oracle action.
"""

from numpy import eye, array

from pypermsearch.apply_function_oracle import apply_function_oracle, \
    apply_classical_xor, routed_values
from pypermsearch.errors import LayoutError
from pypermsearch.layout import Layout, nbits, value_width
from pypermsearch.oracle_unitary import OracleUnitary
from pypermsearch.permutation import Permutation
from pypermsearch.searchinstance import SearchInstance
from pypermsearch.statevector import StateVector, H, apply_register_op, \
    uniform_prep, diffusion_matrix, basis_permutation

from pypermsearch.t.t_begin import t_begin
from pypermsearch.t.t_is import t_is
from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_raises import t_raises
from pypermsearch.t.t_end import t_end


def t_statevector(quiet=False):
    """Tests for C{Layout}, C{StateVector}, register operators and
    C{apply_function_oracle}.
    """
    n_tests = 29

    t_begin(n_tests, quiet)

    t = 'layout : '
    t_is([nbits(n) for n in (1, 2, 4, 5, 8, 9)], [0, 1, 2, 3, 3, 4], None,
         t + 'nbits')
    t_is([value_width(n) for n in (1, 2, 6)], [1, 1, 3], None, t + 'value_width')
    layout = Layout([('index', 2), ('answer', 1), ('hanc', 1)])
    t_ok(layout.shape == (4, 2, 2) and layout.nqubits == 4 and layout.dim == 16,
         t + 'shape')
    ext = layout.extend([('hanc', 1), ('pwork', 3)])
    t_ok(ext.names == ['index', 'answer', 'hanc', 'pwork'] and ext.nqubits == 7,
         t + 'extend shares a register of equal width')
    t_raises(LayoutError, layout.extend, ([('hanc', 2)],), t + 'width clash')
    t_raises(LayoutError, Layout, ([('a', 1), ('a', 1)],), t + 'duplicate name')
    t_raises(LayoutError, layout.axis, ('missing',), t + 'unknown register')

    t = 'StateVector : '
    s = StateVector.basis(layout, index=3, hanc=1)
    t_is(s.norm(), 1, 12, t + 'basis state norm')
    t_is(s.probabilities('index'), [0, 0, 0, 1], 12, t + 'marginal')
    t_ok(StateVector.zero(layout).vector[0] == 1, t + 'zero state')
    t_raises(LayoutError, lambda: StateVector.basis(layout, index=4), (),
             t + 'value too wide for its register')
    t_raises(LayoutError, StateVector, (layout, [1, 0]), t + 'wrong size')

    t = 'register operators : '
    s = apply_register_op(StateVector.zero(layout), 'answer', H)
    t_is(s.probabilities('answer'), [0.5, 0.5], 12, t + 'Hadamard')
    t_raises(LayoutError, apply_register_op, (s, 'answer', eye(4)),
             t + 'operator dimension')
    u = uniform_prep(3, 4)
    t_is(u.dot(u.conj().T), eye(4), 12, t + 'uniform_prep is unitary')
    s = apply_register_op(StateVector.zero(layout), 'index', u)
    t_is(s.probabilities('index'), [1. / 3, 1. / 3, 1. / 3, 0], 12,
         t + 'uniform over the first 3 values')
    t_is(uniform_prep(1, 2), eye(2), 12, t + 'n = 1 is the identity')
    d = diffusion_matrix(3, 4)
    t_ok(abs(d.dot(d.conj().T) - eye(4)).max() < 1e-12 and d[3, 3] == 1 and
         d[0, 3] == 0, t + 'diffusion is unitary and fixes the padding')
    t_is(basis_permutation(3, 0, 2), array([[0, 0, 1], [0, 1, 0], [1, 0, 0]]), 12,
         t + 'basis swap')

    t = 'apply_function_oracle : '
    layout = Layout([('index', 2), ('answer', 1)])
    s = apply_register_op(StateVector.zero(layout), 'index', uniform_prep(4, 4))
    s = apply_register_op(s, 'answer', H)
    t_is(apply_function_oracle(s, [0, 0, 0, 0]).distance(s), 0, 12,
         t + 'all-zero g is the identity')
    f = SearchInstance(4, 3).table
    t_is(apply_function_oracle(apply_function_oracle(s, f), f).distance(s), 0, 12,
         t + 'XOR oracle is an involution')
    out = apply_function_oracle(StateVector.basis(layout, index=2), f)
    t_is(out.distance(StateVector.basis(layout, index=2, answer=1)), 0, 12,
         t + '|3>|0> -> |3>|1> for f marked at 3')
    out = apply_function_oracle(StateVector.basis(layout, index=3), [1, 1, 1])
    t_is(out.distance(StateVector.basis(layout, index=3)), 0, 12,
         t + 'padding values untouched')
    out = apply_function_oracle(StateVector.basis(layout, index=1), [1, 1, 1, 1],
                                route=[0, -1, 2, 3])
    t_is(out.distance(StateVector.basis(layout, index=1)), 0, 12,
         t + 'negative route is the identity')
    t_is(list(routed_values([5, 6, 7], [2, -1], 4)), [7, 0, 0, 0], None,
         t + 'routed_values')
    t_raises(LayoutError, apply_function_oracle,
             (StateVector.zero(layout), [2, 0, 0, 0]), t + 'value wider than target')

    t = 'long gate sequences : '
    layout = Layout([('index', 4), ('answer', 1)])
    s = StateVector.basis(layout, answer=1)
    s = apply_register_op(s, 'index', uniform_prep(16, 16))
    s = apply_register_op(s, 'answer', H)
    f, d = SearchInstance(16, 11).table, diffusion_matrix(16, 16)
    for _ in range(5000):
        s = apply_register_op(apply_function_oracle(s, f), 'index', d)
    t_ok(abs(s.norm() - 1) < 1e-9,
         t + '10^4 oracle and diffusion steps at n = 16 keep the norm')

    t = 'apply_classical_xor : '
    layout = Layout([('index', 1), ('work', 1), ('answer', 2)])
    s = StateVector.basis(layout, index=1, work=1)
    out = apply_classical_xor(s, 'index', 'work', 'answer', [[0, 0], [0, 3]])
    t_is(out.distance(StateVector.basis(layout, index=1, work=1, answer=3)), 0,
         12, t + 'controlled write')

    t = 'OracleUnitary : '
    o = OracleUnitary.function(Permutation([2, 1, 3, 4]))
    layout = Layout([('index', 2), ('answer', 2)])
    out = o.apply(StateVector.basis(layout, index=0))
    t_ok(o.count == 1 and out.probabilities('answer')[1] == 1,
         t + 'pi(1) = 2 encodes as 1, one query tallied')

    t_end()


if __name__ == '__main__':
    t_statevector(quiet=False)
