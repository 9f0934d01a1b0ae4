# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Dense operator of an oracle application.
"""

from itertools import product

from numpy import column_stack, zeros

from pypermsearch.statevector import StateVector


def oracle_matrix(oracle, layout, control='index', target='answer', fixed=None):
    """Returns C{(U, cols)}: the columns of the operator applied by one
    C{oracle.apply(state, control, target)} on C{layout}, restricted to the
    input basis states with the registers in C{fixed} (a dict name -> value)
    held at the given values, and the flat indices C{cols} of those basis
    states.

    Each column costs one oracle application, so the oracle's tally grows by
    C{len(cols)}.

    Example::
        U, cols = oracle_matrix(CleanHOracle(p, f_oracle), layout,
                                fixed={'hanc': 0})
    """
    fixed = fixed or {}
    ranges = [[fixed[name]] if name in fixed else range(d)
              for name, d in zip(layout.names, layout.shape)]

    cols, columns = [], []
    for idx in product(*ranges):
        state = StateVector.basis(layout, **dict(zip(layout.names, idx)))
        columns.append(oracle.apply(state, control, target).vector)
        cols.append(int(abs(state.vector).argmax()))
    if not columns:
        return zeros((layout.dim, 0), dtype=complex), cols
    return column_stack(columns), cols
