# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Standard XOR oracle action on a statevector.
"""

from numpy import arange, asarray, zeros, moveaxis, flatnonzero, nonzero

from pypermsearch.errors import LayoutError
from pypermsearch.statevector import StateVector


def routed_values(table, route, d):
    """Returns, for each basis value C{c < d} of a control register, the
    encoded value XORed into the target: C{table[route[c]]}, or 0 where
    C{route[c]} is negative or C{c} lies beyond the route.

    C{route=None} is the identity route over the table.
    """
    table = asarray(table, dtype=int)
    if route is None:
        route = arange(len(table))
    route = asarray(route, dtype=int)
    m = min(len(route), d)
    vals = zeros(d, dtype=int)
    r = route[:m]
    ok = r >= 0
    vals[:m][ok] = table[r[ok]]
    return vals


def apply_function_oracle(state, table, control='index', target='answer',
                          route=None):
    """Applies M{|i>|b> -> |i>|b XOR g(i)>} for the encoded value table
    C{table} of a function M{g}.

    Basis values of the C{control} register not covered by the table (the
    padding of a register of M{ceil(log2 n)} qubits) are left untouched.
    C{route} optionally redirects control value C{c} to table entry
    C{route[c]}, a negative entry meaning identity on that branch; composed
    and relabeled oracles use it. Query tallies are kept by the callers
    (L{OracleUnitary}); this function only transforms the state.

    Example::
        state = StateVector.basis(layout, index=2)
        apply_function_oracle(state, [0, 0, 1, 0])   # |2>|0> -> |2>|1>
    """
    layout = state.layout
    ci, ti = layout.axis(control), layout.axis(target)
    if ci == ti:
        raise LayoutError('apply_function_oracle: control and target are both '
                          '%r' % control)
    dc, dt = layout.shape[ci], layout.shape[ti]

    vals = routed_values(table, route, dc)
    if len(vals) and vals.max() >= dt:
        raise LayoutError('apply_function_oracle: value %d does not fit target '
                          'register %r of dimension %d' % (vals.max(), target, dt))

    amps = moveaxis(state.amplitudes, (ci, ti), (0, 1))
    out = amps.copy()
    b = arange(dt)
    for i in flatnonzero(vals):
        out[i] = amps[i, b ^ vals[i]]
    return StateVector(layout, moveaxis(out, (0, 1), (ci, ti)))


def apply_classical_xor(state, control, cond, target, values):
    """Applies the query-free controlled XOR M{|c>|a>|b> -> |c>|a>|b XOR
    v(c, a)>} with C{values[c][a]} the encoded value, zero rows beyond
    C{len(values)}.
    """
    layout = state.layout
    axes = (layout.axis(control), layout.axis(cond), layout.axis(target))
    if len(set(axes)) < 3:
        raise LayoutError('apply_classical_xor: registers must be distinct')
    dt = layout.shape[axes[2]]
    values = asarray(values, dtype=int)
    if values.size and values.max() >= dt:
        raise LayoutError('apply_classical_xor: value %d does not fit target '
                          'register %r' % (values.max(), target))

    amps = moveaxis(state.amplitudes, axes, (0, 1, 2))
    out = amps.copy()
    b = arange(dt)
    for i, a in zip(*nonzero(values)):
        out[i, a] = amps[i, a, b ^ values[i, a]]
    return StateVector(layout, moveaxis(out, (0, 1, 2), axes))
