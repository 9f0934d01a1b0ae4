# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Statevectors over named register layouts, and the register operators
used to build circuits.
"""

from numpy import zeros, eye, outer, sqrt, asarray, moveaxis, tensordot, \
    abs as npabs, sum as npsum, array
from numpy.linalg import norm

from pypermsearch.errors import LayoutError


## single qubit gates
H = array([[1, 1], [1, -1]], dtype=complex) / sqrt(2)
X = array([[0, 1], [1, 0]], dtype=complex)


class StateVector(object):
    """Amplitudes of a pure state on a L{Layout}, stored as a complex tensor
    of shape C{layout.shape}.
    """

    def __init__(self, layout, amplitudes):
        amps = asarray(amplitudes, dtype=complex)
        if amps.size != layout.dim:
            raise LayoutError('StateVector: %d amplitudes do not fit %r' %
                              (amps.size, layout))
        self.layout = layout
        self.amplitudes = amps.reshape(layout.shape)

    @classmethod
    def basis(cls, layout, **values):
        """Computational basis state with the named registers set to the given
        values and every other register at 0.
        """
        amps = zeros(layout.shape, dtype=complex)
        idx = [0] * len(layout.names)
        for name, v in values.items():
            k = layout.axis(name)
            if not 0 <= v < layout.shape[k]:
                raise LayoutError('StateVector: value %d does not fit register '
                                  '%r' % (v, name))
            idx[k] = v
        amps[tuple(idx)] = 1
        return cls(layout, amps)

    @classmethod
    def zero(cls, layout):
        return cls.basis(layout)

    @property
    def vector(self):
        return self.amplitudes.reshape(-1)

    def norm(self):
        return norm(self.vector)

    def probabilities(self, register):
        """Returns the marginal distribution of C{register} in the
        computational basis.
        """
        k = self.layout.axis(register)
        p = npabs(self.amplitudes) ** 2
        others = tuple(a for a in range(p.ndim) if a != k)
        return npsum(p, axis=others) if others else p

    def distance(self, other):
        """Max-entry distance between two states on the same layout."""
        if self.layout != other.layout:
            raise LayoutError('StateVector: layouts differ')
        return npabs(self.vector - other.vector).max()


def apply_register_op(state, register, matrix):
    """Applies the square matrix C{matrix} to one register of C{state}.
    """
    k = state.layout.axis(register)
    d = state.layout.shape[k]
    m = asarray(matrix, dtype=complex)
    if m.shape != (d, d):
        raise LayoutError('apply_register_op: %s operator on register %r of '
                          'dimension %d' % (m.shape, register, d))
    amps = moveaxis(state.amplitudes, k, -1)
    amps = tensordot(amps, m, axes=([-1], [1]))
    return StateVector(state.layout, moveaxis(amps, -1, k))


def uniform_prep(n, d):
    """Returns a real unitary on a register of dimension C{d} taking |0> to
    the uniform superposition over the first C{n} basis states.

    A Householder reflection; identity when C{n} is 1.
    """
    s = zeros(d)
    s[:n] = 1 / sqrt(n)
    w = -s
    w[0] += 1
    ww = w.dot(w)
    if ww < 1e-15:
        return eye(d, dtype=complex)
    return (eye(d) - 2 * outer(w, w) / ww).astype(complex)


def diffusion_matrix(n, d):
    """Inversion about the mean of the first C{n} basis states, identity on
    the remaining M{d - n} padding states.
    """
    s = zeros(d)
    s[:n] = 1 / sqrt(n)
    m = eye(d)
    m[:n, :n] -= 2 * eye(n)
    return (m + 2 * outer(s, s)).astype(complex)


def basis_permutation(d, i, j):
    """Unitary on dimension C{d} swapping basis states C{i} and C{j}."""
    m = eye(d, dtype=complex)
    m[[i, j]] = m[[j, i]]
    return m
