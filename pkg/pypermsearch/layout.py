# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Named register layouts of simulated quantum workspaces.
"""

from pypermsearch.errors import LayoutError


def nbits(n):
    """Returns the number of qubits needed to index [n], M{ceil(log2 n)}.
    """
    if n < 1:
        raise LayoutError('nbits: n must be positive, got %d' % n)
    return (n - 1).bit_length()


def value_width(n):
    """Returns the width of a register holding values of [n] encoded as
    M{v - 1}, never less than one qubit.
    """
    return max(1, nbits(n))


class Layout(object):
    """Ordered map of register names to widths in qubits.

    The statevector of a layout is stored as a tensor with one axis per
    register, axis C{k} of dimension M{2^width_k}. A register of width 0 is
    allowed and has dimension 1.

    Example::
        layout = Layout([('index', 2), ('answer', 1), ('hanc', 1)])
        layout.shape    # (4, 2, 2)
    """

    def __init__(self, registers):
        self.names = []
        self.widths = []
        for name, width in registers:
            if name in self.names:
                raise LayoutError('Layout: duplicate register %r' % name)
            if width < 0:
                raise LayoutError('Layout: register %r has negative width' % name)
            self.names.append(name)
            self.widths.append(int(width))

    @property
    def shape(self):
        return tuple(2 ** w for w in self.widths)

    @property
    def nqubits(self):
        return sum(self.widths)

    @property
    def dim(self):
        return 2 ** self.nqubits

    def axis(self, name):
        if name not in self.names:
            raise LayoutError('Layout: no register %r in %s' % (name, self))
        return self.names.index(name)

    def size(self, name):
        return 2 ** self.widths[self.axis(name)]

    def has(self, name):
        return name in self.names

    def extend(self, registers):
        """Returns a layout with C{registers} appended. A register already
        present with the same width is shared; any other clash raises
        L{LayoutError}.
        """
        regs = list(zip(self.names, self.widths))
        for name, width in registers:
            if name in self.names:
                if self.widths[self.axis(name)] != width:
                    raise LayoutError('Layout: register %r requested with width '
                                      '%d, present with %d' % (name, width,
                                      self.widths[self.axis(name)]))
                continue
            regs.append((name, width))
        return Layout(regs)

    def __eq__(self, other):
        return isinstance(other, Layout) and self.names == other.names and \
            self.widths == other.widths

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'Layout(%s)' % ', '.join('%s:%d' % r for r in
                                        zip(self.names, self.widths))
