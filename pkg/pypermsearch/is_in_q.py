# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Membership test for Q.
"""

from numpy import bincount, flatnonzero as find


def is_in_q(h):
    """Returns C{True} iff C{h} has exactly one colliding pair M{{i, j}},
    the colliding value is 1, and exactly one of M{i, j} is odd.
    """
    counts = bincount(h.table, minlength=h.n)
    colliding = find(counts > 1)
    if len(colliding) != 1 or colliding[0] != 0 or counts[0] != 2:
        return False
    i, j = h.preimage(1)
    return (i + j) % 2 == 1
