# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Classifies instances into P0, P1 and Q.
"""

from pypermsearch.idx_class import P0, P1, Q, NOT_CLASSIFIED


def parity_class(p):
    """Returns C{P1} if M{pi^-1(1)} is even and C{P0} if it is odd.

    Example::
        parity_class(Permutation([3, 1, 2, 4]))     # P1
    """
    return P1 if p.inverse(1) % 2 == 0 else P0


def instance_class(h):
    """Returns the class tag of an arbitrary function on [n]: C{P0} or C{P1}
    for bijections, C{Q} for members of Q and C{NOT_CLASSIFIED} otherwise.
    """
    from pypermsearch.is_in_q import is_in_q

    if len(set(h.map)) == h.n:
        return P1 if h.preimage(1)[0] % 2 == 0 else P0
    if is_in_q(h):
        return Q
    return NOT_CLASSIFIED
