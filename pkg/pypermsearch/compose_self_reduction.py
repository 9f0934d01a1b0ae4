# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""The random self-reduction of PERMUTATION.
"""

from pypermsearch.errors import InstanceError


def compose_self_reduction(p, omega, sigma):
    """Returns M{omega o pi o sigma}, i.e. M{i -> omega(pi(sigma(i)))}.

    C{omega} must fix 1 and C{sigma} must map odd points to odd points and
    even points to even points; then the result lies in P1 iff C{p} does.
    """
    if not p.n == omega.n == sigma.n:
        raise InstanceError('compose_self_reduction: sizes %d, %d, %d differ'
                            % (p.n, omega.n, sigma.n))
    if omega(1) != 1:
        raise InstanceError('compose_self_reduction: omega must fix 1, '
                            'omega(1) = %d' % omega(1))
    if any((sigma.table[i] - i) % 2 for i in range(sigma.n)):
        raise InstanceError('compose_self_reduction: sigma must preserve '
                            'parity, got %r' % (sigma.map,))
    return omega.compose(p.compose(sigma))
