# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Input distributions of unique search.
"""

from fractions import Fraction

from pypermsearch.errors import InstanceError
from pypermsearch.idx_dist import MU, MU0, MU1, DIST_NAMES, DIST_CODES
from pypermsearch.searchinstance import SearchInstance


def dist_code(variant):
    """Returns the C{idx_dist} constant for C{variant}, given either as a
    constant or as its name ('mu', 'mu0', 'mu1', 'uniform').
    """
    if variant in DIST_NAMES:
        return variant
    try:
        return DIST_CODES[variant]
    except (KeyError, TypeError):
        raise InstanceError('unknown distribution %r (choose from %s)' %
                            (variant, ', '.join(sorted(DIST_CODES))))


class MuDistribution(object):
    """One of the distributions M{mu_n}, M{mu0_n}, M{mu1_n} on search
    instances over [n].

    M{mu} gives weight 1/2 to the no instance and M{1/2n} to each yes
    instance, M{mu0} is concentrated on the no instance, M{mu1} is uniform on
    the yes instances.
    """

    def __init__(self, n, variant=MU):
        if n < 1:
            raise InstanceError('MuDistribution: n must be at least 1')
        variant = dist_code(variant)
        if variant not in (MU, MU0, MU1):
            raise InstanceError('MuDistribution: %s is not a search '
                                'distribution' % DIST_NAMES[variant])
        self.n = n
        self.variant = variant

    def support(self):
        """Returns the list of C{(instance, weight)} pairs with positive
        exact weight, the no instance first.
        """
        n = self.n
        yes = [SearchInstance(n, j) for j in range(1, n + 1)]
        if self.variant == MU0:
            return [(SearchInstance(n), Fraction(1))]
        if self.variant == MU1:
            return [(f, Fraction(1, n)) for f in yes]
        return [(SearchInstance(n), Fraction(1, 2))] + \
            [(f, Fraction(1, 2 * n)) for f in yes]

    def sample(self, rng):
        n = self.n
        if self.variant == MU0:
            return SearchInstance(n)
        if self.variant == MU and rng.randint(2) == 0:
            return SearchInstance(n)
        return SearchInstance(n, rng.randint(n) + 1)


def sample_mu(n, variant, rng):
    """Returns a search instance on [n] drawn from C{variant} ('mu', 'mu0'
    or 'mu1'): C{mu0} always gives the no instance, C{mu1} a uniformly
    marked one, C{mu} flips a fair coin between the two.
    """
    return MuDistribution(n, variant).sample(rng)
