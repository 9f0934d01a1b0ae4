# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Closed-form error bounds of the reductions.

Every function keeps rational arguments rational: pass L{Fraction}s (or
ints) to get exact values, floats to get floats.
"""

from fractions import Fraction

from numpy import log, sqrt

from pypermsearch.errors import ErrorBudgetError


def _exact(x):
    return Fraction(x) if isinstance(x, int) else x


def bound_mu(eps):
    """Distributional error bound M{(1 + 2 eps)/4} of reduction B on the
    mixed search distribution.
    """
    return (1 + 2 * _exact(eps)) / 4


def bound_worst(eps):
    """Worst-case error bound M{1/(3 - 2 eps)} of the rebalanced reduction."""
    return 1 / (3 - 2 * _exact(eps))


def rebalance_probability(eps0, eps1):
    """Probability M{p = |eps1 - eps0| / (1 + |eps1 - eps0|)} of answering
    with the constant bit when rebalancing.
    """
    d = abs(_exact(eps1) - _exact(eps0))
    return d / (1 + d)


def lemma_worst(eps0, eps1):
    """Worst-case error M{max(eps0, eps1) / (1 + |eps0 - eps1|)} after
    rebalancing. Raises L{ErrorBudgetError} unless M{eps0 + eps1 < 1}.
    """
    if eps0 + eps1 >= 1:
        raise ErrorBudgetError('lemma_worst: eps0 + eps1 = %s is not below 1'
                               % (eps0 + eps1))
    eps0, eps1 = _exact(eps0), _exact(eps1)
    return max(eps0, eps1) / (1 + abs(eps0 - eps1))


def odd_uniform_bound(eps, n):
    """Bound M{eps + 1/(2n)} on the uniform-distribution error obtained on
    odd sizes through the extension.
    """
    return eps + Fraction(1, 2 * n)


def hoeffding_halfwidth(trials, confidence=0.99):
    """Half-width M{sqrt(ln(2/delta) / (2 trials))}, M{delta = 1 -
    confidence}, of the two-sided Hoeffding interval for a mean of
    [0, 1]-valued samples.
    """
    if trials < 1:
        raise ValueError('hoeffding_halfwidth: trials must be positive, got %d'
                         % trials)
    delta = 1 - confidence
    return float(sqrt(log(2 / delta) / (2 * trials)))
