# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests for the closed-form bounds, error pairs and the odd-n error
combination.
"""

from fractions import Fraction

from pypermsearch.error_bounds import bound_mu, bound_worst, \
    rebalance_probability, lemma_worst, odd_uniform_bound, hoeffding_halfwidth
from pypermsearch.error_pair import ErrorPair, ReductionConfig
from pypermsearch.errors import ErrorBudgetError, InstanceError
from pypermsearch.exact_error_perm import exact_error_perm
from pypermsearch.noisy_solvers import noisy_perm_solver
from pypermsearch.odd_error_combination import odd_error_combination

from pypermsearch.t.t_begin import t_begin
from pypermsearch.t.t_is import t_is
from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_raises import t_raises
from pypermsearch.t.t_end import t_end


def t_error_bounds(quiet=False):
    """Tests for C{error_bounds}, C{ErrorPair}, C{ReductionConfig} and
    C{odd_error_combination}.
    """
    n_tests = 29

    t_begin(n_tests, quiet)

    F = Fraction

    t = 'bounds : '
    t_is(bound_mu(0), F(1, 4), None, t + 'bound_mu(0)')
    t_is(bound_mu(F(1, 4)), F(3, 8), None, t + 'bound_mu(1/4)')
    t_is(bound_worst(0), F(1, 3), None, t + 'bound_worst(0)')
    t_is(bound_worst(F(1, 4)), F(2, 5), None, t + 'bound_worst(1/4)')
    t_is(bound_mu(0.1), 0.3, 12, t + 'floats stay floats')
    t_is(odd_uniform_bound(0, 5), F(1, 10), None, t + 'odd_uniform_bound')

    t = 'rebalancing : '
    t_is(rebalance_probability(0, F(1, 2)), F(1, 3), None, t + 'p for (0, 1/2)')
    t_is(rebalance_probability(F(1, 5), F(1, 5)), 0, None, t + 'p for equal errors')
    t_is(lemma_worst(0, F(1, 2)), F(1, 3), None, t + 'worst for (0, 1/2)')
    t_is(lemma_worst(F(1, 10), F(3, 10)), F(1, 4), None,
         t + 'worst for (1/10, 3/10)')
    t_is(lemma_worst(F(1, 4), F(1, 4)), F(1, 4), None, t + 'worst for (1/4, 1/4)')
    t_ok(all(lemma_worst(F(k, 20), F(1, 2)) == bound_worst(F(k, 20))
             for k in range(10)), t + 'profile (eps, 1/2) meets 1/(3 - 2 eps)')
    t_ok(all(lemma_worst(F(a, 10), F(b, 10)) < F(1, 2)
             for a in range(10) for b in range(10) if a + b < 10),
         t + 'rebalanced error stays below 1/2')
    t_raises(ErrorBudgetError, lemma_worst, (F(1, 2), F(1, 2)),
             t + 'eps0 + eps1 = 1')

    t = 'hoeffding_halfwidth : '
    t_is(hoeffding_halfwidth(100000), 0.005147, 5, t + '10^5 trials at 99%')
    t_is(hoeffding_halfwidth(400), 2 * hoeffding_halfwidth(1600), 12,
         t + 'shrinks as 1/sqrt(trials)')
    t_raises(ValueError, hoeffding_halfwidth, (0,), t + 'no trials')

    t = 'ErrorPair : '
    e = ErrorPair(F(1, 10), F(3, 10))
    t_ok(e.worst() == F(3, 10) and e.can_rebalance() and
         tuple(e) == (F(1, 10), F(3, 10)), t + 'worst, can_rebalance, iteration')
    t_ok(not ErrorPair(F(1, 2), F(1, 2)).can_rebalance(), t + 'sum of 1')
    t_raises(ErrorBudgetError, ErrorPair, (F(3, 2), 0), t + 'error above 1')

    t = 'ReductionConfig : '
    c = ReductionConfig(6, F(1, 4), 7)
    t_ok(c.n == 6 and c.epsilon_bound == F(1, 4) and c.seed == 7, t + 'fields')
    t_raises(InstanceError, ReductionConfig, (5,), t + 'odd n')
    t_raises(ErrorBudgetError, ReductionConfig, (4, F(1, 2)), t + 'bound 1/2')

    t = 'odd_error_combination : '
    t_is(odd_error_combination((0.3, 0.0), 3), 0.2, 12, t + 'n = 3, (0.3, 0)')
    t_is(odd_error_combination(ErrorPair(F(3, 10), 0), 3), F(1, 5), None,
         t + 'exact n = 3')
    t_is(odd_error_combination((F(1, 7), F(1, 7)), 5), F(1, 7), None,
         t + 'equal errors')
    t_is(odd_error_combination((F(1, 3), F(1, 2)), 1), F(1, 3), None,
         t + 'n = 1 has no P1 weight')
    rep = exact_error_perm(noisy_perm_solver(3, F(3, 10), 0), 3)
    t_is(rep.eps_mu, odd_error_combination((rep.eps0, rep.eps1), 3), None,
         t + 'matches enumeration over the 4 + 2 permutations of [3]')
    t_raises(InstanceError, odd_error_combination, ((0, 0), 4), t + 'even n')

    t_end()


if __name__ == '__main__':
    t_error_bounds(quiet=False)
