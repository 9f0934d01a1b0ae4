# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Checks the error and query guarantees of reduction B on fixture solvers.
"""

from fractions import Fraction
from sys import stderr

from pypermsearch.baseline_perm_solver import baseline_perm_solver
from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.error_bounds import bound_mu, bound_worst, lemma_worst
from pypermsearch.error_pair import ReductionConfig
from pypermsearch.errors import InstanceError
from pypermsearch.exact_error_perm import exact_error_perm
from pypermsearch.exact_error_search import exact_error_search
from pypermsearch.mc_error import mc_error
from pypermsearch.printreport import new_report
from pypermsearch.psoption import psoption
from pypermsearch.quantum_solvers import grover_perm_solver
from pypermsearch.rand_stream import SeededStream
from pypermsearch.rebalance import rebalance
from pypermsearch.reduction_b import reduction_b
from pypermsearch.symmetrize_search import symmetrize_search
from pypermsearch.truncated_scan_solver import truncated_scan_solver


def parse_sizes(psopt, default):
    """Returns the list of sizes in option N, C{default} if it is empty."""
    s = str(psopt['N']).strip()
    if not s:
        return list(default)
    try:
        return [int(x) for x in s.split(',')]
    except ValueError:
        raise InstanceError('n must be an integer or a comma separated list '
                            'of integers, got %r' % s)


def fixture_solvers(n):
    """Returns the PERMUTATION_n fixtures: the exact scan, truncated scans
    and the Grover-based inversion solver.
    """
    budgets = sorted(set(b for b in (n // 2, n - 2) if 0 <= b < n))
    return [baseline_perm_solver(n)] + \
        [truncated_scan_solver(n, b) for b in budgets] + \
        [grover_perm_solver(n)]


def _le(a, b, slack):
    return a is not None and a <= b + slack


def verify_fixture(a, cfg, psopt, rng):
    """Runs B (and its rebalanced, symmetrized form) over the fixture C{a}
    and returns the report record. The measured error of C{a} is checked
    against the assumed bound of the L{ReductionConfig} C{cfg}.
    """
    n = a.n
    m = n // 2
    tol = psopt['TOL']
    exact = psopt['MODE'] == 'exact'
    b = reduction_b(a)

    if exact:
        rep_a = exact_error_perm(a, n, psopt)
        rep_b = exact_error_search(b, m, 'mu', psopt)
        slack_a, slack_b = tol, tol
    else:
        rep_a = mc_error(a, n, 'uniform', psopt['TRIALS'], rng, psopt)
        rep_b = mc_error(b, m, 'mu', psopt['TRIALS'], rng, psopt)
        slack_a, slack_b = rep_a.ci_halfwidth, 2 * rep_b.ci_halfwidth

    eps = rep_a.eps_mu
    if exact and isinstance(eps, float):
        eps = Fraction(eps).limit_denominator(10 ** 9)

    rec = {
        'fixture': a.name,
        'n': n,
        'mode': psopt['MODE'],
        'eps': float(eps),
        'epsilon_bound': float(cfg.epsilon_bound),
        'eps0': rep_b.eps0,
        'eps1': rep_b.eps1,
        'eps_mu': rep_b.eps_mu,
        'bound_mu': float(bound_mu(eps)),
        'bound_worst': float(bound_worst(eps)),
        'queries_max': rep_b.query_max,
        'a_queries_max': rep_a.query_max,
    }

    checks = {
        'assumed': _le(eps, cfg.epsilon_bound, slack_a),
        'eps0': _le(rep_b.eps0, eps, slack_a + slack_b),
        'eps1': rep_b.eps1 is not None and abs(rep_b.eps1 - 0.5) <= slack_b,
        'mu': _le(rep_b.eps_mu, bound_mu(eps), slack_a + slack_b),
    }
    if isinstance(a, ClassicalAlgorithm):
        checks['queries'] = rep_b.query_max <= rep_a.query_max
    else:
        checks['queries'] = rep_b.query_max == 2 * rep_a.query_max

    ## rebalancing needs eps0 + eps1 < 1
    eps0, eps1 = rep_b.eps0 or 0, rep_b.eps1 or 0
    if eps0 + eps1 < 1:
        lemma = lemma_worst(eps0, eps1)
        rec['lemma_worst'] = float(lemma)
        if exact and isinstance(a, ClassicalAlgorithm):
            r = rebalance(symmetrize_search(b), (eps0, eps1))
            worst = exact_error_search(r, m, 'mu', psopt).worst_case
            rec['worst_case_method'] = 'enumeration'
            checks['lemma'] = abs(worst - lemma) <= tol
        else:
            worst = lemma
            rec['worst_case_method'] = 'closed_form'
        rec['worst_case'] = worst
        checks['worst'] = _le(worst, bound_worst(eps), slack_a + slack_b)
    else:
        rec['worst_case'] = None
        checks['worst'] = False

    for key, ok in sorted(checks.items()):
        rec['pass_' + key] = bool(ok)
    rec['pass'] = all(checks.values())

    for key in ('eps0', 'eps1', 'eps_mu', 'worst_case'):
        v = rec[key]
        if isinstance(v, Fraction):
            rec[key + '_exact'] = str(v)
        rec[key] = None if v is None else float(v)
    return rec


def cmd_verify_reduction(psopt=None):
    """Builds the fixture set for PERMUTATION_n (option N, default 6), runs
    reduction B over each fixture and returns the report: per fixture the
    measured errors of B next to the bounds M{eps}, M{(1+2eps)/4} and
    M{1/(3-2eps)}, with a pass flag per bound.

    Raises L{InstanceError} for odd n and L{ErrorBudgetError} for an
    assumed bound (option EPS_BOUND) outside [0, 1/2). A fixture whose
    measured error exceeds the assumed bound fails its C{assumed} check.
    """
    psopt = psoption(psopt)
    sizes = parse_sizes(psopt, [6])
    if len(sizes) != 1:
        raise InstanceError('verify_reduction: expects a single n, got %r'
                            % (sizes,))
    cfg = ReductionConfig(sizes[0], psopt['EPS_BOUND'], psopt['SEED'])
    n = cfg.n

    report = new_report('verify_reduction', psopt)
    report['config']['eps_bound'] = float(cfg.epsilon_bound)
    rng = SeededStream(cfg.seed)
    for a in fixture_solvers(n):
        rec = verify_fixture(a, cfg, psopt, rng)
        report['records'].append(rec)
        report['pass'] = report['pass'] and rec['pass']
        if psopt['VERBOSE'] > 1:
            stderr.write('verify_reduction: %-24s %s\n' %
                         (a.name, 'pass' if rec['pass'] else 'FAIL'))

    if psopt['VERBOSE']:
        stderr.write('verify_reduction: n=%d, %d fixtures, %s\n' %
                     (n, len(report['records']),
                      'all bounds hold' if report['pass'] else 'bound violated'))
    return report
