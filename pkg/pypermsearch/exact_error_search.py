# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Exact error of a unique-search algorithm.
"""

from fractions import Fraction
from sys import stderr

from pypermsearch.enum_instances import enum_search_instances
from pypermsearch.error_report import ErrorReport
from pypermsearch.errors import EnumerationError, InstanceError
from pypermsearch.idx_dist import DIST_NAMES
from pypermsearch.instance_errors import instance_errors
from pypermsearch.mu_distribution import MuDistribution
from pypermsearch.psoption import psoption


def exact_error_search(alg, n, variant='mu', psopt=None):
    """Returns the exact L{ErrorReport} of the search algorithm C{alg} on
    [n] under C{variant} ('mu', 'mu0' or 'mu1').

    Every instance and every randomness path is enumerated. C{eps0} is the
    error on the no instance, C{eps1} the average error over the n yes
    instances and C{eps_mu} the error under the variant; C{worst_case} is
    the largest error over all instances, whatever the variant.

    Example::
        exact_error_search(reduction_b(baseline_perm_solver(6)), 3)
        # eps0 = 0, eps1 = 1/2, eps_mu = 1/4
    """
    psopt = psoption(psopt)
    if alg.n != n:
        raise InstanceError('exact_error_search: %s runs on [%d], not [%d]'
                            % (alg.name, alg.n, n))
    if n > psopt['MU_ENUM_CAP']:
        raise EnumerationError('exact_error_search: n = %d exceeds the '
                               'enumeration cap %d' % (n, psopt['MU_ENUM_CAP']))
    dist = MuDistribution(n, variant)

    rows = instance_errors(alg, enum_search_instances(n), psopt)
    err = dict((h, e) for h, e, _, _ in rows)
    qmean = dict((h, q) for h, _, _, q in rows)

    eps0 = rows[0][1]
    eps1 = sum((e for _, e, _, _ in rows[1:]), Fraction(0)) / n
    support = dist.support()
    eps_mu = sum((w * err[h] for h, w in support), Fraction(0))

    report = ErrorReport(eps0, eps1, eps_mu,
                         worst_case=max(e for _, e, _, _ in rows),
                         query_max=max(q for _, _, q, _ in rows),
                         query_mean=sum((w * qmean[h] for h, w in support),
                                        Fraction(0)),
                         name=alg.name, n=n,
                         variant=DIST_NAMES[dist.variant])

    if psopt['VERBOSE'] > 1:
        stderr.write('exact_error_search: %s n=%d eps0=%s eps1=%s eps_mu=%s\n'
                     % (alg.name, n, eps0, eps1, eps_mu))
    return report
