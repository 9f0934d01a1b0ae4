# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Exact error of a PERMUTATION algorithm.
"""

from fractions import Fraction
from sys import stderr

from pypermsearch.enum_instances import enum_permutations
from pypermsearch.error_report import ErrorReport
from pypermsearch.errors import EnumerationError, InstanceError
from pypermsearch.idx_class import P0
from pypermsearch.instance_errors import instance_errors
from pypermsearch.parity_class import parity_class
from pypermsearch.psoption import psoption


def _mean(values):
    values = list(values)
    if not values:
        return None
    return sum(values, Fraction(0)) / len(values)


def exact_error_perm(alg, n, psopt=None):
    """Returns the exact L{ErrorReport} of C{alg} on PERMUTATION_n over all
    n! permutations.

    C{eps0} and C{eps1} are the average errors over P0 and P1 (C{None} for
    an empty class), C{eps_mu} the average over all permutations, so that
    M{eps_mu = (|P0| eps0 + |P1| eps1) / n!}, and C{worst_case} the largest
    per-permutation error.

    Raises L{EnumerationError} above option PERM_ENUM_CAP.
    """
    psopt = psoption(psopt)
    if alg.n != n:
        raise InstanceError('exact_error_perm: %s runs on [%d], not [%d]'
                            % (alg.name, alg.n, n))
    if n > psopt['PERM_ENUM_CAP']:
        raise EnumerationError('exact_error_perm: n = %d exceeds the n! '
                               'enumeration cap %d' % (n, psopt['PERM_ENUM_CAP']))

    rows = instance_errors(alg, enum_permutations(n), psopt)
    no = [e for p, e, _, _ in rows if parity_class(p) == P0]
    yes = [e for p, e, _, _ in rows if parity_class(p) != P0]

    report = ErrorReport(_mean(no), _mean(yes), _mean(e for _, e, _, _ in rows),
                         worst_case=max(e for _, e, _, _ in rows),
                         query_max=max(q for _, _, q, _ in rows),
                         query_mean=_mean(q for _, _, _, q in rows),
                         name=alg.name, n=n, variant='uniform')

    if psopt['VERBOSE'] > 1:
        stderr.write('exact_error_perm: %s n=%d eps0=%s eps1=%s eps_mu=%s\n'
                     % (alg.name, n, report.eps0, report.eps1, report.eps_mu))
    return report
