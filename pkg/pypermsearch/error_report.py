# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Error reports of decision algorithms.
"""

from fractions import Fraction


def _num(x):
    return None if x is None else float(x)


class ErrorReport(object):
    """Measured errors of one algorithm.

    C{eps0} and C{eps1} are the errors on the no and yes sides (class
    conditional), C{eps_mu} the error under the distribution measured,
    C{worst_case} the largest per-instance error when known. In C{'exact'}
    mode the errors are L{Fraction}s for classical algorithms and floats for
    quantum ones, and C{ci_halfwidth} is C{None}; in C{'mc'} mode they are
    empirical frequencies with a Hoeffding half-width.
    """

    def __init__(self, eps0, eps1, eps_mu, worst_case=None, query_max=0,
                 query_mean=0, mode='exact', ci_halfwidth=None, name='',
                 n=None, variant=''):
        self.eps0 = eps0
        self.eps1 = eps1
        self.eps_mu = eps_mu
        self.worst_case = worst_case
        self.query_max = query_max
        self.query_mean = query_mean
        self.mode = mode
        self.ci_halfwidth = ci_halfwidth
        self.name = name
        self.n = n
        self.variant = variant

    @property
    def exact(self):
        return self.mode == 'exact'

    def to_record(self):
        """Returns a flat dict for reports. Numbers are floats; exact
        rationals are also given as strings in the C{*_exact} fields.
        """
        rec = {
            'fixture': self.name,
            'n': self.n,
            'variant': self.variant,
            'mode': self.mode,
            'eps0': _num(self.eps0),
            'eps1': _num(self.eps1),
            'eps_mu': _num(self.eps_mu),
            'worst_case': _num(self.worst_case),
            'queries_max': self.query_max,
            'queries_mean': _num(self.query_mean),
            'ci_halfwidth': self.ci_halfwidth,
        }
        for key in ('eps0', 'eps1', 'eps_mu', 'worst_case'):
            v = getattr(self, key)
            if isinstance(v, Fraction):
                rec[key + '_exact'] = str(v)
        return rec

    def __repr__(self):
        return '<ErrorReport %s %s eps0=%s eps1=%s eps_mu=%s>' % (
            self.name, self.mode, self.eps0, self.eps1, self.eps_mu)
