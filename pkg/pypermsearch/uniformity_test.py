# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Chi-square test of samples against the uniform distribution.
"""

from collections import Counter

from numpy import array, zeros
from scipy.stats import chisquare


class UniformityResult(object):
    """Outcome of L{uniformity_test}: C{passed}, the chi-square
    C{statistic}, its C{pvalue}, the degrees of freedom C{dof} and the
    significance level C{alpha}.
    """

    def __init__(self, passed, statistic, pvalue, dof, alpha):
        self.passed = passed
        self.statistic = statistic
        self.pvalue = pvalue
        self.dof = dof
        self.alpha = alpha

    def __bool__(self):
        return self.passed

    __nonzero__ = __bool__

    def to_record(self):
        return {'pass': self.passed, 'statistic': self.statistic,
                'pvalue': self.pvalue, 'dof': self.dof, 'alpha': self.alpha}

    def __repr__(self):
        return '<UniformityResult %s chi2=%.4f p=%.4g dof=%d>' % (
            'pass' if self.passed else 'fail', self.statistic, self.pvalue,
            self.dof)


def uniformity_test(samples, domain_size, alpha=0.01):
    """Tests whether C{samples}, hashable labels from a domain of
    C{domain_size} labels, are uniformly distributed, by a chi-square
    goodness-of-fit test at significance C{alpha}. Labels of the domain
    that never occur count as zero cells.

    Example::
        uniformity_test(list(range(6)) * 100, 6).passed    # True
    """
    samples = list(samples)
    if not samples:
        raise ValueError('uniformity_test: empty sample set')
    counts = Counter(samples)
    if len(counts) > domain_size:
        raise ValueError('uniformity_test: %d distinct labels in a domain of %d'
                         % (len(counts), domain_size))

    observed = zeros(domain_size)
    observed[:len(counts)] = array(sorted(counts.values()))
    if domain_size == 1:
        return UniformityResult(True, 0.0, 1.0, 0, alpha)

    statistic, pvalue = chisquare(observed)
    statistic, pvalue = float(statistic), float(pvalue)
    return UniformityResult(pvalue >= alpha, statistic, pvalue,
                            domain_size - 1, alpha)
