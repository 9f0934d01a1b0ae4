# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Exact and statistical checks that a uniform permutation of either class
followed by a uniform neighbour gives a uniform member of Q.
"""

from sys import stderr

from pypermsearch.cmd_verify_reduction import parse_sizes
from pypermsearch.enum_instances import enum_q, sampling_multiplicity
from pypermsearch.errors import InstanceError
from pypermsearch.idx_class import P0, P1, CLASS_NAMES
from pypermsearch.printreport import new_report
from pypermsearch.psoption import psoption
from pypermsearch.q_pi_neighbors import sample_q_pi
from pypermsearch.rand_stream import SeededStream
from pypermsearch.sample_uniform_in_class import sample_uniform_in_class
from pypermsearch.uniformity_test import uniformity_test

## largest n for exact multiplicity tables and for chi-square over all of Q
EXACT_CAP = 6


def exact_record(n, klass):
    """Multiplicity table of M{h} over all M{(pi, f)} with M{pi} in C{klass}:
    passes when its support is Q and all multiplicities agree.
    """
    counts = sampling_multiplicity(n, klass)
    q = enum_q(n)
    mult = sorted(set(counts.values()))
    ok = set(counts) == set(q) and len(mult) == 1
    return {'n': n, 'class': CLASS_NAMES[klass], 'test': 'exact',
            'mode': 'exact', 'q_size': len(q), 'support': len(counts),
            'multiplicity': mult[0] if len(mult) == 1 else None,
            'pass': ok}


def chi_square_record(n, klass, draws, alpha, rng):
    """Chi-square test of C{draws} seeded samples of M{h}. Up to
    C{EXACT_CAP} the labels are the members of Q; above it, the colliding
    pair of M{h}, uniform over the M{(n/2)^2} odd-even pairs.
    """
    full = n <= EXACT_CAP
    samples = []
    for _ in range(draws):
        h = sample_q_pi(sample_uniform_in_class(n, klass, rng), rng)
        samples.append(h.map if full else tuple(h.preimage(1)))
    domain = len(enum_q(n)) if full else (n // 2) ** 2

    res = uniformity_test(samples, domain, alpha)
    rec = {'n': n, 'class': CLASS_NAMES[klass], 'mode': 'mc',
           'test': 'chi_square_q' if full else 'chi_square_pair',
           'draws': draws, 'domain': domain}
    rec.update(res.to_record())
    return rec


def cmd_sampling_tests(psopt=None):
    """Runs the sampling checks for every even size in option N (default
    4,6): exact multiplicity tables up to C{EXACT_CAP} and seeded chi-square
    experiments of option DRAWS draws at level option ALPHA, for both
    classes. Returns the report.
    """
    psopt = psoption(psopt)
    sizes = parse_sizes(psopt, [4, 6])
    for n in sizes:
        if n < 2 or n % 2:
            raise InstanceError('sampling_tests: n must be even, got %d' % n)

    report = new_report('sampling_tests', psopt)
    rng = SeededStream(psopt['SEED'])
    for n in sizes:
        for klass in (P0, P1):
            recs = []
            if n <= EXACT_CAP:
                recs.append(exact_record(n, klass))
            recs.append(chi_square_record(n, klass, psopt['DRAWS'],
                                          psopt['ALPHA'], rng))
            for rec in recs:
                report['records'].append(rec)
                report['pass'] = report['pass'] and rec['pass']
                if psopt['VERBOSE'] > 1:
                    stderr.write('sampling_tests: n=%d %s %s %s\n' %
                                 (n, rec['class'], rec['test'],
                                  'pass' if rec['pass'] else 'FAIL'))

    if psopt['VERBOSE']:
        stderr.write('sampling_tests: %d sizes, %s\n' % (len(sizes),
                     'pass' if report['pass'] else 'FAIL'))
    return report
