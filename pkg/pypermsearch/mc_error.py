# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Monte Carlo error estimates with Hoeffding confidence intervals.
"""

from sys import stderr

from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.counted_oracle import CountedOracle
from pypermsearch.error_bounds import hoeffding_halfwidth
from pypermsearch.error_report import ErrorReport
from pypermsearch.errors import InstanceError
from pypermsearch.idx_dist import UNIFORM, DIST_NAMES
from pypermsearch.instance_errors import expected_answer, quantum_oracle
from pypermsearch.mu_distribution import dist_code, sample_mu
from pypermsearch.psoption import psoption
from pypermsearch.rand_stream import SeededStream
from pypermsearch.run_classical import run_classical
from pypermsearch.run_quantum import run_mixed
from pypermsearch.sample_uniform_permutation import sample_uniform_permutation


def _run_once(alg, instance, rng, psopt):
    if isinstance(alg, ClassicalAlgorithm):
        oracle = CountedOracle(instance)
        return run_classical(alg, oracle, rng).output, oracle.count
    outcome = run_mixed(alg, quantum_oracle(instance), rng, psopt)
    return rng.weighted(outcome.output_distribution), outcome.query_count


def mc_error(alg, n, variant='mu', trials=None, rng=None, psopt=None):
    """Returns an L{ErrorReport} estimated from C{trials} runs (option
    TRIALS by default) on instances drawn from C{variant}: 'mu', 'mu0' or
    'mu1' for search algorithms, 'uniform' for PERMUTATION algorithms.

    Instances and the algorithm's randomness both come from the stream
    C{rng} (a L{SeededStream} on option SEED by default), so equal seeds give
    equal reports. C{ci_halfwidth} is the Hoeffding half-width of C{eps_mu}
    at option CONFIDENCE; C{eps0} and C{eps1} are the empirical errors of
    the trials that fell on each side, C{None} if none did.
    """
    psopt = psoption(psopt)
    if trials is None:
        trials = psopt['TRIALS']
    if trials < 1:
        raise ValueError('mc_error: trials must be positive, got %d' % trials)
    if alg.n != n:
        raise InstanceError('mc_error: %s runs on [%d], not [%d]'
                            % (alg.name, alg.n, n))
    if rng is None:
        rng = SeededStream(psopt['SEED'])
    variant = dist_code(variant)

    wrong = [0, 0]
    seen = [0, 0]
    qmax, qsum = 0, 0
    for _ in range(trials):
        if variant == UNIFORM:
            instance = sample_uniform_permutation(n, rng)
        else:
            instance = sample_mu(n, variant, rng)
        ans = expected_answer(instance)
        out, q = _run_once(alg, instance, rng, psopt)
        seen[ans] += 1
        wrong[ans] += out != ans
        qmax = max(qmax, q)
        qsum += q

    def rate(k):
        return wrong[k] / float(seen[k]) if seen[k] else None

    report = ErrorReport(rate(0), rate(1), sum(wrong) / float(trials),
                         query_max=qmax, query_mean=qsum / float(trials),
                         mode='mc',
                         ci_halfwidth=hoeffding_halfwidth(trials,
                                                          psopt['CONFIDENCE']),
                         name=alg.name, n=n, variant=DIST_NAMES[variant])

    if psopt['VERBOSE'] > 1:
        stderr.write('mc_error: %s n=%d trials=%d eps_mu=%.6f +- %.6f\n'
                     % (alg.name, n, trials, report.eps_mu, report.ci_halfwidth))
    return report
