# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Grover iteration counts, query counts and success probabilities over a
range of sizes.
"""

from sys import stderr

from pypermsearch.cmd_verify_reduction import parse_sizes
from pypermsearch.errors import CapacityError, InstanceError
from pypermsearch.grover_iteration_count import grover_iteration_count, \
    grover_success_probability
from pypermsearch.grover_search import grover_search
from pypermsearch.idx_class import P1
from pypermsearch.layout import nbits, value_width
from pypermsearch.oracle_unitary import OracleUnitary
from pypermsearch.printreport import new_report
from pypermsearch.psoption import psoption
from pypermsearch.quantum_solvers import grover_perm_solver
from pypermsearch.rand_stream import SeededStream
from pypermsearch.run_quantum import run_quantum
from pypermsearch.sample_uniform_in_class import sample_uniform_in_class
from pypermsearch.searchinstance import SearchInstance

## allowed growth of the inversion solver's query count per doubling of n
RATIO_RANGE = (1.2, 1.7)


def scan_size(n, rng, psopt):
    """Returns the record of one size: Grover on a seeded marked instance
    and on the unmarked one, and for even n the inversion solver on a
    seeded yes permutation.
    """
    tol = psopt['TOL']
    k = grover_iteration_count(n)
    closed = grover_success_probability(n, k)

    marked = rng.randint(n) + 1
    f_oracle = OracleUnitary.search(SearchInstance(n, marked))
    yes = grover_search(f_oracle, n, psopt)
    no = grover_search(OracleUnitary.search(SearchInstance(n)), n, psopt)

    rec = {
        'n': n,
        'mode': 'exact',
        'k': k,
        'queries': yes.query_count,
        'success_probability': yes.p1,
        'closed_form': closed,
        'no_instance_p1': no.p1,
    }
    ok = abs(yes.p1 - closed) <= tol and no.p1 <= tol and \
        yes.query_count == k + 1 and no.query_count == k + 1

    if n % 2 == 0:
        p = sample_uniform_in_class(n, P1, rng)
        p_oracle = OracleUnitary.function(p)
        out = run_quantum(grover_perm_solver(n), p_oracle, psopt=psopt)
        rec['perm_queries'] = out.query_count
        rec['perm_success_probability'] = out.p1
        ok = ok and out.query_count == 2 * (k + 1) and \
            abs(out.p1 - closed) <= tol
    else:
        rec['perm_queries'] = None
        rec['perm_success_probability'] = None

    rec['pass'] = bool(ok)
    return rec


def cmd_grover_scan(psopt=None):
    """Runs Grover search for every size in option N (default
    4,8,16,32,64) and returns the report: per size the iteration count, the
    query count, the exact and closed-form success probabilities and the
    inversion solver's M{2(k+1)} permutation queries. Where consecutive sizes
    double, the growth of the permutation query count must lie in
    C{RATIO_RANGE}.

    Raises L{CapacityError} when a size needs more qubits than option
    QUBIT_CAP.
    """
    psopt = psoption(psopt)
    sizes = parse_sizes(psopt, [4, 8, 16, 32, 64])
    for n in sizes:
        if n < 1:
            raise InstanceError('grover_scan: sizes must be positive, got %d' % n)
        need = nbits(n) + 1 + (value_width(n) if n % 2 == 0 else 0)
        if need > psopt['QUBIT_CAP']:
            raise CapacityError('grover_scan: n = %d needs %d qubits, cap is %d'
                                % (n, need, psopt['QUBIT_CAP']))

    report = new_report('grover_scan', psopt)
    rng = SeededStream(psopt['SEED'])
    for n in sizes:
        rec = scan_size(n, rng, psopt)
        report['records'].append(rec)
        report['pass'] = report['pass'] and rec['pass']
        if psopt['VERBOSE'] > 1:
            stderr.write('grover_scan: n=%-5d k=%-3d p=%.12f %s\n' %
                         (n, rec['k'], rec['success_probability'],
                          'pass' if rec['pass'] else 'FAIL'))

    ratios = []
    recs = report['records']
    for r0, r1 in zip(recs, recs[1:]):
        if r1['n'] == 2 * r0['n'] and r0['perm_queries'] and r1['perm_queries']:
            ratio = r1['perm_queries'] / float(r0['perm_queries'])
            ok = RATIO_RANGE[0] <= ratio <= RATIO_RANGE[1]
            ratios.append({'from': r0['n'], 'to': r1['n'], 'ratio': ratio,
                           'pass': ok})
            report['pass'] = report['pass'] and ok
    report['ratios'] = ratios

    if psopt['VERBOSE']:
        stderr.write('grover_scan: %d sizes, %s\n' % (len(sizes),
                     'pass' if report['pass'] else 'FAIL'))
    return report
