# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests for the experiment subcommands, report output and the command
line entry point.
"""

import json

from os import close, remove
from tempfile import mkstemp

from pypermsearch.cmd_grover_scan import cmd_grover_scan
from pypermsearch.cmd_sampling_tests import cmd_sampling_tests
from pypermsearch.cmd_verify_reduction import cmd_verify_reduction
from pypermsearch.errors import CapacityError, ErrorBudgetError, InstanceError
from pypermsearch.main import run
from pypermsearch.printreport import printreport
from pypermsearch.psoption import psoption

from pypermsearch.t.t_begin import t_begin
from pypermsearch.t.t_is import t_is
from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_raises import t_raises
from pypermsearch.t.t_end import t_end


def _tempname(suffix):
    fd, fname = mkstemp(suffix=suffix)
    close(fd)
    return fname


def _read(fname):
    with open(fname) as fd:
        return fd.read()


def _exit_status(args):
    try:
        run(args)
    except SystemExit as e:
        return e.code
    return None


def t_cmd(quiet=False):
    """Tests for C{cmd_verify_reduction}, C{cmd_grover_scan},
    C{cmd_sampling_tests}, C{printreport} and C{main.run}.
    """
    n_tests = 32

    t_begin(n_tests, quiet)

    t = 'cmd_verify_reduction : '
    rep = cmd_verify_reduction(psoption(N='4'))
    recs = dict((r['fixture'], r) for r in rep['records'])
    t_ok(rep['pass'] and sorted(recs) ==
         ['baseline', 'grover_perm_4', 'truncated_scan_2'],
         t + 'n = 4: three fixtures, all bounds hold')
    r = recs['baseline']
    t_ok(r['eps0'] == 0 and r['eps1'] == 0.5 and r['eps1_exact'] == '1/2' and
         r['worst_case_exact'] == '1/3', t + 'baseline: (0, 1/2), worst 1/3')
    r = recs['truncated_scan_2']
    t_ok(r['eps'] == 0.25 and r['worst_case_exact'] == '2/5' and
         r['worst_case_method'] == 'enumeration',
         t + 'truncated scan: rebalanced worst case 2/5 by enumeration')
    r = recs['grover_perm_4']
    t_ok(r['queries_max'] == 8 and r['a_queries_max'] == 4 and
         r['worst_case_method'] == 'closed_form',
         t + 'quantum fixture: two search queries per permutation query')
    t_ok(rep['config']['eps_bound'] == 0.49 and
         all(r['epsilon_bound'] == 0.49 and r['pass_assumed']
             for r in rep['records']), t + 'every fixture within the assumed bound')
    rep = cmd_verify_reduction(psoption(N='4', EPS_BOUND=0.1))
    t_is([r['pass_assumed'] for r in rep['records']], [True, False, True], None,
         t + 'truncated scan error 1/4 exceeds an assumed bound of 0.1')
    t_ok(not rep['pass'], t + 'violated assumption fails the report')
    t_raises(ErrorBudgetError, cmd_verify_reduction,
             (psoption(N='4', EPS_BOUND=0.5),), t + 'assumed bound 1/2')
    rep = cmd_verify_reduction(psoption(N='4', MODE='mc', TRIALS=400, SEED=1))
    t_ok(rep['pass'] and all(r['mode'] == 'mc' for r in rep['records']),
         t + 'Monte Carlo mode')
    t_raises(InstanceError, cmd_verify_reduction, (psoption(N='5'),), t + 'odd n')
    t_raises(InstanceError, cmd_verify_reduction, (psoption(N='4,6'),),
             t + 'more than one n')
    t_raises(InstanceError, cmd_verify_reduction, (psoption(N='four'),),
             t + 'not an integer')

    t = 'cmd_grover_scan : '
    rep = cmd_grover_scan(psoption(N='4,16,64'))
    t_is([r['queries'] for r in rep['records']], [2, 4, 7], None,
         t + 'k + 1 queries for n = 4, 16, 64')
    t_is([r['perm_queries'] for r in rep['records']], [4, 8, 14], None,
         t + '2(k + 1) permutation queries')
    t_ok(rep['pass'] and rep['ratios'] == [], t + 'no doubling pairs')
    rep = cmd_grover_scan()
    t_is([r['ratio'] for r in rep['ratios']], [1.5, 8. / 6, 1.25, 1.4], 12,
         t + 'growth of the query count per doubling')
    t_ok(rep['pass'] and all(r['pass'] for r in rep['ratios']),
         t + 'default sizes pass')
    rep = cmd_grover_scan(psoption(N='5'))
    t_ok(rep['pass'] and rep['records'][0]['perm_queries'] is None,
         t + 'odd n has no inversion solver record')
    t_raises(CapacityError, cmd_grover_scan, (psoption(N='64', QUBIT_CAP=8),),
             t + 'qubit cap')

    t = 'cmd_sampling_tests : '
    rep = cmd_sampling_tests(psoption(N='4', DRAWS=2400, ALPHA=0.001))
    exact = [r for r in rep['records'] if r['test'] == 'exact']
    t_ok(len(rep['records']) == 4 and len(exact) == 2, t + 'records for n = 4')
    t_ok(all(r['q_size'] == 24 and r['support'] == 24 and r['multiplicity'] == 1
             for r in exact), t + 'every member of Q drawn exactly once')
    t_ok(rep['pass'], t + 'chi-square tests pass')
    rep = cmd_sampling_tests(psoption(N='8', DRAWS=1600, ALPHA=0.001))
    t_ok([r['test'] for r in rep['records']] == ['chi_square_pair'] * 2 and
         rep['records'][0]['domain'] == 16, t + 'colliding pair labels above n = 6')
    t_raises(InstanceError, cmd_sampling_tests, (psoption(N='3'),), t + 'odd n')

    t = 'printreport : '
    f1, f2 = _tempname('.json'), _tempname('.json')
    try:
        printreport(cmd_grover_scan(psoption(N='4,8', SEED=3)), f1)
        printreport(cmd_grover_scan(psoption(N='4,8', SEED=3)), f2)
        t_ok(_read(f1) == _read(f2), t + 'equal seeds give identical bytes')
        printreport(cmd_sampling_tests(psoption(N='4', DRAWS=600, SEED=5)), f1)
        printreport(cmd_sampling_tests(psoption(N='4', DRAWS=600, SEED=5)), f2)
        t_ok(_read(f1) == _read(f2), t + 'sampling experiments are seeded')
        rep = cmd_grover_scan(psoption(N='4,8'))
        printreport(rep, f1, 'csv')
        lines = _read(f1).splitlines()
        t_ok(len(lines) == 3 and lines[0].split(',') ==
             sorted(rep['records'][0]), t + 'csv: sorted header, a row per record')
        t_raises(ValueError, printreport, (rep, f1, 'xml'), t + 'unknown format')

        t = 'run : '
        t_is(_exit_status(['grover_scan', '--n', '4,8', '--out', f1]), 0, None,
             t + 'passing experiment exits 0')
        t_is(json.loads(_read(f1))['subcommand'], 'grover_scan', None,
             t + 'report written to --out')
        t_is(_exit_status(['verify_reduction', '--n', '5', '--out', f1]), 2, None,
             t + 'odd n is a usage error')
        t_is(_exit_status(['no_such_command']), 2, None, t + 'unknown subcommand')
    finally:
        remove(f1)
        remove(f2)

    t_end()


if __name__ == '__main__':
    t_cmd(quiet=False)
