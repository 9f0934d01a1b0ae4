# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Used to set and retrieve a PYPERMSEARCH options dict.
"""

EXPERIMENT_OPTIONS = [
    ('n', '', '''domain size(s); a single even integer for verify_reduction,
a comma separated list for grover_scan and sampling_tests,
empty - use the subcommand default'''),

    ('seed', 0, 'seed of the random stream'),

    ('mode', 'exact', '''how errors are measured:
'exact' - enumeration of instances and randomness,
'mc'    - Monte Carlo with Hoeffding confidence intervals'''),

    ('trials', 20000, 'number of Monte Carlo trials per estimate'),

    ('eps_bound', 0.49, '''assumed bound on the distributional error of the
PERMUTATION solvers in verify_reduction, in [0, 1/2)'''),

    ('out', '', 'report file name, defaults to stdout'),

    ('format', 'json', '''report format:
'json' - JSON document with sorted keys,
'csv'  - one row per record''')
]

ENGINE_OPTIONS = [
    ('qubit_cap', 22, 'largest number of simulated qubits'),

    ('tol', 1e-9, 'absolute tolerance of exact-mode float comparisons'),

    ('perm_enum_cap', 8, 'largest n for enumeration of all n! permutations'),

    ('mu_enum_cap', 65536, 'largest n for enumeration of search instances'),

    ('max_paths', 10**7, 'largest number of randomness paths enumerated '
     'for a single run')
]

STATS_OPTIONS = [
    ('confidence', 0.99, 'confidence level of Hoeffding intervals'),

    ('alpha', 0.01, 'significance level of the chi-square uniformity test'),

    ('draws', 60000, 'number of draws in the sampling experiments')
]

OUTPUT_OPTIONS = [
    ('verbose', 0, '''amount of progress info written to stderr:
0 - print no progress info,
1 - print a summary per subcommand,
2 - print a line per fixture''')
]


def psoption(psopt=None, **kw_args):
    """Used to set and retrieve a PYPERMSEARCH options dict.

    C{opt = psoption()} returns the default options dict

    C{opt = psoption(NAME1=VALUE1, NAME2=VALUE2, ...)} returns the default
    options with new values for the specified options.

    C{opt = psoption(OPT, NAME1=VALUE1, ...)} same as above except it uses
    the options dict OPT as a base instead of the defaults.

    Examples::
        opt = psoption(SEED=7, MODE='mc')
        opt = psoption(opt, QUBIT_CAP=16)
    """
    default_psopt = {}

    options = EXPERIMENT_OPTIONS + ENGINE_OPTIONS + STATS_OPTIONS + \
        OUTPUT_OPTIONS

    for name, default, _ in options:
        default_psopt[name.upper()] = default

    if psopt is None:
        psopt = default_psopt
    else:
        ## fill in anything missing from a partial dict
        merged = default_psopt
        merged.update(psopt)
        psopt = merged

    psopt.update(kw_args)

    return psopt
