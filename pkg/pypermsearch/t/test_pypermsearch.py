# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Run all PYPERMSEARCH tests.
"""

from pypermsearch.t.t_run_tests import t_run_tests


def test_pypermsearch(verbose=False):
    """Run all PYPERMSEARCH tests.

    Prints the details of the individual tests if verbose is true. Returns
    0 when every test passed, 1 otherwise.
    """
    tests = []

    ## instances and sampling
    tests.append('t_instances')
    tests.append('t_build_h')
    tests.append('t_sampling')

    ## query engines
    tests.append('t_classical')
    tests.append('t_statevector')
    tests.append('t_oracles')
    tests.append('t_grover')

    ## reductions
    tests.append('t_error_bounds')
    tests.append('t_reduction_b')
    tests.append('t_search_to_permutation')
    tests.append('t_odd_n')

    ## measurement and experiments
    tests.append('t_measure')
    tests.append('t_cmd')

    return t_run_tests(tests, verbose)


if __name__ == '__main__':
    import sys
    sys.exit(test_pypermsearch(verbose=True))
