# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Random self-reduction of a PERMUTATION algorithm.
"""

from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.errors import InstanceError
from pypermsearch.idx_step import query, sample
from pypermsearch.relay import relay
from pypermsearch.sample_omega_sigma import sample_omega_sigma


def permutation_symmetrize(a):
    """Returns the algorithm that draws M{(omega, sigma)} with
    L{sample_omega_sigma} and runs C{a} on M{omega o pi o sigma}; a query M{i}
    becomes one query of M{pi} at M{sigma(i)}, answered with M{omega} of the
    result.

    The composed permutation is uniform in the class of M{pi}, so the error
    of the result on every instance equals C{a}'s average error over that
    class. Query counts are unchanged.
    """
    if not isinstance(a, ClassicalAlgorithm):
        raise InstanceError('permutation_symmetrize: %r is not a classical '
                            'algorithm' % (a,))

    def symmetrized(n):
        omega, sigma = yield sample(lambda s: sample_omega_sigma(n, s))

        def composed(i):
            v = yield query(sigma.value(i))
            return omega.value(v)

        out = yield from relay(a.start(), composed)
        return out

    return ClassicalAlgorithm(a.n, symmetrized, 'psym(%s)' % a.name,
                              a.enumerable)
