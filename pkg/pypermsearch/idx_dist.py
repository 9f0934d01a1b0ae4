# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Defines constants naming the input distributions.

    0.  C{MU}       equal mixture of the no instance and the uniform
                    distribution over yes instances of unique search
    1.  C{MU0}      the lone no instance
    2.  C{MU1}      uniform over yes instances
    3.  C{UNIFORM}  uniform over all permutations on [n]

C{DIST_NAMES} maps the constants to their option-string spelling and
C{DIST_CODES} is the inverse map.
"""

MU      = 0
MU0     = 1
MU1     = 2
UNIFORM = 3

DIST_NAMES = {MU: 'mu', MU0: 'mu0', MU1: 'mu1', UNIFORM: 'uniform'}
DIST_CODES = dict((v, k) for k, v in DIST_NAMES.items())
