# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Extension of a permutation on [n-1] to one on [n].
"""

from pypermsearch.permutation import Permutation


def extend_permutation(p):
    """Returns the permutation on [n] that agrees with C{p} on [n-1] and
    maps n to n. The position of 1, and so the class, is unchanged.
    """
    return Permutation(list(p.map) + [p.n + 1])
