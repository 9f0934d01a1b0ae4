# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests if a call raises a given exception.
"""

from pypermsearch.t.t_ok import t_ok


def t_raises(exc, fn, args=(), msg=''):
    """Calls C{fn(*args)} and counts a passed test iff it raises C{exc}.
    Any other exception propagates.
    """
    try:
        fn(*args)
    except exc:
        t_ok(True, msg)
        return
    t_ok(False, msg)
