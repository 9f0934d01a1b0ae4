# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Writes instances in their canonical one-line text form.
"""


def saveinstance(instance, fname=None):
    """Returns the canonical text form of C{instance} and, if C{fname} is
    given, writes it (with a trailing newline) to that file.

    The forms are 1-based and comma separated::

        perm n=4 map=2,1,3,4
        func n=4 map=1,1,3,4
        search n=4 marked=2
        search n=4 marked=-
    """
    s = repr(instance)
    if fname:
        with open(fname, 'w') as fd:
            fd.write(s + '\n')
    return s
