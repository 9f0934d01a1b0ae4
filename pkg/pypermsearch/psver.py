# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""PYPERMSEARCH version info.
"""

def psver(*args):
    """Returns PYPERMSEARCH version info for current installation.
    """

    ver = {'Name': 'PYPERMSEARCH',
           'Version': '1.0.0',
           'Release':  '',
           'Date': '18-October-2026',
           'Schema': 'pypermsearch-report/1'}

    return ver
