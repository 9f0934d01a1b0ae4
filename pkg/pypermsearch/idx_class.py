# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Defines constants for the instance classes.

    0.  C{P0}               permutations with pi^-1(1) odd ("no" instances)
    1.  C{P1}               permutations with pi^-1(1) even ("yes" instances)
    2.  C{Q}                functions with a unique collision at 1 whose
                            colliding pair has one odd and one even member
    3.  C{NOT_CLASSIFIED}   anything else

C{CLASS_NAMES} maps each constant to its printable tag.
"""

P0              = 0
P1              = 1
Q               = 2
NOT_CLASSIFIED  = 3

CLASS_NAMES = {P0: 'P0', P1: 'P1', Q: 'Q', NOT_CLASSIFIED: 'NotClassified'}
