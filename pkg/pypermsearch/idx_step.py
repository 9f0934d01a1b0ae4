# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Defines constants for the requests a classical algorithm yields to the
engine, together with small constructors for them.

    0.  C{RAND}     request a symbol uniform on range(k)
    1.  C{DRAW}     request an index drawn from an explicit probability vector
    2.  C{SAMPLE}   run a sampler C{fn(stream)} on the engine's stream
    3.  C{QUERY}    query the oracle at a 1-based index

Example::

    coin = yield rand(2)
    v = yield query(i)
"""

RAND    = 0
DRAW    = 1
SAMPLE  = 2
QUERY   = 3


def rand(k):
    return (RAND, k)


def draw(probs):
    return (DRAW, tuple(probs))


def sample(fn):
    return (SAMPLE, fn)


def query(i):
    return (QUERY, i)
