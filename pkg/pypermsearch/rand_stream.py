# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Random streams driving every sampler and randomized algorithm.

A stream offers two draws: C{randint(k)}, a symbol uniform on C{range(k)},
and C{weighted(probs)}, an index drawn from an explicit probability vector.
Samplers never touch any other source of randomness, so the same code runs
against a seeded stream, an explicit list of symbols, or the path streams
of L{enum_randomness}.

A draw from a one-symbol alphabet, C{randint(1)}, returns 0 on every stream
and consumes no symbol.
"""

from numpy import asarray
from numpy.random import default_rng

from pypermsearch.errors import RandomnessExhausted


class SeededStream(object):
    """Stream backed by a numpy C{Generator} seeded with C{seed}.
    """

    def __init__(self, seed=0):
        self.seed = seed
        self.rng = default_rng(seed)

    def randint(self, k):
        if k < 1:
            raise ValueError('randint: alphabet size must be positive, got %d' % k)
        if k == 1:
            return 0
        return int(self.rng.integers(k))

    def weighted(self, probs):
        p = asarray([float(x) for x in probs])
        if len(p) == 0 or p.min() < 0 or p.sum() <= 0:
            raise ValueError('weighted: invalid probability vector %r' % (probs,))
        return int(self.rng.choice(len(p), p=p / p.sum()))


class ExplicitStream(object):
    """Stream replaying an explicit list of symbols.

    Each draw other than C{randint(1)} consumes the next symbol, which must
    be a valid choice for the request. Raises L{RandomnessExhausted} when
    the list runs out.
    """

    def __init__(self, symbols):
        self.symbols = list(symbols)
        self.pos = 0

    def _next(self):
        if self.pos >= len(self.symbols):
            raise RandomnessExhausted('explicit randomness exhausted after '
                                      '%d symbols' % len(self.symbols))
        s = self.symbols[self.pos]
        self.pos += 1
        return s

    def randint(self, k):
        if k < 1:
            raise ValueError('randint: alphabet size must be positive, got %d' % k)
        if k == 1:
            return 0
        s = self._next()
        if not 0 <= s < k:
            raise ValueError('randint: symbol %d outside range(%d)' % (s, k))
        return s

    def weighted(self, probs):
        s = self._next()
        if not 0 <= s < len(probs) or probs[s] == 0:
            raise ValueError('weighted: symbol %d has zero probability' % s)
        return s


def as_stream(randomness):
    """Returns a stream for C{randomness}: a stream is returned as is, a list
    or tuple of symbols becomes an L{ExplicitStream}, and C{None} gives an
    empty explicit stream, so any draw raises L{RandomnessExhausted}.
    """
    if randomness is None:
        return ExplicitStream([])
    if isinstance(randomness, (list, tuple)):
        return ExplicitStream(randomness)
    return randomness
