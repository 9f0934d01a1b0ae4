# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Enumerates every randomness path of a stream-driven procedure.
"""

from fractions import Fraction

from pypermsearch.errors import EnumerationError


class _PathStream(object):
    """Stream following a fixed prefix of choices, then always choosing the
    first option, while recording the options seen at every draw.
    """

    def __init__(self, prefix):
        self.prefix = prefix
        self.choices = []
        self.sizes = []
        self.prob = Fraction(1)

    def _choose(self, count):
        d = len(self.choices)
        c = self.prefix[d] if d < len(self.prefix) else 0
        self.choices.append(c)
        self.sizes.append(count)
        return c

    def randint(self, k):
        if k < 1:
            raise ValueError('randint: alphabet size must be positive, got %d' % k)
        if k == 1:
            return 0
        c = self._choose(k)
        self.prob = self.prob * Fraction(1, k)
        return c

    def weighted(self, probs):
        support = [i for i in range(len(probs)) if probs[i] != 0]
        if not support:
            raise ValueError('weighted: empty support in %r' % (probs,))
        c = self._choose(len(support))
        i = support[c]
        self.prob = self.prob * probs[i]
        return i


def enum_randomness(proc, max_paths=None):
    """Runs C{proc(stream)} once for every randomness path.

    C{proc} must consume randomness only through the stream it is given and
    must be deterministic given the symbols it draws. Returns a list of
    C{(prob, value)} pairs in lexicographic order of the symbol sequences;
    the probabilities are exact L{Fraction}s whenever all draws are uniform
    or use rational weights, and sum to 1.

    Raises L{EnumerationError} once more than C{max_paths} paths are seen.
    """
    results = []
    stack = [()]
    while stack:
        prefix = stack.pop()
        s = _PathStream(prefix)
        value = proc(s)

        ## schedule the unexplored siblings of every fresh draw,
        ## deepest last so that they pop first
        for depth in range(len(prefix), len(s.choices)):
            base = tuple(s.choices[:depth])
            for alt in range(s.sizes[depth] - 1, 0, -1):
                stack.append(base + (alt,))

        results.append((s.prob, value))
        if max_paths is not None and len(results) > max_paths:
            raise EnumerationError('enum_randomness: more than %d randomness '
                                   'paths' % max_paths)

    return results
