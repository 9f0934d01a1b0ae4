# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Interactive classical algorithms and their transcripts.
"""


class ClassicalAlgorithm(object):
    """A classical, possibly randomized, decision procedure over an oracle
    on [n].

    C{behavior(n)} must return a generator: it yields requests built with
    the constructors of L{idx_step} (a uniform symbol, a weighted draw, a
    sampler run on the engine's stream, or an oracle query), receives the
    answer to each request, and finally returns the output bit. Its queries
    and output may depend only on n, the randomness received and the oracle
    answers received.

    C{enumerable} declares that every randomness request draws from a
    finite alphabet, which is what exact error computation needs.

    Example::
        def behavior(n):
            v = yield query(1)
            return v

        alg = ClassicalAlgorithm(3, behavior, 'first index')
    """

    def __init__(self, n, behavior, name='', enumerable=True):
        self.n = n
        self.behavior = behavior
        self.name = name or getattr(behavior, '__name__', 'algorithm')
        self.enumerable = enumerable

    def start(self):
        return self.behavior(self.n)

    def __repr__(self):
        return '<ClassicalAlgorithm %s n=%d>' % (self.name, self.n)


class QueryTranscript(object):
    """Record of one run: the queries as C{(index, answer)} pairs, the
    randomness symbols consumed, the output bit, and all of it in order of
    occurrence in C{events}.
    """

    def __init__(self):
        self.events = []
        self.output = None

    @property
    def queries(self):
        return [(e[1], e[2]) for e in self.events if e[0] == 'q']

    @property
    def randomness(self):
        return [e[1] for e in self.events if e[0] == 'r']

    def dump(self):
        """Returns the line-oriented text form::

            r 1
            q 2 -> 1
            out 1
        """
        lines = []
        for e in self.events:
            if e[0] == 'q':
                lines.append('q %d -> %d' % (e[1], e[2]))
            else:
                lines.append('r %d' % e[1])
        lines.append('out %s' % self.output)
        return '\n'.join(lines) + '\n'
