# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Runs a classical algorithm against a counted oracle.
"""

from pypermsearch.classical_algorithm import QueryTranscript
from pypermsearch.errors import InstanceError, QueryError
from pypermsearch.idx_step import RAND, DRAW, SAMPLE, QUERY
from pypermsearch.rand_stream import as_stream


class _RecordingStream(object):
    """Passes draws through to a stream and logs the symbols as events.
    """

    def __init__(self, stream, events):
        self.stream = stream
        self.events = events

    def randint(self, k):
        s = self.stream.randint(k)
        if k > 1:
            self.events.append(('r', s))
        return s

    def weighted(self, probs):
        s = self.stream.weighted(probs)
        self.events.append(('r', s))
        return s


def run_classical(alg, oracle, randomness=None):
    """Runs C{alg} against C{oracle} and returns its L{QueryTranscript}.

    C{randomness} is a stream (see L{rand_stream}), an explicit list of
    symbols, or C{None} for a deterministic algorithm. The transcript is a
    deterministic function of the symbols drawn and the oracle answers.

    Raises L{QueryError} if the algorithm queries outside [n] and
    L{RandomnessExhausted} if an explicit symbol list runs out.
    """
    if oracle.n != alg.n:
        raise InstanceError('run_classical: oracle domain %d does not match '
                            'n = %d of %s' % (oracle.n, alg.n, alg.name))

    transcript = QueryTranscript()
    stream = _RecordingStream(as_stream(randomness), transcript.events)

    gen = alg.start()
    send = None
    while True:
        try:
            kind, arg = gen.send(send)
        except StopIteration as e:
            output = e.value
            break

        if kind == RAND:
            send = stream.randint(arg)
        elif kind == DRAW:
            send = stream.weighted(arg)
        elif kind == SAMPLE:
            send = arg(stream)
        elif kind == QUERY:
            if not 1 <= arg <= alg.n:
                gen.close()
                raise QueryError('run_classical: %s queried %r outside 1..%d'
                                 % (alg.name, arg, alg.n))
            send = oracle(arg)
            transcript.events.append(('q', arg, send))
        else:
            raise ValueError('run_classical: unknown request %r' % (kind,))

    if output not in (0, 1):
        raise ValueError('run_classical: %s returned %r, not a bit' %
                         (alg.name, output))
    transcript.output = int(output)
    return transcript
