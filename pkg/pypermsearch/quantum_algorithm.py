# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Quantum query algorithms and their outcomes.
"""


def _is_one(v):
    return v == 1


class QuantumAlgorithm(object):
    """A quantum query algorithm deciding a property of an oracle on [n].

    C{registers} is the list of C{(name, width)} pairs of the algorithm's own
    workspace; the ancillas declared by the oracle are appended when the
    algorithm is run. C{body(state, oracle)} returns the final state, using
    the oracle only through C{oracle.apply}. The output bit is read from
    C{readout = (register, predicate)}: 1 on the basis values of the register
    satisfying the predicate.
    """

    def __init__(self, n, registers, body, readout=('answer', _is_one),
                 name=''):
        self.n = n
        self.registers = list(registers)
        self.body = body
        self.readout = readout
        self.name = name or getattr(body, '__name__', 'circuit')

    def __repr__(self):
        return '<QuantumAlgorithm %s n=%d>' % (self.name, self.n)


class MixedQuantumAlgorithm(object):
    """A quantum algorithm preceded by classical randomness.

    C{prepare(stream, oracle)} draws from the stream (see L{rand_stream}) and
    returns C{(alg, oracle2, flip)}: the L{QuantumAlgorithm} to run, the
    oracle to run it against (built from C{oracle}, whose tally counts the
    queries) and whether to negate its output. The draws must come from
    finite alphabets for exact evaluation.
    """

    def __init__(self, n, prepare, name=''):
        self.n = n
        self.prepare = prepare
        self.name = name or getattr(prepare, '__name__', 'mixed')

    def __repr__(self):
        return '<MixedQuantumAlgorithm %s n=%d>' % (self.name, self.n)


class QuantumOutcome(object):
    """Output distribution C{(p0, p1)} of one run and the number of queries
    made to the oracle it was run against. In shots mode C{samples} holds
    the sampled output bits.
    """

    def __init__(self, output_distribution, query_count, mode='exact',
                 samples=None):
        self.output_distribution = tuple(float(x) for x in output_distribution)
        self.query_count = query_count
        self.mode = mode
        self.samples = samples

    @property
    def p1(self):
        return self.output_distribution[1]

    def error(self, answer):
        """Probability of outputting the wrong bit when C{answer} is right."""
        return self.output_distribution[1 - answer]

    def __repr__(self):
        return '<QuantumOutcome p0=%.12g p1=%.12g queries=%d %s>' % (
            self.output_distribution + (self.query_count, self.mode))
