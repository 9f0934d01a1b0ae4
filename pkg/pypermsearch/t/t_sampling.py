# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests for random streams, samplers and the random self-reduction.
"""

from fractions import Fraction

from pypermsearch.compose_self_reduction import compose_self_reduction
from pypermsearch.enum_instances import enum_permutations
from pypermsearch.enum_randomness import enum_randomness
from pypermsearch.errors import EnumerationError, InstanceError, \
    RandomnessExhausted
from pypermsearch.extend_permutation import extend_permutation
from pypermsearch.idx_class import P0, P1
from pypermsearch.mu_distribution import MuDistribution, dist_code, sample_mu
from pypermsearch.parity_class import parity_class
from pypermsearch.permutation import Permutation, identity
from pypermsearch.rand_stream import SeededStream, ExplicitStream
from pypermsearch.sample_omega_sigma import sample_omega_sigma
from pypermsearch.sample_uniform_in_class import sample_uniform_in_class
from pypermsearch.sample_uniform_permutation import sample_uniform_permutation
from pypermsearch.uniformity_test import uniformity_test

from pypermsearch.t.t_begin import t_begin
from pypermsearch.t.t_is import t_is
from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_raises import t_raises
from pypermsearch.t.t_end import t_end


def _law(proc):
    """Exact law of C{proc(stream)} as a dict value -> probability."""
    law = {}
    for prob, value in enum_randomness(proc):
        law[value] = law.get(value, Fraction(0)) + prob
    return law


def t_sampling(quiet=False):
    """Tests for streams, uniform samplers, M{(omega, sigma)} and the mu
    distributions.
    """
    n_tests = 34

    t_begin(n_tests, quiet)

    t = 'streams : '
    a, b = SeededStream(11), SeededStream(11)
    t_ok([a.randint(7) for _ in range(50)] == [b.randint(7) for _ in range(50)],
         t + 'equal seeds give equal symbols')
    s = ExplicitStream([1, 0])
    t_ok(s.randint(2) == 1 and s.randint(3) == 0, t + 'explicit symbols replay')
    t_raises(RandomnessExhausted, s.randint, (2,), t + 'explicit list runs out')
    s = ExplicitStream([0, 1])
    t_ok(s.randint(1) == 0 and s.randint(2) == 0 and s.randint(2) == 1,
         t + 'randint(1) consumes no symbol')
    t_raises(ValueError, ExplicitStream([3]).randint, (2,),
             t + 'symbol outside the alphabet')

    t = 'enum_randomness : '
    law = _law(lambda s: s.weighted([Fraction(1, 3), 0, Fraction(2, 3)]))
    t_is(law, {0: Fraction(1, 3), 2: Fraction(2, 3)}, None,
         t + 'rational weights, zero weight skipped')
    law = _law(lambda s: (s.randint(2), s.randint(3)))
    t_ok(len(law) == 6 and set(law.values()) == set([Fraction(1, 6)]),
         t + 'nested uniform draws')
    t_raises(EnumerationError, enum_randomness,
             (lambda s: s.randint(10), 5), t + 'path cap')

    t = 'sample_uniform_permutation : '
    t_is(sample_uniform_permutation(1, ExplicitStream([])).map, (1,), None,
         t + 'n = 1 draws nothing')
    law = _law(lambda s: sample_uniform_permutation(2, s).map)
    t_is(law, {(1, 2): Fraction(1, 2), (2, 1): Fraction(1, 2)}, None,
         t + 'n = 2 exact')
    law = _law(lambda s: sample_uniform_permutation(4, s))
    t_ok(set(law) == set(enum_permutations(4)) and
         set(law.values()) == set([Fraction(1, 24)]), t + 'n = 4 exact')
    rng = SeededStream(0)
    draws = [sample_uniform_permutation(3, rng).map for _ in range(60000)]
    t_ok(uniformity_test(draws, 6, 0.001).passed, t + 'n = 3 chi-square')
    t_raises(InstanceError, sample_uniform_permutation, (0, rng), t + 'n = 0')

    t = 'sample_uniform_in_class : '
    law = _law(lambda s: sample_uniform_in_class(2, P1, s).map)
    t_is(law, {(2, 1): Fraction(1)}, None, t + 'n = 2, P1')
    for klass in (P0, P1):
        law = _law(lambda s: sample_uniform_in_class(4, klass, s))
        t_ok(set(law) == set(enum_permutations(4, klass)) and
             set(law.values()) == set([Fraction(1, 12)]),
             t + 'n = 4, class %d exact' % klass)
    law = _law(lambda s: sample_uniform_in_class(5, P1, s).inverse(1))
    t_is(law, {2: Fraction(1, 2), 4: Fraction(1, 2)}, None,
         t + 'n = 5, P1 puts 1 at an even slot')
    t_raises(InstanceError, sample_uniform_in_class, (1, P1, rng),
             t + 'empty class')

    t = 'sample_omega_sigma : '
    omega, sigma = sample_omega_sigma(1, ExplicitStream([]))
    t_ok(omega == identity(1) and sigma == identity(1), t + 'n = 1')
    law = _law(lambda s: tuple(p.map for p in sample_omega_sigma(3, s)))
    t_ok(len(law) == 4 and set(law.values()) == set([Fraction(1, 4)]) and
         all(w[0] == 1 and s[1] == 2 for w, s in law), t + 'n = 3 exact')

    t = 'compose_self_reduction : '
    p = Permutation([2, 1, 3, 4])
    q = compose_self_reduction(p, Permutation([1, 3, 2, 4]),
                               Permutation([3, 2, 1, 4]))
    t_is(q.map, (2, 1, 3, 4), None, t + 'sigma first, then pi, then omega')
    t_ok(compose_self_reduction(p, identity(4), identity(4)) == p,
         t + 'identities')
    t_raises(InstanceError, compose_self_reduction,
             (p, Permutation([2, 1, 3, 4]), identity(4)), t + 'omega moves 1')
    t_raises(InstanceError, compose_self_reduction,
             (p, identity(4), Permutation([2, 1, 3, 4])),
             t + 'sigma mixes parities')
    rng = SeededStream(5)
    ok = True
    for _ in range(100):
        omega, sigma = sample_omega_sigma(4, rng)
        for p in enum_permutations(4):
            ok = ok and parity_class(compose_self_reduction(p, omega, sigma)) \
                == parity_class(p)
    t_ok(ok, t + 'class preserved for 100 random pairs')
    p = Permutation([2, 1, 3, 4])
    law = _law(lambda s: compose_self_reduction(p, *sample_omega_sigma(4, s)))
    t_ok(set(law) == set(enum_permutations(4, P1)) and
         set(law.values()) == set([Fraction(1, 12)]),
         t + 'uniform on the class of pi')

    t = 'extend_permutation : '
    t_is(extend_permutation(Permutation([1])).map, (1, 2), None, t + '[1]')
    q = extend_permutation(Permutation([2, 1, 3]))
    t_ok(q.map == (2, 1, 3, 4) and parity_class(q) == P1, t + '[2,1,3]')

    t = 'mu distributions : '
    t_ok(MuDistribution(4, 'mu0').support()[0][0].marked is None and
         sample_mu(4, 'mu0', SeededStream(1)).marked is None, t + 'mu0')
    law = _law(lambda s: sample_mu(4, 'mu1', s).marked)
    t_is(law, dict((j, Fraction(1, 4)) for j in range(1, 5)), None, t + 'mu1')
    law = _law(lambda s: sample_mu(4, 'mu', s).marked)
    expected = dict((j, Fraction(1, 8)) for j in range(1, 5))
    expected[None] = Fraction(1, 2)
    t_is(law, expected, None, t + 'mu')
    t_is(dict((f.marked, w) for f, w in MuDistribution(4).support()), expected,
         None, t + 'mu support')
    t_raises(InstanceError, dist_code, ('mu2',), t + 'unknown variant')
    t_raises(InstanceError, MuDistribution, (3, 'uniform'),
             t + 'uniform is not a search distribution')

    t_end()


if __name__ == '__main__':
    t_sampling(quiet=False)
