# Copyright (c) 2026 PYPERMSEARCH Developers. All rights reserved.
# Use of this source code is governed by a BSD-style
# license that can be found in the LICENSE file.

"""Tests for the classical query engine and the classical fixtures.
"""

from fractions import Fraction

from pypermsearch.baseline_perm_solver import baseline_perm_solver
from pypermsearch.classical_algorithm import ClassicalAlgorithm
from pypermsearch.counted_oracle import CountedOracle
from pypermsearch.errors import ErrorBudgetError, InstanceError, QueryError, \
    RandomnessExhausted
from pypermsearch.idx_class import P1
from pypermsearch.idx_step import query, rand, sample
from pypermsearch.instance_errors import instance_error
from pypermsearch.noisy_solvers import noisy_perm_solver, noisy_search_solver
from pypermsearch.permutation import Permutation
from pypermsearch.rand_stream import SeededStream, ExplicitStream
from pypermsearch.relay import relay, ask, answer
from pypermsearch.run_classical import run_classical
from pypermsearch.sample_uniform_in_class import sample_uniform_in_class
from pypermsearch.search_solvers import constant_output, first_index_search, \
    random_guess
from pypermsearch.searchinstance import SearchInstance
from pypermsearch.truncated_scan_solver import truncated_scan_solver

from pypermsearch.t.t_begin import t_begin
from pypermsearch.t.t_is import t_is
from pypermsearch.t.t_ok import t_ok
from pypermsearch.t.t_raises import t_raises
from pypermsearch.t.t_end import t_end


def _wrap(n, inner, on_query):
    def behavior(n):
        out = yield from relay(inner.start(), on_query)
        return out
    return ClassicalAlgorithm(n, behavior, 'wrapped')


def t_classical(quiet=False):
    """Tests for C{run_classical}, transcripts, C{relay} and the fixtures.
    """
    n_tests = 25

    t_begin(n_tests, quiet)

    t = 'run_classical : '
    oracle = CountedOracle(Permutation([2, 1, 3, 4]))
    tr = run_classical(constant_output(4, 1), oracle)
    t_ok(tr.output == 1 and oracle.count == 0 and tr.queries == [],
         t + 'constant output makes no query')

    oracle = CountedOracle(Permutation([2, 1, 3, 4]))
    tr = run_classical(baseline_perm_solver(4), oracle)
    t_is(tr.output, 1, None, t + 'baseline finds pi^-1(1) = 2')
    t_is(tr.queries, [(1, 2), (2, 1)], None, t + 'baseline queries')
    t_is(oracle.count, 2, None, t + 'counted oracle tally')

    tr = run_classical(baseline_perm_solver(2), CountedOracle(Permutation([2, 1])))
    t_ok(tr.output == 1 and len(tr.queries) == 2, t + 'n = 2, [2,1]')
    tr = run_classical(baseline_perm_solver(2), CountedOracle(Permutation([1, 2])))
    t_ok(tr.output == 0 and len(tr.queries) == 1, t + 'n = 2, [1,2]')

    alg = truncated_scan_solver(6, 2)
    p = Permutation([3, 4, 5, 6, 1, 2])
    d1 = run_classical(alg, CountedOracle(p), SeededStream(9)).dump()
    d2 = run_classical(alg, CountedOracle(p), SeededStream(9)).dump()
    t_ok(d1 == d2, t + 'same seed, same transcript')

    tr = run_classical(truncated_scan_solver(4, 1),
                       CountedOracle(Permutation([2, 1, 3, 4])), [1])
    t_is(tr.dump(), 'q 1 -> 2\nr 1\nout 1\n', None, t + 'transcript text form')
    t_is(tr.randomness, [1], None, t + 'consumed symbols')

    def bad_query(n):
        v = yield query(n + 1)
        return v

    def not_a_bit(n):
        return 2
        yield

    t_raises(QueryError, run_classical,
             (ClassicalAlgorithm(3, bad_query), CountedOracle(SearchInstance(3))),
             t + 'query outside [n]')
    t_raises(InstanceError, run_classical,
             (baseline_perm_solver(3), CountedOracle(SearchInstance(4))),
             t + 'oracle domain mismatch')
    t_raises(RandomnessExhausted, run_classical,
             (random_guess(2), CountedOracle(SearchInstance(2))),
             t + 'no randomness for a randomized algorithm')
    t_raises(ValueError, run_classical,
             (ClassicalAlgorithm(2, not_a_bit), CountedOracle(SearchInstance(2))),
             t + 'output is not a bit')

    t = 'CountedOracle : '
    oracle = CountedOracle(lambda i: i % 2, 3)
    t_ok(oracle(3) == 1 and oracle(2) == 0 and oracle.count == 2,
         t + 'plain callable')
    t_raises(QueryError, oracle, (4,), t + 'query outside [n]')

    t = 'relay : '
    alg = _wrap(3, first_index_search(3), lambda i: ask(4 - i))
    tr = run_classical(alg, CountedOracle(SearchInstance(3, 3)))
    t_ok(tr.output == 1 and tr.queries == [(3, 1)], t + 'rewritten query')
    alg = _wrap(3, first_index_search(3), lambda i: answer(1))
    tr = run_classical(alg, CountedOracle(SearchInstance(3)))
    t_ok(tr.output == 1 and tr.queries == [], t + 'locally answered query')
    alg = _wrap(2, random_guess(2), ask)
    tr = run_classical(alg, CountedOracle(SearchInstance(2)), [1])
    t_ok(tr.output == 1 and tr.randomness == [1], t + 'randomness passes up')

    def sampler(n):
        v = yield sample(lambda s: s.randint(5))
        return v % 2

    tr = run_classical(ClassicalAlgorithm(2, sampler),
                       CountedOracle(SearchInstance(2)), ExplicitStream([4]))
    t_ok(tr.output == 0 and tr.randomness == [4], t + 'sampler on the stream')

    def forced_then_coin(n):
        p = yield sample(lambda s: sample_uniform_in_class(2, P1, s))
        coin = yield rand(2)
        return coin if p.value(1) == 2 else 1 - coin

    alg = ClassicalAlgorithm(2, forced_then_coin)
    tr = run_classical(alg, CountedOracle(SearchInstance(2)), SeededStream(3))
    again = run_classical(alg, CountedOracle(SearchInstance(2)), tr.randomness)
    t_ok(len(tr.randomness) == 1 and again.output == tr.output,
         t + 'forced choice records no symbol, so the run replays')

    t = 'noisy solvers : '
    alg = noisy_perm_solver(4, Fraction(1, 5), Fraction(2, 5))
    t_is(instance_error(alg, Permutation([1, 2, 3, 4]))[0], Fraction(1, 5), None,
         t + 'P0 error')
    t_is(instance_error(alg, Permutation([2, 1, 3, 4]))[0], Fraction(2, 5), None,
         t + 'P1 error')
    alg = noisy_search_solver(3, Fraction(1, 10), Fraction(3, 10))
    t_ok(instance_error(alg, SearchInstance(3))[0] == Fraction(1, 10) and
         instance_error(alg, SearchInstance(3, 2))[0] == Fraction(3, 10),
         t + 'search errors')
    t_is(instance_error(noisy_search_solver(3, 0, 0), SearchInstance(3, 1)),
         (0, 3, 3), None, t + 'zero noise, full scan')
    t_raises(ErrorBudgetError, noisy_search_solver, (3, Fraction(3, 2), 0),
             t + 'error above 1')

    t_end()


if __name__ == '__main__':
    t_classical(quiet=False)
