import unittest

from hypothesis import given, settings

from lib.lpt.core import formula as fm
from lib.lpt.core.exc import BudgetExceeded
from lib.lpt.core.parser import parse
from lib.lpt.engine.tree import build_tree
from lib.lpt.oracle.continuations import (Verdict, check_budget, continuations, enumeration_size,
                                          powerset, status_under_continuations)
from lib.lpt.oracle.semantics import holds, oracle_tracking_vector, truth_vectors
from lib.lpt.utils.BoundedCache import BoundedCache
from test._fixtures import all_traces, formulas, make_trace, traces

KEY_TRACE = make_trace([], [], ["keyA"])

# operands of the duality battery
BATTERY = [parse(text) for text in [
    "a", "b", "!a", "true", "X a", "F b", "G a", "a & b", "a | b", "a U b",
    "X b", "a -> b", "b W a", "G(a -> X b)", "F a & G b", "!b", "a R b", "a M b",
    "X !a", "F(a & b)", "b U X a", "G F a",
]]
PAIRS = list(zip(BATTERY, BATTERY[7:] + BATTERY[:7]))


class TestHolds(unittest.TestCase):

    def test_examples(self):
        self.assertTrue(holds(parse("F keyA"), KEY_TRACE, 0))
        self.assertFalse(holds(parse("X a"), make_trace(["a"]), 0))
        self.assertTrue(holds(parse("a R b"), make_trace(["b"], ["b"]), 0))
        self.assertFalse(holds(parse("a M b"), make_trace(["b"], ["b"]), 0))
        self.assertTrue(holds(parse("a M b"), make_trace(["b"], ["a", "b"]), 0))
        self.assertTrue(holds(parse("a W b"), make_trace(["a"]), 0))
        self.assertFalse(holds(parse("a U b"), make_trace(["a"]), 0))

    def test_out_of_range(self):
        self.assertRaises(IndexError, holds, parse("a"), make_trace(["a"]), 1)
        self.assertRaises(IndexError, holds, parse("a"), make_trace(["a"], origin=2), 1)

    def test_tracking_vectors(self):
        self.assertEqual(oracle_tracking_vector(parse("keyA"), KEY_TRACE), [False, False, True])
        self.assertEqual(oracle_tracking_vector(fm.true(), KEY_TRACE), [True, True, True])
        self.assertEqual(oracle_tracking_vector(parse("G(a -> X b)"), make_trace(["a"], ["b"], [])),
                         [True, True, True])

    def test_cache_is_bound_to_one_trace(self):
        cache = BoundedCache(size_limit=1000)
        f = parse("F a U b")
        first = make_trace(["a"], ["b"])
        self.assertTrue(holds(f, first, 0, cache))
        self.assertTrue(holds(f, first, 0, cache))
        self.assertGreater(cache.hits, 0)
        second = make_trace(["a"], [])
        self.assertFalse(holds(f, second, 0, cache))
        self.assertIs(cache.owner, second)

    @settings(max_examples=200, deadline=None)
    @given(formulas, traces)
    def test_truth_vectors_match_holds(self, f, trace):
        tree = build_tree(f)
        cache = BoundedCache(size_limit=100000)
        values = truth_vectors(tree, trace)
        for node in tree:
            self.assertEqual(values[node.index], oracle_tracking_vector(node.formula, trace, cache))

    def test_duality(self):
        self.assertGreaterEqual(len(PAIRS), 20)
        for trace in all_traces(["a", "b"], 4):
            cache = BoundedCache(size_limit=100000)
            for f, g in PAIRS:
                for t in trace.times():
                    value = lambda formula: holds(formula, trace, t, cache)
                    context = "%s / %s on %r at %i" % (f, g, trace, t)
                    self.assertEqual(value(fm.not_(f)), not value(f), context)
                    self.assertEqual(value(fm.eventually(f)), value(fm.until(fm.true(), f)), context)
                    self.assertEqual(value(fm.globally(f)), not value(fm.eventually(fm.not_(f))), context)
                    self.assertEqual(value(fm.weak_until(f, g)),
                                     value(fm.until(f, g)) or value(fm.globally(f)), context)
                    self.assertEqual(value(fm.strong_release(f, g)),
                                     value(fm.until(g, fm.and_(f, g))), context)
                    self.assertEqual(value(fm.release(f, g)),
                                     not value(fm.until(fm.not_(f), fm.not_(g))), context)

    def test_exhaustive_trace_count(self):
        self.assertEqual(len(all_traces(["a", "b"], 4)), 4 ** 4 + 4 ** 3 + 4 ** 2 + 4)


class TestContinuations(unittest.TestCase):

    def test_powerset(self):
        self.assertEqual(powerset(["a", "b"]),
                         [frozenset(), frozenset(["a"]), frozenset(["b"]), frozenset(["a", "b"])])

    def test_shorter_continuations_first(self):
        extensions = list(continuations(["a"], 2))
        self.assertEqual(len(extensions), 1 + 2 + 4)
        self.assertEqual(extensions[0], ())
        lengths = [len(extension) for extension in extensions]
        self.assertEqual(lengths, sorted(lengths))

    def test_budget(self):
        self.assertEqual(enumeration_size(["a", "b"], 3), 64)
        self.assertEqual(check_budget(["a", "b"], 2, cap=16), 16)
        self.assertRaises(BudgetExceeded, check_budget, ["a", "b"], 2, 10)
        self.assertRaises(BudgetExceeded, status_under_continuations,
                          parse("F a"), make_trace([]), 0, ["a", "b", "c"], 8, 1000)


class TestStatus(unittest.TestCase):

    def test_examples(self):
        self.assertIs(status_under_continuations(parse("F keyB"), KEY_TRACE, 0, horizon=2),
                      Verdict.OPEN)
        for horizon in range(4):
            self.assertIs(status_under_continuations(parse("a"), make_trace(["a"]), 0, ["a"], horizon),
                          Verdict.TRUE)
        self.assertIs(status_under_continuations(parse("G a"), make_trace(["a"]), 0, ["a"], 1),
                      Verdict.OPEN)
        self.assertIs(status_under_continuations(parse("F keyA"), KEY_TRACE, 0, horizon=2),
                      Verdict.TRUE)

    def test_bad_arguments(self):
        self.assertRaises(IndexError, status_under_continuations, parse("a"), KEY_TRACE, 3)
        self.assertRaises(ValueError, status_under_continuations, parse("a"), KEY_TRACE, 0, None, -1)

    def test_refutation_is_not_monotone_in_the_horizon(self):
        # a verdict of False at K can turn Open at K + 1
        prefix = make_trace([])
        self.assertIs(status_under_continuations(parse("F b"), prefix, 0, ["b"], 0), Verdict.FALSE)
        self.assertIs(status_under_continuations(parse("F b"), prefix, 0, ["b"], 1), Verdict.OPEN)

    def test_open_persists_and_verdicts_hold_for_shorter_horizons(self):
        cases = [
            ("F b", [[]]), ("G a", [["a"]]), ("a U b", [["a"], ["a"]]), ("X X a", [["a"]]),
            ("G(a -> X b)", [["a"], ["b"]]), ("a R b", [["b"]]), ("F a & G b", [["b"], []]),
        ]
        for text, steps in cases:
            f, prefix = parse(text), make_trace(*steps)
            for t in prefix.times():
                verdicts = [status_under_continuations(f, prefix, t, ["a", "b"], horizon)
                            for horizon in range(4)]
                for k, verdict in enumerate(verdicts):
                    if verdict is Verdict.OPEN:
                        self.assertTrue(all(v is Verdict.OPEN for v in verdicts[k:]), text)
                    else:
                        self.assertTrue(all(v is verdict for v in verdicts[:k + 1]), text)

    @settings(max_examples=150, deadline=None)
    @given(formulas, traces)
    def test_zero_horizon_is_whole_trace_evaluation(self, f, trace):
        cache = BoundedCache(size_limit=100000)
        for t in trace.times():
            expected = Verdict.TRUE if holds(f, trace, t, cache) else Verdict.FALSE
            self.assertIs(status_under_continuations(f, trace, t, ["a", "b"], 0, cache=cache), expected)


if __name__ == '__main__':
    unittest.main()
