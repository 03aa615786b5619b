import unittest

from lib.lpt.core.exc import BudgetExceeded, FormatError, ShapeMismatch
from lib.lpt.core.parser import parse
from lib.lpt.engine import tracker
from lib.lpt.engine.tree import build_tree
from lib.lpt.oracle import checks
from lib.lpt.utils.instances import make_random, random_trace
from test._fixtures import KEY_FORMULA, make_trace

KEY_TRACE = make_trace([], [], ["keyA"])


def per_step_dumps(text, trace, finalize=False):
    dumps = []
    state = tracker.track(parse(text), trace, per_step=lambda snapshot: dumps.append(tracker.dump(snapshot)))
    if finalize:
        tracker.finalize(state)
        dumps.append(tracker.dump(state))
    return dumps


class TestRunInstance(unittest.TestCase):

    def test_key_instance_passes(self):
        report = checks.run_instance(parse(KEY_FORMULA), KEY_TRACE, horizon=4)
        self.assertTrue(report.passed)
        self.assertEqual(report.updates, 3)
        self.assertEqual(report.checked, {checks.SOUNDNESS: True, checks.LOCK_IN: True,
                                          checks.TERMINAL: True})
        self.assertEqual(report.as_dict()["violations"], [])

    def test_globally_implies_next_over_random_traces(self):
        random = make_random(7)
        tree = build_tree(parse("G(a -> X b)"))
        for _ in range(10):
            trace = random_trace(random, random.randint(1, 6), ["a", "b"])
            report = checks.run_instance(tree, trace, horizon=3)
            self.assertTrue(report.passed, report.as_dict())

    def test_recorded_dumps(self):
        tree = build_tree(parse(KEY_FORMULA))
        records = checks.records_from_dumps(per_step_dumps(KEY_FORMULA, KEY_TRACE, True), tree)
        self.assertEqual([record.time for record in records], [0, 1, 2, 2])
        report = checks.run_instance(tree, KEY_TRACE, records=records)
        self.assertTrue(report.passed)
        self.assertTrue(report.checked[checks.TERMINAL])

    def test_terminal_suite_needs_a_finalized_record(self):
        tree = build_tree(parse(KEY_FORMULA))
        records = checks.records_from_dumps(per_step_dumps(KEY_FORMULA, KEY_TRACE), tree)
        report = checks.run_instance(tree, KEY_TRACE, records=records)
        self.assertTrue(report.passed)
        self.assertFalse(report.checked[checks.TERMINAL])

    def test_corrupted_dump_is_caught(self):
        tree = build_tree(parse(KEY_FORMULA))
        dumps = per_step_dumps(KEY_FORMULA, KEY_TRACE)
        dumps[0]["vectors"][0][0] = 1
        report = checks.run_instance(tree, KEY_TRACE, records=checks.records_from_dumps(dumps, tree))
        self.assertFalse(report.passed)
        first = report.violations[0]
        self.assertEqual(first.check, checks.SOUNDNESS)
        self.assertEqual((first.node, first.t, first.time), (0, 0, 0))
        self.assertEqual((first.engine, first.oracle), (1, 0))
        self.assertEqual(first.continuation, [])
        self.assertIn(checks.LOCK_IN, [violation.check for violation in report.violations])

    def test_dump_shape_must_match(self):
        dumps = per_step_dumps(KEY_FORMULA, KEY_TRACE)
        self.assertRaises(ShapeMismatch, checks.records_from_dumps, dumps, build_tree(parse("a U b")))
        mixed = dumps[:1] + per_step_dumps("a U b", make_trace(["a"]))
        self.assertRaises(ShapeMismatch, checks.records_from_dumps, mixed)

    def test_record_past_the_trace(self):
        tree = build_tree(parse(KEY_FORMULA))
        records = checks.records_from_dumps(per_step_dumps(KEY_FORMULA, KEY_TRACE), tree)
        self.assertRaises(FormatError, checks.run_instance, tree, KEY_TRACE.prefix(1), 2, None, None,
                          records)

    def test_dump_vectors_must_fit_their_time(self):
        tree = build_tree(parse(KEY_FORMULA))
        dumps = per_step_dumps(KEY_FORMULA, KEY_TRACE)
        dumps[0]["vectors"] = [[-1, -1, -1] for _ in dumps[0]["vectors"]]
        self.assertRaises(FormatError, checks.records_from_dumps, dumps, tree, KEY_TRACE)
        records = checks.records_from_dumps(dumps, tree)
        self.assertRaises(FormatError, checks.run_instance, tree, KEY_TRACE, 2, None, None, records)

    def test_dump_time_must_fall_inside_the_trace(self):
        tree = build_tree(parse(KEY_FORMULA))
        dumps = per_step_dumps(KEY_FORMULA, make_trace([], []))
        shifted = make_trace([], [], origin=5)
        self.assertRaises(FormatError, checks.records_from_dumps, dumps, tree, shifted)
        records = checks.records_from_dumps(dumps, tree)
        self.assertRaises(FormatError, checks.check_soundness, tree, shifted, records, 1)

    def test_dump_node_types_are_checked(self):
        dumps = per_step_dumps(KEY_FORMULA, KEY_TRACE)
        dumps[0]["nodes"][1]["type"] = "Since"
        self.assertRaises(FormatError, checks.records_from_dumps, dumps)

    def test_check_record(self):
        trace = make_trace([], ["a"], origin=3)
        record = checks.Record(4, [[-1, 1]])
        self.assertIs(checks.check_record(record, trace), record)
        self.assertRaises(FormatError, checks.check_record, checks.Record(4, [[1]]), trace)
        self.assertRaises(FormatError, checks.check_record, checks.Record(2, []), trace)

    def test_budget(self):
        self.assertRaises(BudgetExceeded, checks.run_instance, parse(KEY_FORMULA), KEY_TRACE, 4,
                          None, 10)


class TestSuites(unittest.TestCase):

    def test_lock_in_violation(self):
        records = [checks.Record(0, [[1]]), checks.Record(1, [[-1, 1]])]
        violations = checks.check_lock_in(records)
        self.assertEqual(len(violations), 1)
        self.assertEqual((violations[0].engine, violations[0].oracle), (-1, 1))

    def test_shrinking_vectors(self):
        records = [checks.Record(0, [[1, 1]]), checks.Record(1, [[1]])]
        self.assertRaises(FormatError, checks.check_lock_in, records)

    def test_terminal_violation(self):
        tree = build_tree(parse("F a"))
        trace = make_trace([], ["a"])
        self.assertEqual(checks.check_terminal(tree, trace, [[1, 1], [0, 1]]), [])
        violations = checks.check_terminal(tree, trace, [[1, -1], [0, 1]])
        self.assertEqual([(v.node, v.t, v.engine, v.oracle) for v in violations], [(0, 1, -1, 1)])

    def test_soundness_reports_shortest_refutation(self):
        tree = build_tree(parse("F b"))
        # claims F b false at t=0 although one more step may bring b
        records = [checks.Record(0, [[0], [0]])]
        violations = checks.check_soundness(tree, make_trace([]), records, 2, ["b"])
        self.assertEqual(len(violations), 1)
        self.assertEqual(violations[0].continuation, [["b"]])
        self.assertEqual(violations[0].formula_text, "F b")

    def test_violation_as_dict(self):
        violation = checks.Violation(checks.SOUNDNESS, 1, 0, 2, 1, 0, [["a"]], "F a")
        self.assertEqual(violation.as_dict(), {"check": "soundness", "node": 1, "formula_text": "F a",
                                               "t": 0, "time": 2, "engine": 1, "oracle": 0,
                                               "continuation": [["a"]]})

    def test_instance_vocabulary(self):
        tree = build_tree(parse("F keyB"))
        self.assertEqual(list(checks.instance_vocabulary(tree, KEY_TRACE)), ["keyA", "keyB"])
        declared = make_trace(["a"], vocabulary=["a", "b", "c"])
        self.assertEqual(list(checks.instance_vocabulary(tree, declared)), ["a", "b", "c"])


if __name__ == '__main__':
    unittest.main()
