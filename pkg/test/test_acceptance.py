"""Randomized corpora for the tracking guarantees.

Every corpus is drawn from a fixed seed so that a failure can be replayed.
"""

import unittest

from lib.lpt.cli.bench import bench_table
from lib.lpt.engine import tracker
from lib.lpt.engine.tree import build_tree
from lib.lpt.oracle import checks
from lib.lpt.utils.BoundedCache import BoundedCache
from lib.lpt.utils.instances import corpus, make_random, random_instance


class TestTerminalAndLockIn(unittest.TestCase):

    def test_thousand_instances(self):
        terminal = lock_in = 0
        for f, trace in corpus(2024, 1000, max_height=4, vocabulary_size=3, max_length=6):
            tree = build_tree(f)
            records, state = checks.record_run(tree, trace, strict=True)
            tracker.finalize(state)
            records.append(checks.Record(state.current_time, state.vectors, True))
            lock_in += len(checks.check_lock_in(records, tree, trace.origin))
            terminal += len(checks.check_terminal(tree, trace, state.vectors,
                                                  BoundedCache(size_limit=100000)))
        self.assertEqual(terminal, 0, "finalized vectors differ from whole-trace evaluation")
        self.assertEqual(lock_in, 0, "a locked entry changed value")


class TestSoundness(unittest.TestCase):

    def test_no_refuting_continuation(self):
        random = make_random(77)
        failures = []
        for _ in range(300):
            f, trace = random_instance(random, max_height=2, vocabulary_size=2, max_length=5)
            tree = build_tree(f)
            records, _ = checks.record_run(tree, trace)
            violations = checks.check_soundness(tree, trace, records, 4)
            if violations:
                failures.append((str(f), trace, violations[0].as_dict()))
        self.assertEqual(failures, [])


class TestComplexityBound(unittest.TestCase):

    def test_sweep(self):
        table = bench_table(range(5), range(1, 21), 50, seed=0)
        self.assertEqual(len(table), 100)
        self.assertTrue((table["trials"] == 50).all())
        self.assertTrue((table["mean_count"] <= table["bound"]).all())


if __name__ == '__main__':
    unittest.main()
