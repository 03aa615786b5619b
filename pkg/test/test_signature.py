import unittest

from hypothesis import given, settings, strategies as st

from lib.lpt.core.exc import EmptyState, FormatError, ShapeMismatch
from lib.lpt.core.parser import parse
from lib.lpt.engine import tracker
from lib.lpt.signature.signature import (edit_distance, merge, signature, signature_distance,
                                         signature_from_json, signature_to_json, signatures_equal)
from test._fixtures import KEY_A_FIRST, KEY_B_FIRST, KEY_START, key_state, run

ternary_vectors = st.lists(st.sampled_from([-1, 0, 1]), max_size=20)


class TestSignature(unittest.TestCase):

    def test_key_collection_snapshots(self):
        self.assertEqual(signature(key_state([[]])), KEY_START)
        self.assertEqual(signature(key_state([[], [], ["keyA"]])), KEY_A_FIRST)
        self.assertEqual(signature(key_state([[], [], [], [], ["keyA"]])), KEY_A_FIRST)
        self.assertEqual(signature(key_state([[], [], [], [], [], ["keyB"]])), KEY_B_FIRST)

    def test_equality(self):
        at_two = signature(key_state([[], [], ["keyA"]]))
        at_four = signature(key_state([[], [], [], [], ["keyA"]]))
        self.assertTrue(signatures_equal(at_two, at_four))
        self.assertFalse(signatures_equal(at_two, KEY_B_FIRST))
        self.assertTrue(signatures_equal(KEY_B_FIRST, KEY_B_FIRST))

    def test_different_trees(self):
        self.assertRaises(ShapeMismatch, signatures_equal, KEY_START, [[1]])
        self.assertRaises(ShapeMismatch, signature_distance, KEY_START, [[1]])

    def test_no_step_yet(self):
        self.assertRaises(EmptyState, signature, tracker.init(parse("a")))

    def test_finalized_signature_has_no_open_values(self):
        state = run("F keyA & F keyB", [[], ["keyA"]], finalize=True)
        self.assertEqual(signature(state), [[0], [1], [0], [0, 1], [0]])

    def test_merge(self):
        self.assertEqual(merge([0, 0, 1, -1, -1]), [0, 1, -1])
        self.assertEqual(merge([]), [])
        self.assertEqual(merge([1, 0, 1]), [1, 0, 1])

    @settings(max_examples=200)
    @given(ternary_vectors)
    def test_merge_is_idempotent(self, vector):
        merged = merge(vector)
        self.assertEqual(merge(merged), merged)
        self.assertTrue(all(x != y for x, y in zip(merged, merged[1:])))

    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=1, max_value=15))
    def test_signature_forgets_timing(self, waiting):
        self.assertEqual(signature(key_state([[]] * waiting + [["keyA"]])), KEY_A_FIRST)
        self.assertEqual(signature(key_state([[]] * waiting + [["keyB"]])), KEY_B_FIRST)

    def test_distance(self):
        self.assertEqual(edit_distance([0, 1], [0, 1]), 0)
        self.assertEqual(edit_distance([-1], [0, 1]), 2)
        self.assertEqual(signature_distance(KEY_A_FIRST, KEY_A_FIRST), 0)
        self.assertEqual(signature_distance(KEY_A_FIRST, KEY_B_FIRST), 4)

    def test_json(self):
        self.assertEqual(signature_to_json(KEY_A_FIRST), "[[-1],[1],[-1],[0,1],[0]]")
        self.assertEqual(signature_from_json("[[-1],[1],[-1],[0,1],[0]]"), KEY_A_FIRST)
        self.assertRaises(FormatError, signature_from_json, "[[2]]")
        self.assertRaises(FormatError, signature_from_json, "{}")


if __name__ == '__main__':
    unittest.main()
