#!/usr/bin/env python3
"""Tests for prvkit.utils.ui module."""

import io
import json
import unittest
from types import SimpleNamespace
from unittest.mock import patch

from prvkit.utils.config import PrvkitConfig
from prvkit.utils.logging import set_color_mode
from prvkit.utils.ui import emit, format_report, format_value, make_tree


class TestFormatValue(unittest.TestCase):
    """Tests for format_value."""

    def test_vectors(self):
        """Test vectors and lists of vectors."""
        self.assertEqual(format_value((1, 0, -2)), "(1, 0, -2)")
        self.assertEqual(format_value([[1], [2]]), "(1) (2)")
        self.assertEqual(format_value([]), "()")

    def test_scalars(self):
        """Test booleans, None and strings."""
        self.assertEqual(format_value(True), "yes")
        self.assertEqual(format_value(False), "no")
        self.assertEqual(format_value(None), "-")
        self.assertEqual(format_value("s1 s2"), "s1 s2")

    def test_mapping(self):
        """Test a record prints as key: value pairs."""
        self.assertEqual(format_value({"w": "s1", "v": "e"}), "w: s1, v: e")


class TestMakeTree(unittest.TestCase):
    """Tests for make_tree."""

    def test_nested(self):
        """Test mappings nest and lists of records become leaves."""
        tree = make_tree({"a": 1, "b": {"c": [1, 2]}, "d": [{"x": 1}, {"x": 2}]})
        self.assertEqual(tree, {
            "a: 1": {},
            "b": {"c: (1, 2)": {}},
            "d (2)": {"x: 1": {}, "x: 2": {}},
        })

    def test_empty_list_is_a_leaf(self):
        """Test an empty list of records stays on one line."""
        self.assertEqual(make_tree({"pairs": []}), {"pairs: ()": {}})


class TestFormatReport(unittest.TestCase):
    """Tests for format_report."""

    @patch("prvkit.utils.logging.COLOR_STDOUT", False)
    @patch("prvkit.utils.ui.get_config", return_value=PrvkitConfig())
    def test_tree(self, mock_config):
        """Test the tree shows the title and every field."""
        text = format_report("PRV {x}", {"nu": [1, 1], "holds": True})
        self.assertTrue(text.startswith("PRV {x}"))
        self.assertIn("nu: (1, 1)", text)
        self.assertIn("holds: yes", text)

    @patch("prvkit.utils.ui.get_config", return_value=PrvkitConfig(compact=True))
    def test_compact(self, mock_config):
        """Test compact mode prints one line without nested fields."""
        text = format_report("T", {"a": 1, "b": [1, 2], "c": {"x": 1}})
        self.assertEqual(text, "T  a=1  b=(1, 2)")

    @patch("prvkit.utils.ui.get_config", return_value=PrvkitConfig())
    def test_title_follows_color_mode(self, mock_config):
        """Test the title is colored exactly when stdout colors are on at call time."""
        with patch("prvkit.utils.logging.COLOR_STDOUT", True):
            self.assertIn("\x1b[", format_report("PRV", {"dim": 2}))
        with patch("prvkit.utils.logging.COLOR_STDOUT", False):
            self.assertNotIn("\x1b[", format_report("PRV", {"dim": 2}))

    @patch("prvkit.utils.ui.get_config", return_value=PrvkitConfig())
    def test_color_never_after_configure(self, mock_config):
        """Test --color never set after import leaves the title plain."""
        with patch("prvkit.utils.logging.COLOR_STDOUT", True), patch("prvkit.utils.logging.COLOR_STDERR", True):
            set_color_mode("never")
            text = format_report("PRV", {"dim": 2})
        self.assertTrue(text.startswith("PRV"))
        self.assertNotIn("\x1b[", text)


class TestEmit(unittest.TestCase):
    """Tests for emit."""

    @patch("prvkit.utils.logging.COLOR_STDOUT", False)
    def test_json_carries_replay(self):
        """Test --json prints one object with the replay argv."""
        args = SimpleNamespace(json=True)
        with patch("sys.stdout", new_callable=io.StringIO) as out:
            emit(args, "ignored", {"dim": 2, "nu": [1, 1]}, ["prv", "--type", "A2"])
        doc = json.loads(out.getvalue())
        self.assertEqual(doc, {"dim": 2, "nu": [1, 1], "replay": ["prv", "--type", "A2"]})

    @patch("prvkit.utils.ui.get_config", return_value=PrvkitConfig())
    @patch("prvkit.utils.logging.COLOR_STDOUT", False)
    def test_tree_output(self, mock_config):
        """Test plain output is the tree."""
        args = SimpleNamespace(json=False)
        with patch("sys.stdout", new_callable=io.StringIO) as out:
            emit(args, "Invariants", {"dim": 1}, [])
        self.assertIn("dim: 1", out.getvalue())


if __name__ == "__main__":
    unittest.main()
