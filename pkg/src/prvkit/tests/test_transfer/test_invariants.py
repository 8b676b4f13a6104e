#!/usr/bin/env python3
"""Tests for prvkit.transfer.invariants module."""

import unittest

from prvkit.transfer.invariants import (
    check_implication, dominant_box, evidence_sweep, g_invariants, h_invariants, root_lattice_check,
    saturation_check, scan_box, search_failures, transfer
)
from prvkit.transfer.maps import parse_preset
from prvkit.utils.logging import UsageError


class TestTransfer(unittest.TestCase):
    """Tests for transferring coweights."""

    def test_torus_transfer(self):
        """Test coweights of T are moved to the dominant chamber of G."""
        tm = parse_preset("torus:A2")
        self.assertEqual(transfer(tm, (2, -1)), (1, 1))
        self.assertEqual(transfer(tm, (-2, 1)), (1, 1))
        self.assertEqual(transfer(tm, (0, 0)), (0, 0))

    def test_sl2_transfer(self):
        """Test α∨ of SL_2 along the long root of B2 lands on a short dominant coroot."""
        tm = parse_preset("sl2-root:B2:1")
        self.assertEqual(transfer(tm, (1,)), (0, 1))

    def test_dominance_required(self):
        """Test non-dominant source coweights are refused."""
        tm = parse_preset("sl2-root:B2:1")
        with self.assertRaises(UsageError):
            transfer(tm, (-1,))
        with self.assertRaises(UsageError):
            h_invariants(tm, [])


class TestInvariants(unittest.TestCase):
    """Tests for invariant dimensions on both sides."""

    def test_sl2_source(self):
        """Test invariants of SL_2 coweight triples."""
        tm = parse_preset("sl2-root:B2:1")
        self.assertEqual(h_invariants(tm, [(1,), (1,), (2,)]), 1)
        self.assertEqual(h_invariants(tm, [(1,), (1,), (5,)]), 0)
        self.assertEqual(h_invariants(tm, [(1,), (1,), (1,)]), 1)

    def test_torus_source(self):
        """Test a torus has invariants exactly when the coweights sum to zero."""
        tm = parse_preset("torus:A2")
        self.assertEqual(h_invariants(tm, [(2, -1), (-2, 1), (0, 0)]), 1)
        self.assertEqual(h_invariants(tm, [(1, 0), (0, 0), (0, 0)]), 0)

    def test_torus_implication(self):
        """Test the implication for (2,−1), (−2,1), 0 in PGL_3."""
        result = check_implication(parse_preset("torus:A2"), [(2, -1), (-2, 1), (0, 0)])
        self.assertEqual(result.transfers, ((1, 1), (1, 1), (0, 0)))
        self.assertEqual((result.h_dim, result.g_dim), (1, 1))
        self.assertTrue(result.imp_ok)
        self.assertEqual(result.to_json()["transfers"], [[1, 1], [1, 1], [0, 0]])

    def test_failure_and_saturation(self):
        """Test (α∨, α∨, α∨) along the long root of B2 loses its invariant until doubled."""
        tm = parse_preset("sl2-root:B2:1")
        lams = [(1,), (1,), (1,)]
        result = check_implication(tm, lams)
        self.assertEqual((result.h_dim, result.g_dim), (1, 0))
        self.assertFalse(result.imp_ok)
        self.assertTrue(root_lattice_check(tm, lams))
        self.assertEqual(saturation_check(tm, lams), 2)
        self.assertIsNone(saturation_check(tm, lams, n_max=1))
        self.assertEqual(g_invariants(tm, [(0, 2), (0, 2), (0, 2)]), 1)

    def test_saturation_needs_invariants(self):
        """Test saturation refuses tuples without H-invariants."""
        with self.assertRaises(UsageError):
            saturation_check(parse_preset("sl2-root:B2:1"), [(1,), (1,), (5,)])


class TestSearch(unittest.TestCase):
    """Tests for box scans and the evidence summary."""

    def test_dominant_box(self):
        """Test boxes of dominant coweights."""
        self.assertEqual(dominant_box(parse_preset("sl2-root:B2:1"), 2), [(0,), (1,), (2,)])
        self.assertEqual(dominant_box(parse_preset("torus:A1"), 1), [(-1,), (0,), (1,)])

    def test_bound_zero(self):
        """Test the zero box has one tuple and no failures."""
        summary = evidence_sweep(parse_preset("sl2-root:B2:1"), 0)
        self.assertEqual(summary.instances, 1)
        self.assertEqual(summary.failures, [])

    def test_torus_never_fails(self):
        """Test the implication holds for the maximal torus of A2."""
        self.assertEqual(search_failures(parse_preset("torus:A2"), 1), [])

    def test_long_root_failures(self):
        """Test the scan along the long root of B2 finds (α∨, α∨, α∨) and saturates it."""
        tm = parse_preset("sl2-root:B2:1")
        summary = evidence_sweep(tm, 1)
        self.assertIn(((1,), (1,), (1,)), summary.failures)
        self.assertEqual(summary.saturation[((1,), (1,), (1,))], 2)
        self.assertEqual(summary.lattice_violations, [])
        self.assertEqual(summary.to_json()["preset"], "sl2-root:B2:1")

    def test_scan_order(self):
        """Test scans come back in lexicographic order."""
        results = scan_box(parse_preset("sl2-root:B2:1"), 2)
        self.assertEqual([r.lams for r in results], sorted(r.lams for r in results))
        with self.assertRaises(UsageError):
            scan_box(parse_preset("sl2-root:B2:1"), 1, s=0)


if __name__ == "__main__":
    unittest.main()
