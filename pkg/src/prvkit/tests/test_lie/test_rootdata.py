#!/usr/bin/env python3
"""Tests for prvkit.lie.rootdata module."""

import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from prvkit.lie.rootdata import (
    build_root_datum, dual_datum, in_root_lattice, labels, pairing, parse_label, reorder, rho_check_pairing,
    rho_pairing, root_coefficients, root_datum_from_json, symmetric_form, weight_from_labels,
    weight_from_root_coefficients
)
from prvkit.lie.weylgrp import enumerate_elements
from prvkit.utils.logging import UsageError
from prvkit.utils.types import ADJOINT, EXPLICIT, SIMPLY_CONNECTED, TORUS


class TestParseLabel(unittest.TestCase):
    """Tests for parse_label."""

    def test_products_and_tori(self):
        """Test factors and torus ranks are split out."""
        self.assertEqual(parse_label("A2"), ((("A", 2),), 0))
        self.assertEqual(parse_label("B3xT1"), ((("B", 3),), 1))
        self.assertEqual(parse_label("A1xA1"), ((("A", 1), ("A", 1)), 0))
        self.assertEqual(parse_label("T2"), ((), 2))

    def test_unsupported(self):
        """Test malformed labels, small ranks and the rank cap."""
        for label in ("", "X3", "A0", "D3", "B1", "E7", "G3", "A7", "a2"):
            with self.subTest(label=label):
                with self.assertRaises(UsageError):
                    parse_label(label)


class TestBuildRootDatum(unittest.TestCase):
    """Tests for the type-label constructor and the derived constants."""

    def test_counts(self):
        """Test positive-root counts and Weyl group orders."""
        cases = {"A1": (1, 2), "A2": (3, 6), "B2": (4, 8), "G2": (6, 12), "B3": (9, 48), "D4": (12, 192),
                 "F4": (24, 1152), "E6": (36, 51840), "A1xA1": (2, 4), "T2": (0, 1)}
        for label, (n_pos, order) in cases.items():
            with self.subTest(label=label):
                d = build_root_datum(label)
                self.assertEqual(len(d.positive_roots), n_pos)
                self.assertEqual(d.weyl_order, order)

    def test_a2_simply_connected(self):
        """Test the lattice of SL_3 in fundamental-weight coordinates."""
        d = build_root_datum("A2", SIMPLY_CONNECTED)
        self.assertEqual(d.simple_roots, ((2, -1), (-1, 2)))
        self.assertEqual(d.simple_coroots, ((1, 0), (0, 1)))
        self.assertEqual(d.rho, (1, 1))
        self.assertEqual(d.label, "A2")

    def test_a2_adjoint(self):
        """Test the lattice of PGL_3 in root coordinates."""
        d = build_root_datum("A2", ADJOINT)
        self.assertEqual(d.simple_roots, ((1, 0), (0, 1)))
        self.assertEqual(d.rho2, (2, 2))
        self.assertEqual(labels(d, (1, 1)), (1, 1))

    def test_torus(self):
        """Test a torus has rank but no roots."""
        d = build_root_datum("T2", TORUS)
        self.assertEqual(d.rank, 2)
        self.assertEqual(d.n_simple, 0)
        self.assertEqual(d.roots, ())
        self.assertEqual(d.rho2, (0, 0))

    def test_torus_form_needs_pure_torus(self):
        """Test the torus form is refused for groups with roots."""
        with self.assertRaises(UsageError):
            build_root_datum("A2", TORUS)

    def test_b2_bourbaki(self):
        """Test α1 is the long simple root of B2."""
        d = build_root_datum("B2")
        self.assertEqual(d.cartan, ((2, -2), (-1, 2)))
        self.assertEqual(d.half_lengths, (2, 1))

    def test_rho_pairings(self):
        """Test ⟨ρ, α∨⟩ = 1 on simple coroots and ⟨ρ, θ∨⟩ = 2 in A2."""
        d = build_root_datum("A2")
        for c in d.simple_coroots:
            self.assertEqual(rho_pairing(d, c), 1)
        theta_check = max(d.positive_coroots, key=sum)
        self.assertEqual(theta_check, (1, 1))
        self.assertEqual(rho_pairing(d, theta_check), 2)
        self.assertEqual(rho_check_pairing(d, (1, 1)), 2)


class TestLatticeHelpers(unittest.TestCase):
    """Tests for labels, root coefficients and weight constructors."""

    def setUp(self):
        self.a2 = build_root_datum("A2")

    def test_root_lattice(self):
        """Test ω1 is not in the root lattice of SL_3 but α1 is."""
        self.assertFalse(in_root_lattice(self.a2, (1, 0)))
        self.assertTrue(in_root_lattice(self.a2, (2, -1)))
        coeffs, in_span = root_coefficients(self.a2, (1, 0))
        self.assertEqual(coeffs, (Fraction(2, 3), Fraction(1, 3)))
        self.assertTrue(in_span)

    def test_weight_constructors(self):
        """Test Dynkin labels and root coefficients map to lattice coordinates."""
        adj = build_root_datum("A2", ADJOINT)
        self.assertEqual(weight_from_labels(adj, (1, 1)), (1, 1))
        self.assertEqual(weight_from_root_coefficients(self.a2, (1, 1)), (1, 1))
        with self.assertRaises(UsageError):
            weight_from_labels(adj, (1, 0))
        with self.assertRaises(UsageError):
            weight_from_labels(self.a2, (1,))

    def test_symmetric_form(self):
        """Test short roots have squared length 2 and long roots 4 in B2."""
        self.assertEqual(symmetric_form(self.a2, (2, -1), (2, -1)), 2)
        b2 = build_root_datum("B2")
        alpha1, alpha2 = b2.simple_roots
        self.assertEqual(symmetric_form(b2, alpha1, alpha1), 4)
        self.assertEqual(symmetric_form(b2, alpha2, alpha2), 2)

    def test_pairing_lengths(self):
        """Test pairing vectors of different lengths is refused."""
        with self.assertRaises(UsageError):
            pairing((1, 2), (1,))


class TestExplicitData(unittest.TestCase):
    """Tests for explicit lattice data, renumbering and duals."""

    def test_sl2_and_pgl2(self):
        """Test the two rank-one semisimple data."""
        sl2 = root_datum_from_json({"rank": 1, "simple_roots": [[2]], "simple_coroots": [[1]]})
        pgl2 = root_datum_from_json({"rank": 1, "simple_roots": [[1]], "simple_coroots": [[2]]})
        self.assertEqual(sl2.label, "A1")
        self.assertEqual(sl2.form, EXPLICIT)
        self.assertEqual(pgl2.rho2, (1,))

    def test_gl2(self):
        """Test GL_2 splits as A1 with a one-dimensional center."""
        gl2 = root_datum_from_json({"rank": 2, "simple_roots": [[1, -1]], "simple_coroots": [[1, -1]]})
        self.assertEqual(gl2.label, "A1xT1")
        self.assertEqual(gl2.torus_rank, 1)

    def test_malformed(self):
        """Test missing keys, ragged rows and non-Cartan pairings."""
        bad = [
            {"rank": 1, "simple_roots": [[2]]},
            {"rank": 2, "simple_roots": [[2]], "simple_coroots": [[1]]},
            {"rank": 1, "simple_roots": [[1]], "simple_coroots": [[1]]},
            {"rank": 1, "simple_roots": [[2], [2]], "simple_coroots": [[1]]},
        ]
        for doc in bad:
            with self.subTest(doc=doc):
                with self.assertRaises(UsageError):
                    root_datum_from_json(doc)

    def test_dual(self):
        """Test the dual of B2 is C2 and roots and coroots swap."""
        b2 = build_root_datum("B2")
        c2 = dual_datum(b2)
        self.assertEqual(c2.label, "C2")
        self.assertEqual(c2.form, ADJOINT)
        self.assertEqual(c2.simple_roots, b2.simple_coroots)
        self.assertEqual(c2.cartan, tuple(zip(*b2.cartan)))
        self.assertEqual(dual_datum(build_root_datum("G2")).label, "G2")

    def test_reorder(self):
        """Test renumbering swaps the simple roots."""
        b2 = build_root_datum("B2")
        swapped = reorder(b2, (2, 1))
        self.assertEqual(swapped.simple_roots, (b2.simple_roots[1], b2.simple_roots[0]))
        self.assertEqual(swapped.cartan, ((2, -1), (-2, 2)))
        with self.assertRaises(UsageError):
            reorder(b2, (1, 1))


vectors = st.lists(st.integers(min_value=-4, max_value=4), min_size=2, max_size=2)


class TestInvariance(unittest.TestCase):
    """Property tests: W preserves the pairing and the invariant form."""

    @settings(max_examples=40, deadline=None)
    @given(x=vectors, y=vectors, label=st.sampled_from(["A2", "B2", "G2"]))
    def test_weyl_invariance(self, x, y, label):
        """Test ⟨wx, wy⟩ = ⟨x, y⟩ and (wx, wx') = (x, x') for every w."""
        d = build_root_datum(label)
        for w in enumerate_elements(d):
            self.assertEqual(pairing(w.apply(x), w.coapply(y)), pairing(x, y))
            self.assertEqual(symmetric_form(d, w.apply(x), w.apply(y)), symmetric_form(d, x, y))


if __name__ == "__main__":
    unittest.main()
