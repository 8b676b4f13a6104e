#!/usr/bin/env python3
"""Tests for prvkit.lie.weylgrp module."""

import random
import unittest
from unittest.mock import patch

from hypothesis import given, settings
from hypothesis import strategies as st

from prvkit.lie.rootdata import build_root_datum, is_dominant
from prvkit.lie.weylgrp import (
    WeylGroup, double_cosets, dominant_representative, dominant_stabilizer, element_from_word,
    enumerate_elements, inversion_count, longest_element, minimal_double_coset_representatives,
    parabolic_subgroup, parse_word, stabilizer, weyl_group, weyl_orbit
)
from prvkit.utils.config import PrvkitConfig
from prvkit.utils.logging import CapExceededError, UsageError
from prvkit.utils.types import ADJOINT


def shuffled_iter(seed):
    """A WeylGroup.__iter__ replacement that walks W in a seeded random order."""
    def _iter(self):
        elements = list(self.elements)
        random.Random(seed).shuffle(elements)
        return iter(elements)
    return _iter


class TestWords(unittest.TestCase):
    """Tests for parsing words and building elements from them."""

    def setUp(self):
        self.a2 = build_root_datum("A2")

    def test_parse_word(self):
        """Test spaced, compact and identity spellings."""
        self.assertEqual(parse_word("s1 s2"), (1, 2))
        self.assertEqual(parse_word("s1s2s1"), (1, 2, 1))
        self.assertEqual(parse_word("e"), ())
        self.assertEqual(parse_word(""), ())
        with self.assertRaises(UsageError):
            parse_word("s1x")

    def test_out_of_range(self):
        """Test reflections beyond the rank are refused."""
        with self.assertRaises(UsageError):
            element_from_word(self.a2, "s3")

    def test_canonical_word(self):
        """Test elements carry their lexicographically least reduced word."""
        self.assertEqual(element_from_word(self.a2, "s2 s1 s2").word, (1, 2, 1))
        self.assertEqual(element_from_word(self.a2, "s1 s1").word, ())
        self.assertEqual(str(element_from_word(self.a2, "s1s2")), "s1 s2")

    def test_rightmost_acts_first(self):
        """Test s1 s2 applies s2 before s1."""
        w = element_from_word(self.a2, "s1 s2")
        s1, s2 = element_from_word(self.a2, "s1"), element_from_word(self.a2, "s2")
        x = (1, 0)
        self.assertEqual(w.apply(x), s1.apply(s2.apply(x)))
        self.assertEqual(weyl_group(self.a2).multiply(s1, s2), w)
        self.assertEqual(weyl_group(self.a2).inverse(w), element_from_word(self.a2, "s2 s1"))


class TestWeylGroup(unittest.TestCase):
    """Tests for the enumeration of W."""

    def test_orders_and_lengths(self):
        """Test the table has |W| elements sorted by length."""
        for label in ("A1", "A2", "B2", "G2", "A3", "B3"):
            with self.subTest(label=label):
                d = build_root_datum(label)
                elements = enumerate_elements(d)
                self.assertEqual(len(elements), d.weyl_order)
                self.assertEqual([w.length for w in elements], sorted(w.length for w in elements))

    def test_longest(self):
        """Test the longest elements of A2 and B2."""
        a2 = build_root_datum("A2")
        self.assertEqual(longest_element(a2).word, (1, 2, 1))
        self.assertEqual(longest_element(a2).apply((1, 0)), (0, -1))
        b2 = build_root_datum("B2")
        w0 = longest_element(b2)
        self.assertEqual(w0.length, 4)
        for x in [(1, 0), (0, 1), (3, -2)]:
            self.assertEqual(w0.apply(x), tuple(-v for v in x))

    def test_inversions_match_length(self):
        """Test ℓ(w) counts the positive roots w makes negative."""
        for label in ("A2", "B2", "G2"):
            d = build_root_datum(label)
            for w in enumerate_elements(d):
                self.assertEqual(inversion_count(d, w), w.length)

    def test_cap(self):
        """Test enumeration refuses groups above the cap."""
        with patch("prvkit.lie.weylgrp.get_config", return_value=PrvkitConfig(weyl_cap=5)):
            with self.assertRaises(CapExceededError):
                WeylGroup(build_root_datum("A2"))


class TestDominance(unittest.TestCase):
    """Tests for dominant representatives and orbits."""

    def setUp(self):
        self.a2 = build_root_datum("A2")

    def test_dominant_representative(self):
        """Test (0, -3) is moved to (3, 0) by s1 s2."""
        dom, v = dominant_representative(self.a2, (0, -3))
        self.assertEqual(dom, (3, 0))
        self.assertEqual(v.word, (1, 2))
        self.assertEqual(v.apply((0, -3)), dom)

    def test_dominant_is_fixed(self):
        """Test a dominant weight needs the identity."""
        dom, v = dominant_representative(self.a2, (2, 1))
        self.assertEqual(dom, (2, 1))
        self.assertEqual(v.length, 0)

    def test_coweights(self):
        """Test the coweight action on the adjoint side."""
        adj = build_root_datum("A2", ADJOINT)
        dom, v = dominant_representative(adj, (-1, 0), coweight=True)
        self.assertEqual(v.coapply((-1, 0)), dom)
        self.assertEqual(len(weyl_orbit(adj, (1, 0), coweight=True)), 3)

    def test_orbit(self):
        """Test the orbit of ω1 in SL_3."""
        self.assertEqual(weyl_orbit(self.a2, (1, 0)), {(1, 0), (-1, 1), (0, -1)})
        self.assertEqual(len(weyl_orbit(self.a2, (1, 1))), 6)

    @settings(max_examples=40, deadline=None)
    @given(x=st.lists(st.integers(min_value=-5, max_value=5), min_size=2, max_size=2),
           label=st.sampled_from(["A2", "B2", "G2"]))
    def test_representative_is_shortest(self, x, label):
        """Test v·x is dominant and no shorter element reaches it."""
        d = build_root_datum(label)
        dom, v = dominant_representative(d, x)
        self.assertTrue(is_dominant(d, dom))
        self.assertEqual(v.apply(x), dom)
        shortest = min(w.length for w in enumerate_elements(d) if w.apply(x) == dom)
        self.assertEqual(v.length, shortest)


class TestSubgroups(unittest.TestCase):
    """Tests for stabilizers and double cosets."""

    def setUp(self):
        self.a2 = build_root_datum("A2")

    def test_stabilizer(self):
        """Test the stabilizer of ω1 is {e, s2}."""
        stab = stabilizer(self.a2, (1, 0))
        self.assertEqual({str(w) for w in stab.elements}, {"e", "s2"})
        self.assertEqual(dominant_stabilizer(self.a2, (1, 0)).elements, stab.elements)
        self.assertEqual(len(stabilizer(self.a2, (0, 0))), 6)
        self.assertEqual(len(stabilizer(self.a2, (1, 1))), 1)

    def test_parabolic_range(self):
        """Test generators outside 1..n are refused."""
        with self.assertRaises(UsageError):
            parabolic_subgroup(self.a2, [3])

    def test_double_cosets(self):
        """Test W_{s2}\\W/W_{s1} in A2 has cosets of sizes 4 and 2."""
        left = parabolic_subgroup(self.a2, [2])
        right = parabolic_subgroup(self.a2, [1])
        cosets = double_cosets(self.a2, left, right)
        self.assertEqual(sorted(len(m) for _, m in cosets), [2, 4])
        self.assertEqual([str(g) for g, _ in cosets], ["e", "s1 s2"])

    def test_minimal_representatives(self):
        """Test the length criterion agrees with the coset partition."""
        reps = minimal_double_coset_representatives(self.a2, [2], [1])
        self.assertEqual([str(w) for w in reps], ["e", "s1 s2"])
        b2 = build_root_datum("B2")
        for left, right in [([1], [2]), ([1], [1]), ([], [2])]:
            cosets = double_cosets(b2, parabolic_subgroup(b2, left), parabolic_subgroup(b2, right))
            self.assertEqual(
                [g for g, _ in cosets], minimal_double_coset_representatives(b2, left, right)
            )

    def test_cosets_ignore_enumeration_order(self):
        """Test representatives and cosets do not depend on the order W is walked in."""
        for label, left, right in [("A2", [2], [1]), ("B2", [1], [2]), ("G2", [2], []), ("A3", [1, 3], [2])]:
            d = build_root_datum(label)
            wl, wr = parabolic_subgroup(d, left), parabolic_subgroup(d, right)
            expected = double_cosets(d, wl, wr)
            reps = minimal_double_coset_representatives(d, left, right)
            for seed in (1, 7):
                with self.subTest(label=label, seed=seed), \
                        patch.object(WeylGroup, "__iter__", shuffled_iter(seed)):
                    self.assertEqual(double_cosets(d, wl, wr), expected)
                    self.assertEqual(minimal_double_coset_representatives(d, left, right), reps)


if __name__ == "__main__":
    unittest.main()
