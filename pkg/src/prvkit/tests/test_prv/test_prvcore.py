#!/usr/bin/env python3
"""Tests for prvkit.prv.prvcore module."""

import random
import unittest
from unittest.mock import patch

from hypothesis import given, settings
from hypothesis import strategies as st

from prvkit.lie.rootdata import build_root_datum
from prvkit.lie.weylgrp import WeylGroup, double_cosets, dominant_stabilizer, dominant_vector, enumerate_elements
from prvkit.prv.prvcore import (
    _refined_profile, dimension_identity, kostant_check, mv_kostant_point, prv_instance, prv_nu, prv_pairs,
    prv_verify, refined_count, refined_profile, refined_verify, stabilizer_valuations
)
from prvkit.utils.logging import UsageError


def shuffled_iter(seed):
    """A WeylGroup.__iter__ replacement that walks W in a seeded random order."""
    def _iter(self):
        elements = list(self.elements)
        random.Random(seed).shuffle(elements)
        return iter(elements)
    return _iter


class TestPrvInstance(unittest.TestCase):
    """Tests for ν = v(−λ−wμ)."""

    def setUp(self):
        self.a2 = build_root_datum("A2")

    def test_a2_example(self):
        """Test λ = μ = ρ and w = s1 s2 in SL_3."""
        inst = prv_instance(self.a2, (1, 1), (1, 1), "s1s2")
        self.assertEqual(inst.nu, (1, 1))
        self.assertEqual(str(inst.v), "s1 s2")
        self.assertEqual(inst.v.apply((1, -2)), (1, 1))
        doc = inst.to_json()
        self.assertEqual(doc["nu"], [1, 1])
        self.assertEqual(doc["w"], "s1 s2")
        self.assertEqual(prv_nu(self.a2, (1, 1), (1, 1), "s1s2"), (inst.nu, inst.v))

    def test_identity_gives_dual_of_sum(self):
        """Test w = e gives the dual of λ+μ."""
        self.assertEqual(prv_instance(self.a2, (1, 0), (1, 0), "e").nu, (0, 2))

    def test_rejects_bad_input(self):
        """Test non-dominant weights, wrong lengths and bad words."""
        with self.assertRaises(UsageError):
            prv_instance(self.a2, (-1, 0), (1, 0), "e")
        with self.assertRaises(UsageError):
            prv_instance(self.a2, (1,), (1, 0), "e")
        with self.assertRaises(UsageError):
            prv_instance(self.a2, (1, 0), (1, 0), "s4")


class TestPrvVerify(unittest.TestCase):
    """Tests for the PRV statement and its refinement."""

    def test_adjoint_cube(self):
        """Test the refinement witness dim = m = 2 for ρ, ρ, s1 s2 in SL_3."""
        a2 = build_root_datum("A2")
        self.assertTrue(prv_verify(a2, (1, 1), (1, 1), "s1s2").holds)
        result = refined_verify(a2, (1, 1), (1, 1), "s1s2")
        self.assertEqual((result.dim, result.m), (2, 2))
        self.assertTrue(result.holds)
        self.assertEqual(refined_count(a2, (1, 1), (1, 1), "s1 s2"), 2)

    def test_refined_profile(self):
        """Test the profile of ρ, ρ in SL_3 matches the tensor square of the adjoint."""
        a2 = build_root_datum("A2")
        self.assertEqual(refined_profile(a2, (1, 1), (1, 1)),
                         {(2, 2): 1, (3, 0): 1, (0, 3): 1, (1, 1): 2, (0, 0): 1})

    def test_profile_counts_double_cosets(self):
        """Test singular weights count double cosets, not Weyl elements."""
        a2 = build_root_datum("A2")
        profile = refined_profile(a2, (1, 0), (1, 0))
        self.assertEqual(sum(profile.values()), 2)

    @settings(max_examples=25, deadline=None)
    @given(lam=st.tuples(st.integers(0, 2), st.integers(0, 2)),
           mu=st.tuples(st.integers(0, 2), st.integers(0, 2)),
           label=st.sampled_from(["A2", "B2", "G2"]),
           index=st.integers(0, 11))
    def test_refinement_holds(self, lam, mu, label, index):
        """Test dim ≥ m ≥ 1 on small boxes."""
        d = build_root_datum(label)
        elements = enumerate_elements(d)
        w = elements[index % len(elements)]
        result = refined_verify(d, lam, mu, w)
        self.assertTrue(result.holds, result)

    @settings(max_examples=20, deadline=None)
    @given(lam=st.tuples(st.integers(0, 1), st.integers(0, 1)),
           mu=st.tuples(st.integers(0, 1), st.integers(0, 1)),
           label=st.sampled_from(["A2", "B2", "G2"]),
           seed=st.integers(0, 1000))
    def test_count_ignores_coset_enumeration(self, lam, mu, label, seed):
        """Test m does not change when W is walked in another order, and matches a recount over the cosets."""
        d = build_root_datum(label)
        elements = enumerate_elements(d)
        expected = {str(w): refined_count(d, lam, mu, w) for w in elements}
        self.addCleanup(_refined_profile.cache_clear)
        _refined_profile.cache_clear()
        with patch.object(WeylGroup, "__iter__", shuffled_iter(seed)):
            got = {str(w): refined_count(d, lam, mu, w) for w in elements}
            cosets = double_cosets(d, dominant_stabilizer(d, lam), dominant_stabilizer(d, mu))
        self.assertEqual(got, expected)
        for w in elements:
            nu = prv_instance(d, lam, mu, w).nu
            recount = sum(
                1 for u, _ in cosets if dominant_vector(d, [-a - b for a, b in zip(lam, u.apply(mu))]) == nu
            )
            self.assertEqual(recount, expected[str(w)])


class TestKostantAndMv(unittest.TestCase):
    """Tests for the extremal checks."""

    def setUp(self):
        self.a2 = build_root_datum("A2")

    def test_kostant(self):
        """Test V(λ+wμ) occurs once when λ+wμ is dominant."""
        res = kostant_check(self.a2, (1, 0), (0, 1), "e")
        self.assertTrue(res.applicable)
        self.assertEqual((res.nu, res.multiplicity), ((1, 1), 1))
        skipped = kostant_check(self.a2, (1, 0), (0, 1), "s2")
        self.assertFalse(skipped.applicable)
        self.assertTrue(skipped.holds)

    def test_mv_point(self):
        """Test v(λ+wμ) dominant occurs in the tensor product."""
        res = mv_kostant_point(self.a2, (1, 1), (1, 1), "s1", "s1s2")
        self.assertTrue(res.applicable)
        self.assertEqual((res.nu, res.multiplicity), ((1, 1), 2))


class TestDimensionIdentity(unittest.TestCase):
    """Tests for the valuation side of the dimension identity."""

    def test_sl2(self):
        """Test both Weyl elements for λ = μ = α∨/2 in SL_2."""
        a1 = build_root_datum("A1")
        ident = dimension_identity(a1, (1,), (1,), "e")
        self.assertEqual((ident.lhs, ident.rhs), (2, 2))
        ident = dimension_identity(a1, (1,), (1,), "s1")
        self.assertEqual((ident.lhs, ident.rhs), (1, 1))

    def test_a2(self):
        """Test the valuations for ρ, ρ, s1 s2 in SL_3."""
        a2 = build_root_datum("A2")
        profile = stabilizer_valuations(a2, (1, 1), (1, 1), "s1s2")
        self.assertEqual(profile[(1, 0)], 1)
        self.assertEqual(profile[(0, 1)], 2)
        self.assertEqual(profile[(1, 1)], 2)
        self.assertEqual(profile[(-1, 0)], 1)
        self.assertEqual(profile.total, 6)
        self.assertTrue(dimension_identity(a2, (1, 1), (1, 1), "s1s2").equal)


class TestPrvPairs(unittest.TestCase):
    """Tests for prv_pairs."""

    def test_not_a_prv_triple(self):
        """Test (2, 2, 2) of SL_2 has invariants but no PRV pair."""
        self.assertEqual(prv_pairs(build_root_datum("A1"), (2,), (2,), (2,)), [])

    def test_adjoint_cube(self):
        """Test ρ, ρ, ρ of SL_3 comes from s1 s2 and s2 s1."""
        pairs = prv_pairs(build_root_datum("A2"), (1, 1), (1, 1), (1, 1))
        self.assertEqual(sorted(str(w) for w, _ in pairs), ["s1 s2", "s2 s1"])

    def test_nu_must_be_dominant(self):
        """Test ν is checked."""
        with self.assertRaises(UsageError):
            prv_pairs(build_root_datum("A2"), (1, 1), (1, 1), (-1, 0))


if __name__ == "__main__":
    unittest.main()
