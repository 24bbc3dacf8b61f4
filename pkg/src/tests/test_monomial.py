import sys
import unittest
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np

from symcomb.exceptions import (
    AmbientMismatch,
    DegreeCapExceeded,
    InputFormatError,
    NonpositiveK,
    NotSquareFree,
    UnitIdealError,
)
from symcomb.models.cover import WeightedComplex
from symcomb.models.monomial import Monomial, MonomialIdeal
from symcomb.monomial import (
    alexander_dual,
    complex_of,
    cover_ideal,
    height_and_dim,
    intersect,
    membership,
    power,
    prime_power,
    radical,
    stanley_reisner,
    symbolic_power,
    symbolic_vs_ordinary,
)
from symcomb.simplicial import dimension, dual, is_pure
from tests.samples import C6, EDGE, K3, K3_CANONICAL, U24, all_complexes


def ideal(n, *gens):
    return MonomialIdeal.from_exponents(n, gens)


class TestMonomialModel(unittest.TestCase):
    def test_parse_and_text(self):
        mono = Monomial.parse("x1^2*x3", 3)
        self.assertEqual(mono.exponents, (2, 0, 1))
        self.assertEqual(mono.to_text(), "x1^2*x3")
        self.assertEqual(Monomial.parse("1", 2).to_text(), "1")

    def test_parse_errors(self):
        with self.assertRaises(InputFormatError):
            Monomial.parse("x4", 3)
        with self.assertRaises(InputFormatError):
            Monomial.parse("y1", 3)

    def test_generators_are_minimalized(self):
        i = ideal(2, (1, 0), (2, 0), (1, 1))
        self.assertEqual(i.generators, (Monomial((1, 0)),))

    def test_unit_ideal_rejected(self):
        with self.assertRaises(UnitIdealError):
            ideal(2, (0, 0))

    def test_ambient_mismatch(self):
        with self.assertRaises(AmbientMismatch):
            MonomialIdeal(2, (Monomial((1, 0, 0)),))
        with self.assertRaises(AmbientMismatch):
            intersect(ideal(2, (1, 0)), ideal(3, (1, 0, 0)))


class TestIdealOperations(unittest.TestCase):
    def test_intersect(self):
        i = MonomialIdeal.prime(3, [1, 2])
        j = MonomialIdeal.prime(3, [2, 3])
        self.assertEqual(intersect(i, j), ideal(3, (0, 1, 0), (1, 0, 1)))
        self.assertEqual(intersect(i, i), i)

    def test_triple_intersection_of_squares(self):
        result = intersect(
            intersect(prime_power([1, 2], 2, 3), prime_power([2, 3], 2, 3)),
            prime_power([1, 3], 2, 3),
        )
        self.assertEqual(
            [g.exponents for g in result.generators],
            [(1, 1, 1), (2, 2, 0), (2, 0, 2), (0, 2, 2)],
        )

    def test_symbolic_power_of_triangle(self):
        self.assertEqual(symbolic_power(K3, None, 1), ideal(3, (1, 1, 0), (1, 0, 1), (0, 1, 1)))
        second = symbolic_power(K3, None, 2)
        self.assertEqual(len(second.generators), 4)
        self.assertIn(Monomial((1, 1, 1)), second)

    def test_power_and_membership(self):
        squared = power(cover_ideal(K3), 2)
        self.assertTrue(all(g.degree == 4 for g in squared.generators))
        self.assertFalse(membership(Monomial((1, 1, 1)), squared))
        self.assertTrue(membership(Monomial((1, 1, 1)), symbolic_power(K3, None, 2)))
        self.assertFalse(membership(Monomial.one(3), squared))

    def test_power_guards(self):
        with self.assertRaises(NonpositiveK):
            power(cover_ideal(K3), 0)
        with self.assertRaises(DegreeCapExceeded):
            power(cover_ideal(K3), 3, degree_cap=5)

    def test_radical(self):
        self.assertEqual(radical(ideal(3, (2, 1, 0), (0, 0, 3))), ideal(3, (1, 1, 0), (0, 0, 1)))
        i = ideal(3, (2, 1, 0), (0, 0, 3))
        self.assertEqual(radical(radical(i)), radical(i))

    def test_radical_of_symbolic_power_is_cover_ideal(self):
        wc = WeightedComplex.build(C6, [2, 1, 3, 1, 2, 1])
        for k in (1, 2):
            self.assertEqual(radical(symbolic_power(wc, k=k)), cover_ideal(C6))

    def test_symbolic_contains_ordinary(self):
        for complex_ in (K3, U24, C6):
            for k in (1, 2, 3):
                ordinary = power(cover_ideal(complex_), k)
                symbolic = symbolic_power(complex_, None, k)
                self.assertTrue(all(symbolic.contains(g) for g in ordinary.generators))

    def test_intersection_membership_property(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            gens_i = [tuple(int(x) for x in rng.integers(0, 3, size=3)) for _ in range(2)]
            gens_j = [tuple(int(x) for x in rng.integers(0, 3, size=3)) for _ in range(2)]
            if (0, 0, 0) in gens_i or (0, 0, 0) in gens_j:
                continue
            i, j = ideal(3, *gens_i), ideal(3, *gens_j)
            mono = Monomial(tuple(int(x) for x in rng.integers(0, 3, size=3)))
            self.assertEqual(mono in intersect(i, j), mono in i and mono in j)


class TestCorrespondences(unittest.TestCase):
    def test_cover_ideal_of_hexagon(self):
        expected = intersect(MonomialIdeal.prime(6, [1, 2]), MonomialIdeal.prime(6, [2, 3]))
        for a, b in [(3, 4), (4, 5), (5, 6), (1, 6)]:
            expected = intersect(expected, MonomialIdeal.prime(6, [a, b]))
        self.assertEqual(cover_ideal(C6), expected)

    def test_stanley_reisner_and_cover_duality(self):
        for complex_ in all_complexes(4):
            if not is_pure(complex_) or any(len(f) == complex_.n for f in complex_.facets):
                continue
            dual_complex = dual(complex_)
            self.assertEqual(stanley_reisner(complex_), cover_ideal(dual_complex))
            self.assertEqual(stanley_reisner(dual_complex), cover_ideal(complex_))

    def test_complex_of_inverts_stanley_reisner(self):
        for complex_ in all_complexes(4):
            self.assertEqual(complex_of(stanley_reisner(complex_)), complex_)

    def test_alexander_dual_gives_vertex_covers(self):
        self.assertEqual(alexander_dual(stanley_reisner(K3)), ideal(3, (1, 0, 0), (0, 1, 0), (0, 0, 1)))
        self.assertEqual(alexander_dual(ideal(4, (1, 1, 0, 0), (0, 0, 1, 1))), ideal(4, (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)))
        with self.assertRaises(NotSquareFree):
            alexander_dual(ideal(2, (2, 0)))
        with self.assertRaises(NotSquareFree):
            complex_of(ideal(2, (2, 0)))

    def test_alexander_dual_is_an_involution(self):
        for complex_ in all_complexes(4):
            sr = stanley_reisner(complex_)
            if sr.is_zero:
                continue
            self.assertEqual(alexander_dual(alexander_dual(sr)), sr)

    def test_height_and_dim(self):
        self.assertEqual(height_and_dim(stanley_reisner(U24)), (2, 2))
        self.assertEqual(height_and_dim(cover_ideal(C6)), (2, 4))
        self.assertEqual(height_and_dim(ideal(4, (2, 0, 0, 0))), (1, 3))

    def test_dim_of_stanley_reisner_ring(self):
        for complex_ in all_complexes(4):
            self.assertEqual(height_and_dim(stanley_reisner(complex_))[1], dimension(complex_) + 1)


class TestSymbolicVsOrdinary(unittest.TestCase):
    def test_triangle_witness(self):
        result = symbolic_vs_ordinary(K3_CANONICAL, k=2)
        self.assertFalse(result.equal)
        self.assertEqual(result.witness.exponents, (1, 1, 1))

    def test_first_power_is_equal(self):
        for complex_ in (K3, C6, U24):
            self.assertTrue(symbolic_vs_ordinary(complex_, None, 1).equal)

    def test_prime_powers_are_equal(self):
        self.assertTrue(symbolic_vs_ordinary(EDGE, None, 3).equal)


if __name__ == "__main__":
    unittest.main()
