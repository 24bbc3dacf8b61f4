import sys
import unittest
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np

from symcomb.exceptions import NotApplicable, NotSquareFree, ResourceCapExceeded
from symcomb.homalg import (
    betti_table,
    eisenbud_goto_check,
    hochster_betti,
    invariants_of_monomial,
    koszul_betti,
    multiplicity,
    reduced_euler_characteristic,
    reduced_homology,
    reduced_homology_of,
)
from symcomb.models.betti import BettiTable
from symcomb.models.monomial import MonomialIdeal
from symcomb.monomial import cover_ideal, prime_power, stanley_reisner, symbolic_power
from symcomb.simplicial import from_facets, is_matroid, simplex
from tests.samples import (
    C5,
    C6,
    K3,
    K3_345,
    NOT_GOOD,
    TETRA_BOUNDARY,
    U24,
    U25,
    all_complexes,
    cycle,
    random_complex,
)


def ideal(n, *gens):
    return MonomialIdeal.from_exponents(n, gens)


class TestReducedHomology(unittest.TestCase):
    def test_circle(self):
        self.assertEqual(reduced_homology(C6), [0, 0, 1])

    def test_sphere(self):
        self.assertEqual(reduced_homology(TETRA_BOUNDARY), [0, 0, 0, 1])

    def test_simplex_is_acyclic(self):
        self.assertEqual(reduced_homology(simplex(3)), [0, 0, 0, 0])

    def test_two_components(self):
        self.assertEqual(reduced_homology(from_facets(4, [[1, 2], [3, 4]])), [0, 1, 0])

    def test_empty_face_only(self):
        self.assertEqual(reduced_homology_of([0]), [1])
        self.assertEqual(reduced_homology_of([]), [])

    def test_characteristic_two(self):
        self.assertEqual(reduced_homology(C6, field_char=2), [0, 0, 1])
        self.assertEqual(reduced_homology(TETRA_BOUNDARY, field_char=2), [0, 0, 0, 1])

    def test_bad_characteristic(self):
        with self.assertRaises(ValueError):
            reduced_homology(C6, field_char=4)

    def test_euler_characteristic(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            complex_ = random_complex(6, rng)
            homology = reduced_homology(complex_)
            alternating = sum((-1) ** (i - 1) * h for i, h in enumerate(homology))
            self.assertEqual(alternating, reduced_euler_characteristic(complex_), msg=str(complex_))


class TestHochster(unittest.TestCase):
    def test_principal_ideal(self):
        table = hochster_betti(ideal(3, (1, 1, 1)))
        self.assertEqual(table.entries, {(1, 3): 1})
        self.assertEqual(table.projective_dimension, 1)

    def test_hexagon_ideals(self):
        self.assertEqual(6 - hochster_betti(stanley_reisner(C6)).projective_dimension, 2)
        self.assertEqual(6 - hochster_betti(cover_ideal(C6)).projective_dimension, 3)

    def test_strategies_agree(self):
        for source in (stanley_reisner(C6), cover_ideal(C6), stanley_reisner(U25), stanley_reisner(NOT_GOOD)):
            direct = hochster_betti(source, strategy="direct")
            dual = hochster_betti(source, strategy="dual")
            self.assertEqual(direct.entries, dual.entries)
            self.assertEqual(hochster_betti(source).entries, direct.entries)

    def test_koszul_route_agrees_on_square_free(self):
        for source in (stanley_reisner(C5), cover_ideal(C6), cover_ideal(U24)):
            self.assertEqual(koszul_betti(source).entries, hochster_betti(source).entries)

    def test_rejects_non_square_free(self):
        with self.assertRaises(NotSquareFree):
            hochster_betti(ideal(2, (2, 0)))
        with self.assertRaises(ValueError):
            hochster_betti(ideal(2, (1, 1)), strategy="sideways")

    def test_rational_and_binary_tables_agree(self):
        for complex_ in (C6, U24, TETRA_BOUNDARY, NOT_GOOD):
            source = stanley_reisner(complex_)
            self.assertEqual(hochster_betti(source, 0).entries, hochster_betti(source, 2).entries)

    def test_zero_ideal(self):
        self.assertEqual(hochster_betti(MonomialIdeal(3)).entries, {})


class TestBettiTable(unittest.TestCase):
    def test_rendering(self):
        text = str(hochster_betti(stanley_reisner(C5)))
        self.assertIn("total:", text)
        self.assertIn(".", text)

    def test_multiplicity_from_hilbert_series(self):
        table = hochster_betti(stanley_reisner(C6))
        self.assertEqual(table.multiplicity(2), 6)

    def test_regularity_conventions(self):
        table = BettiTable({(1, 2): 5, (2, 3): 5, (3, 5): 1}, 5)
        self.assertEqual(table.regularity, 2)
        self.assertEqual(table.ideal_regularity, 3)
        self.assertEqual(table.get(0, 0), 1)
        self.assertEqual(table.totals(), {0: 1, 1: 5, 2: 5, 3: 1})

    def test_pentagon_table(self):
        self.assertEqual(hochster_betti(stanley_reisner(C5)).entries, {(1, 2): 5, (2, 3): 5, (3, 5): 1})


class TestInvariants(unittest.TestCase):
    def test_hypersurface(self):
        result = invariants_of_monomial(ideal(2, (2, 0)))
        self.assertEqual(result.pd, 1)
        self.assertTrue(result.is_cm)
        self.assertEqual(result.height, 1)

    def test_polarization_and_lcm_routes_agree(self):
        for source in (prime_power([1, 2], 2, 2), symbolic_power(K3, None, 2), ideal(3, (2, 1, 0), (0, 1, 2), (1, 0, 1))):
            polarized, used = betti_table(source, method="polarize")
            direct, other = betti_table(source, method="lcm")
            self.assertEqual((used, other), ("polarize", "lcm"))
            self.assertEqual(polarized.entries, direct.entries)

    def test_resource_cap(self):
        source = prime_power([1, 2], 3, 2)
        with self.assertRaises(ResourceCapExceeded):
            betti_table(source, method="polarize", var_cap=3)
        with self.assertRaises(ResourceCapExceeded):
            invariants_of_monomial(source, var_cap=3)
        self.assertEqual(betti_table(source, method="auto", var_cap=3)[1], "lcm")

    def test_hexagon_cover_ideal(self):
        result = invariants_of_monomial(cover_ideal(C6))
        self.assertEqual(result.depth, 3)
        self.assertEqual(result.dim, 4)
        self.assertFalse(result.is_cm)
        self.assertEqual(result.to_dict()["is_CM"], False)

    def test_depth_is_bounded_by_dimension(self):
        rng = np.random.default_rng(5)
        for _ in range(60):
            result = invariants_of_monomial(stanley_reisner(random_complex(5, rng)))
            self.assertLessEqual(result.depth, result.dim)
            self.assertEqual(result.is_cm, result.depth == result.dim)

    def test_regularity_bounds_generator_degree(self):
        rng = np.random.default_rng(9)
        for _ in range(200):
            source = stanley_reisner(random_complex(5, rng))
            self.assertGreaterEqual(hochster_betti(source).regularity, source.max_degree - 1)

    def test_matroids_are_cohen_macaulay(self):
        for complex_ in all_complexes(4):
            if is_matroid(complex_)[0]:
                self.assertTrue(invariants_of_monomial(stanley_reisner(complex_)).is_cm, msg=str(complex_))


class TestSymbolicPowersOfMatroids(unittest.TestCase):
    def test_canonical_weights(self):
        for complex_ in (U24, K3, simplex(4)):
            for k in (1, 2):
                result = invariants_of_monomial(symbolic_power(complex_, None, k))
                self.assertTrue(result.is_cm, msg=f"{complex_} k={k}")

    def test_five_point_uniform_matroid(self):
        self.assertTrue(invariants_of_monomial(symbolic_power(U25, None, 1)).is_cm)
        self.assertTrue(invariants_of_monomial(symbolic_power(U25, None, 2), method="lcm").is_cm)

    def test_good_weighted_triangle(self):
        for k in (1, 2):
            self.assertTrue(invariants_of_monomial(symbolic_power(K3_345, k=k), method="lcm").is_cm)

    def test_hexagon_depth_is_three(self):
        first = invariants_of_monomial(symbolic_power(C6, None, 1))
        second = invariants_of_monomial(symbolic_power(C6, None, 2), method="lcm")
        self.assertEqual((first.depth, second.depth), (3, 3))
        self.assertFalse(first.is_cm or second.is_cm)


class TestMultiplicityAndEisenbudGoto(unittest.TestCase):
    def test_multiplicity(self):
        self.assertEqual(multiplicity(C6), 6)
        self.assertEqual(multiplicity(cycle(10)), 10)
        with self.assertRaises(NotApplicable):
            multiplicity(from_facets(3, [[1, 2], [3]]))

    def test_pentagon(self):
        report = eisenbud_goto_check(stanley_reisner(C5))
        self.assertTrue(report.holds)
        self.assertEqual((report.reg, report.e, report.height), (2, 5, 3))
        self.assertEqual(report.to_dict(), {"holds": True, "reg": 2, "e": 5, "ht": 3})

    def test_not_applicable(self):
        with self.assertRaises(NotApplicable):
            eisenbud_goto_check(ideal(3, (1, 0, 0), (0, 1, 1)))
        with self.assertRaises(NotApplicable):
            eisenbud_goto_check(stanley_reisner(from_facets(4, [[1, 2], [3, 4]])))


class TestCharacteristicDependence(unittest.TestCase):
    # six-vertex triangulation of the real projective plane
    RP2 = from_facets(
        6,
        [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)],
    )

    def test_homology_depends_on_the_field(self):
        self.assertEqual(reduced_homology(self.RP2), [0, 0, 0, 0])
        self.assertEqual(reduced_homology(self.RP2, field_char=2), [0, 0, 1, 1])

    def test_cohen_macaulay_only_away_from_two(self):
        ring = stanley_reisner(self.RP2)
        self.assertTrue(invariants_of_monomial(ring, field_char=0).is_cm)
        self.assertTrue(invariants_of_monomial(ring, field_char=3).is_cm)
        self.assertFalse(invariants_of_monomial(ring, field_char=2).is_cm)


if __name__ == "__main__":
    unittest.main()
