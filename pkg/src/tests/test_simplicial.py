import sys
import unittest
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np

from symcomb.exceptions import ComparablePrimes, DualHasEmptyFacet, EmptyInput, VertexOutOfRange
from symcomb.models.complex import SimplicialComplex
from symcomb.simplicial import (
    connectivity_degree,
    dimension,
    dual,
    from_facets,
    is_matroid,
    is_pure,
    is_strongly_connected,
    stanley_reisner_primes,
    symmetric_exchange_holds,
)
from tests.samples import C6, K3, NOT_GOOD, U24, all_complexes, cycle


class TestConstruction(unittest.TestCase):
    def test_from_facets_drops_non_maximal_sets(self):
        complex_ = from_facets(4, [{1, 2}, {2}, {3, 4}])
        self.assertEqual(complex_.facets, ((1, 2), (3, 4)))

    def test_triangle_and_hexagon(self):
        self.assertEqual(K3.facets, ((1, 2), (1, 3), (2, 3)))
        self.assertEqual(len(C6.facets), 6)

    def test_errors(self):
        with self.assertRaises(EmptyInput):
            from_facets(3, [[], []])
        with self.assertRaises(VertexOutOfRange):
            from_facets(3, [[1, 4]])
        with self.assertRaises(ValueError):
            SimplicialComplex(3, ((1, 2), (1,)))

    def test_from_facets_is_idempotent(self):
        for complex_ in (K3, C6, U24, NOT_GOOD):
            self.assertEqual(from_facets(complex_.n, complex_.facets), complex_)

    def test_json_round_trip(self):
        self.assertEqual(SimplicialComplex.from_dict(C6.to_dict()), C6)


class TestBasicInvariants(unittest.TestCase):
    def test_dimension(self):
        self.assertEqual(dimension(K3), 1)
        self.assertEqual(dimension(from_facets(3, [[1, 2, 3]])), 2)
        self.assertEqual(dimension(from_facets(3, [[1, 2], [3]])), 1)

    def test_purity(self):
        self.assertTrue(is_pure(C6))
        self.assertFalse(is_pure(from_facets(3, [[1, 2], [3]])))
        self.assertTrue(is_pure(U24))

    def test_f_vector_of_triangle(self):
        self.assertEqual(K3.f_vector(), [1, 3, 3])


class TestMatroid(unittest.TestCase):
    def test_uniform_matroid(self):
        self.assertEqual(is_matroid(U24), (True, None))

    def test_hexagon_witness(self):
        ok, witness = is_matroid(C6)
        self.assertFalse(ok)
        self.assertEqual(witness.facet_f, (1, 2))
        self.assertEqual(witness.facet_g, (4, 5))
        self.assertEqual(witness.element_i, 1)
        self.assertEqual(witness.to_dict(), {"F": [1, 2], "G": [4, 5], "i": 1})

    def test_non_pure_complex(self):
        self.assertFalse(is_matroid(NOT_GOOD)[0])

    def test_symmetric_exchange(self):
        self.assertTrue(symmetric_exchange_holds(U24)[0])
        self.assertTrue(symmetric_exchange_holds(K3)[0])
        self.assertFalse(symmetric_exchange_holds(C6)[0])

    def test_matroid_implies_pure_and_symmetric_exchange(self):
        for complex_ in all_complexes(4):
            if is_matroid(complex_)[0]:
                self.assertTrue(is_pure(complex_))
                self.assertTrue(symmetric_exchange_holds(complex_)[0])


class TestDuality(unittest.TestCase):
    def test_uniform_is_self_dual(self):
        self.assertEqual(dual(U24), U24)

    def test_hexagon_dual(self):
        dual_c6 = dual(C6)
        self.assertEqual(len(dual_c6.facets), 6)
        self.assertTrue(all(len(f) == 4 for f in dual_c6.facets))
        self.assertIn((3, 4, 5, 6), dual_c6.facets)

    def test_full_simplex_has_no_dual(self):
        with self.assertRaises(DualHasEmptyFacet):
            dual(from_facets(3, [[1, 2, 3]]))

    def test_involution_and_matroid_duality_on_small_pure_complexes(self):
        checked = 0
        for complex_ in all_complexes(5):
            if not is_pure(complex_) or any(len(f) == complex_.n for f in complex_.facets):
                continue
            dual_complex = dual(complex_)
            self.assertEqual(dual(dual_complex), complex_)
            self.assertEqual(is_matroid(complex_)[0], is_matroid(dual_complex)[0])
            checked += 1
        self.assertGreater(checked, 200)


class TestConnectivity(unittest.TestCase):
    def test_strong_connectivity(self):
        self.assertTrue(is_strongly_connected(C6))
        self.assertFalse(is_strongly_connected(from_facets(4, [[1, 2], [3, 4]])))
        self.assertTrue(is_strongly_connected(U24))

    def test_connectivity_examples(self):
        self.assertEqual(connectivity_degree(stanley_reisner_primes(C6), 6), 1)
        self.assertEqual(connectivity_degree([[4, 5]], 5), 3)
        self.assertEqual(connectivity_degree(stanley_reisner_primes(K3), 3), 1)

    def test_disjoint_primes_affine_and_projective(self):
        self.assertEqual(connectivity_degree([[1, 2], [3, 4]], 4), 0)
        self.assertEqual(connectivity_degree([[1, 2], [3, 4]], 4, projective=True), -1)

    def test_comparable_primes_rejected(self):
        with self.assertRaises(ComparablePrimes):
            connectivity_degree([[1], [1, 2]], 3)

    def test_strong_connectivity_matches_connectivity_degree(self):
        for complex_ in all_complexes(5):
            if not is_pure(complex_):
                continue
            primes = stanley_reisner_primes(complex_)
            d = dimension(complex_) + 1
            self.assertEqual(
                is_strongly_connected(complex_),
                connectivity_degree(primes, complex_.n) >= d - 1,
                msg=str(complex_),
            )

    def test_relabeling_invariance(self):
        rng = np.random.default_rng(0)
        for n in (5, 6, 7):
            primes = stanley_reisner_primes(cycle(n))
            expected = connectivity_degree(primes, n)
            for _ in range(20):
                perm = [int(p) + 1 for p in rng.permutation(n)]
                relabeled = [[perm[v - 1] for v in prime] for prime in primes]
                self.assertEqual(connectivity_degree(relabeled, n), expected)


if __name__ == "__main__":
    unittest.main()
