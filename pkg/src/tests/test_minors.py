import sys
import unittest
from math import comb, factorial
from pathlib import Path
from unittest import mock

sys.path.insert(0, str(Path(__file__).parent.parent))

from symcomb.exceptions import MatrixTooSmall, NotAdmissible, OracleTooLarge, OutOfRange
from symcomb.minors import (
    admissible_partitions,
    check_hf_At,
    count_tableaux,
    dim_schur,
    enumerate_hpi,
    has_unique_predecessor,
    hf_At,
    hf_At_oracle,
    is_admissible,
    is_d_admissible,
    multiplicity_n,
    multiplicity_one_class,
    no_other_shapes,
    partition_identity,
    pieri_multiplicity,
    predecessors,
    random_integer_matrix,
    regularity_and_a_invariant,
    relation_degree_bounds,
    render_bidiagram,
    sagbi_degree_bound,
    shape_relations,
    tensor_sum_rule,
    verify_det_relations,
    young_diagram,
)
from symcomb.models.partition import BiDiagram, MinorsParams, Partition, partitions_of


def P(*parts):
    return Partition(parts)


def bi(gamma, lam):
    return BiDiagram(Partition(gamma), Partition(lam))


class TestAdmissibility(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(is_d_admissible(P(2, 2), 2, 2))
        self.assertFalse(is_admissible(P(1, 1, 1), 3))
        self.assertTrue(is_d_admissible(P(4, 1, 1), 2, 3))
        self.assertFalse(is_d_admissible(P(4, 1, 1), 2, 2))

    def test_predecessors(self):
        self.assertEqual(predecessors(P(4, 1, 1), 2), [P(3, 1)])
        self.assertEqual(predecessors(P(3, 3), 2), [P(3, 1)])
        self.assertEqual(predecessors(P(2), 2), [])
        self.assertEqual(predecessors(P(3, 2, 1), 2), [P(3, 1), P(2, 2)])
        with self.assertRaises(NotAdmissible):
            predecessors(P(1, 1, 1, 1), 2)

    def test_unique_predecessor(self):
        self.assertTrue(has_unique_predecessor(P(3, 3), 2))
        self.assertTrue(has_unique_predecessor(P(4, 1, 1), 2))
        self.assertTrue(has_unique_predecessor(P(4, 2), 3))
        self.assertFalse(has_unique_predecessor(P(3, 2, 1), 2))
        with self.assertRaises(NotAdmissible):
            has_unique_predecessor(P(2), 2)

    def test_shape_test_agrees_with_counting(self):
        for t in (1, 2, 3):
            for d in range(2, 6):
                for lam in admissible_partitions(t, d):
                    has_unique_predecessor(lam, t)


class TestMultiplicities(unittest.TestCase):
    def test_base_cases(self):
        self.assertEqual(multiplicity_n(bi((2,), (2,)), 2), 1)
        for gamma in admissible_partitions(3, 2):
            for lam in admissible_partitions(3, 2):
                self.assertEqual(multiplicity_n(BiDiagram(gamma, lam), 3), 1)

    def test_shape_relation_multiplicity(self):
        self.assertEqual(multiplicity_n(bi((3, 3), (4, 1, 1)), 2), 1)

    def test_pieri(self):
        self.assertEqual(pieri_multiplicity(P(4, 4), 2), 3)
        self.assertEqual(pieri_multiplicity(P(3, 2, 1), 2), 2)

    def test_standard_tableaux_square_sum(self):
        for d in range(1, 6):
            total = sum(pieri_multiplicity(lam, 1) ** 2 for lam in admissible_partitions(1, d))
            self.assertEqual(total, factorial(d))

    def test_rejects_inadmissible(self):
        with self.assertRaises(NotAdmissible):
            multiplicity_n(bi((1, 1, 1, 1), (4,)), 2)

    def test_multiplicity_one_families(self):
        for t in (1, 2, 3):
            for d in range(1, 6):
                for lam in admissible_partitions(t, d):
                    family = multiplicity_one_class(lam, t)
                    self.assertEqual(family is not None, pieri_multiplicity(lam, t) == 1, msg=f"{lam} t={t}")


class TestSchurModules(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(dim_schur(P(2), 3), 3)
        self.assertEqual(dim_schur(P(1, 1), 3), 6)
        self.assertEqual(dim_schur(P(2, 1), 2), 2)
        self.assertEqual(dim_schur(P(3), 2), 0)

    def test_matches_tableau_count(self):
        for size in range(1, 6):
            for lam in partitions_of(size, size):
                for n in range(1, 5):
                    self.assertEqual(dim_schur(lam, n), count_tableaux(lam, n), msg=f"{lam} n={n}")

    def test_vanishing(self):
        for lam in partitions_of(5, 5):
            for n in range(1, 6):
                self.assertEqual(dim_schur(lam, n) == 0, lam.height > n)


class TestHilbertFunction(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(hf_At(MinorsParams(2, 3, 2), 2), 6)
        self.assertEqual(hf_At(MinorsParams(2, 4, 2), 2), 20)
        self.assertEqual(hf_At(MinorsParams(3, 3, 2), 2), 45)
        self.assertEqual(hf_At(MinorsParams(2, 3, 2), 3), 10)
        self.assertEqual(hf_At(MinorsParams(2, 4, 2), 3), 50)
        self.assertEqual(hf_At(MinorsParams(2, 3, 2), 0), 1)

    def test_oracle_agrees(self):
        cases = [(2, 3, 2, 1), (2, 3, 2, 2), (2, 3, 2, 3), (2, 4, 2, 2), (2, 4, 2, 3), (3, 3, 2, 2), (3, 3, 3, 3),
                 (2, 4, 2, 1), (3, 4, 2, 1), (3, 4, 2, 2)]
        for m, n, t, d in cases:
            self.assertEqual(check_hf_At(MinorsParams(m, n, t), d), hf_At(MinorsParams(m, n, t), d))
        self.assertEqual(hf_At(MinorsParams(3, 4, 2), 1), 18)
        self.assertEqual(hf_At(MinorsParams(3, 4, 2), 2), 165)

    def test_linear_minors_give_polynomial_ring(self):
        for m, n in ((1, 2), (2, 2)):
            for d in range(4):
                expected = comb(m * n + d - 1, d)
                self.assertEqual(hf_At(MinorsParams(m, n, 1), d), expected)
                self.assertEqual(hf_At_oracle(MinorsParams(m, n, 1), d), expected)

    def test_oracle_cap(self):
        with self.assertRaises(OracleTooLarge):
            hf_At_oracle(MinorsParams(2, 3, 2), 2, max_td=3)

    def test_sum_rule_and_tensor_bound(self):
        checked = 0
        for n in range(1, 7):
            for m in range(1, n + 1):
                for t in range(1, m + 1):
                    if comb(m, t) * comb(n, t) > 20:
                        continue
                    params = MinorsParams(m, n, t)
                    for d in range(1, 4):
                        lhs, rhs = tensor_sum_rule(params, d)
                        self.assertEqual(lhs, rhs, msg=f"{params} d={d}")
                        self.assertLessEqual(hf_At(params, d), rhs)
                        checked += 1
        self.assertGreater(checked, 0)
        with self.assertRaises(ValueError):
            tensor_sum_rule(MinorsParams(2, 3, 1), 0)

    def test_sum_rule_weights_by_pair_multiplicities(self):
        with mock.patch("symcomb.minors.schur.multiplicity_n", wraps=multiplicity_n) as pairs:
            lhs, rhs = tensor_sum_rule(MinorsParams(2, 3, 1), 2)
        self.assertEqual(lhs, rhs)
        self.assertGreater(pairs.call_count, 0)


class TestRegularity(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(regularity_and_a_invariant(MinorsParams(5, 5, 3)).to_dict(), {"case": "ii", "a": -13, "reg": 12, "k0": 3})
        info = regularity_and_a_invariant(MinorsParams(4, 5, 3))
        self.assertEqual((info.case, info.a, info.reg, info.k0), ("ii", -16, 4, 7))
        info = regularity_and_a_invariant(MinorsParams(5, 6, 2))
        self.assertEqual((info.case, info.a, info.reg, info.k0), ("i", -15, 15, None))

    def test_out_of_range(self):
        with self.assertRaises(OutOfRange):
            regularity_and_a_invariant(MinorsParams(3, 3, 2))
        with self.assertRaises(OutOfRange):
            regularity_and_a_invariant(MinorsParams(3, 4, 3))

    def test_sagbi_bound(self):
        self.assertEqual(sagbi_degree_bound(4, 3), 2)
        self.assertEqual(sagbi_degree_bound(5, 3), 4)
        self.assertEqual(sagbi_degree_bound(3, 2), 1)
        for m, t in ((3, 3), (3, 1)):
            with self.assertRaises(OutOfRange):
                sagbi_degree_bound(m, t)

    def test_relation_bounds(self):
        bounds = relation_degree_bounds(MinorsParams(3, 4, 2))
        self.assertEqual(bounds.to_dict(), {"colbound": 5, "degbound": 7, "reg_bound": 4})
        self.assertIsNone(relation_degree_bounds(MinorsParams(3, 3, 2)).reg_bound)
        with self.assertRaises(OutOfRange):
            relation_degree_bounds(MinorsParams(2, 4, 2))


class TestPartitionIdentities(unittest.TestCase):
    def test_examples(self):
        report = partition_identity([1, 4, 4], [3, 3, 3], 4)
        self.assertTrue(report.is_homogeneous_primitive and report.is_primitive)
        report = partition_identity([1, 1, 5, 5], [3, 3, 3, 3], 5)
        self.assertTrue(report.is_homogeneous)
        self.assertFalse(report.is_primitive or report.is_homogeneous_primitive)
        report = partition_identity([2], [2], 2)
        self.assertEqual(report.to_dict(), dict.fromkeys(report.to_dict(), True))

    def test_not_an_identity(self):
        self.assertFalse(partition_identity([1, 2], [4], 4).is_identity)

    def test_range(self):
        with self.assertRaises(OutOfRange):
            partition_identity([6], [6], 5)

    def test_enumeration(self):
        self.assertEqual(enumerate_hpi(4, 3, 3), [(1, 4, 4)])
        self.assertEqual(enumerate_hpi(3, 2, 2), [(1, 3)])
        self.assertEqual(enumerate_hpi(5, 3, 1), [(3,)])


class TestShapeRelations(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(shape_relations(MinorsParams(3, 4, 2)), [bi((3, 3), (4, 1, 1))])
        self.assertEqual(shape_relations(MinorsParams(5, 6, 3)), [bi((4, 4, 1), (5, 2, 2))])
        self.assertEqual(
            shape_relations(MinorsParams(6, 8, 4)),
            [bi((6, 6), (8, 2, 2)), bi((5, 5, 2), (6, 3, 3))],
        )

    def test_relations_have_one_symmetric_predecessor(self):
        for m, n, t in ((3, 4, 2), (5, 6, 3), (6, 8, 4), (8, 9, 5), (7, 9, 4)):
            for relation in shape_relations(MinorsParams(m, n, t)):
                self.assertFalse(relation.is_symmetric)
                self.assertEqual(relation.gamma.size, 3 * t)
                self.assertTrue(is_d_admissible(relation.gamma, t, 3) and is_d_admissible(relation.lam, t, 3))
                self.assertEqual(multiplicity_n(relation, t), 1)
                self.assertEqual(predecessors(relation.gamma, t), predecessors(relation.lam, t))
                self.assertEqual(len(predecessors(relation.gamma, t)), 1)

    def test_no_other_shapes(self):
        self.assertEqual(no_other_shapes(4, 8, 5), [])

    def test_rendering(self):
        self.assertEqual(young_diagram(P(2, 1)), ["##", "#"])
        self.assertEqual(render_bidiagram(bi((3, 3), (4, 1, 1))), "### | ####\n### | #\n    | #")


class TestDeterminantalRelations(unittest.TestCase):
    def test_identity_matrix(self):
        identity = [[int(i == j) for j in range(4)] for i in range(4)]
        self.assertTrue(verify_det_relations(2, identity))

    def test_fixed_matrix(self):
        matrix = [[1, 2, 3, 4], [5, 6, 7, 11], [13, 17, 19, 23], [29, 31, 37, 41]]
        self.assertTrue(verify_det_relations(2, matrix))

    def test_random_matrices(self):
        for seed in range(100):
            self.assertTrue(verify_det_relations(3, random_integer_matrix(5, 5, seed=seed)), msg=f"seed={seed}")

    def test_random_matrix_is_reproducible(self):
        matrix = random_integer_matrix(5, 5, seed=7)
        self.assertEqual(matrix, random_integer_matrix(5, 5, seed=7))
        self.assertTrue(all(-9 <= x <= 9 for row in matrix for x in row))

    def test_errors(self):
        with self.assertRaises(MatrixTooSmall):
            verify_det_relations(2, [[1, 2, 3, 4]] * 3)
        with self.assertRaises(OutOfRange):
            verify_det_relations(1, [[1, 0], [0, 1]])


if __name__ == "__main__":
    unittest.main()
