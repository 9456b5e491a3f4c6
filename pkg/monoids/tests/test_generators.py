import itertools
import random

import pytest
from django.test import SimpleTestCase

from monoids.closure import closure
from monoids.exceptions import SpecialCaseError, TransformationError, WreathSearchError
from monoids.generators import (
    a_representatives,
    adjacent_companion,
    bc_representatives,
    collapse_from_b,
    companion_of,
    decompose_sigma,
    full_generating_set,
    is_companion,
    transposition_companion,
    units_generators,
    units_group_order,
    wreath_group_order,
    wreath_order,
    wreath_pair,
)
from monoids.partitions import order_s, parse_partition, partitions_of
from monoids.rank_formulas import rank_total
from monoids.transformations import (
    LabelKind,
    Membership,
    Transformation,
    classify,
    enumerate_t,
    induced_block_map,
    membership,
)


def P(spec):
    return parse_partition(spec)


def tags(partition, elements):
    return [classify(partition, f).tag for f in elements]


class WreathPairTest(SimpleTestCase):
    """Test two-element generation of S_n wr S_m"""

    def test_orders(self):
        """Test the generated order is (n!)^m m!"""
        for (n, m), order in {(2, 2): 8, (3, 2): 72, (2, 3): 48}.items():
            pair = wreath_pair(n, m)
            self.assertEqual(wreath_group_order(n, m, (pair.first, pair.second)), order)
            self.assertEqual(pair.expected_order, order)

    def test_larger_factors(self):
        """Test every factor up to n, m <= 4"""
        for n, m in itertools.product(range(2, 5), repeat=2):
            pair = wreath_pair(n, m)
            self.assertEqual(wreath_group_order(n, m, (pair.first, pair.second)), pair.expected_order)

    def test_wreath_order(self):
        """Test (n!)^m m! for a few factors"""
        self.assertEqual(wreath_order(2, 2), 8)
        self.assertEqual(wreath_order(3, 3), 1296)
        self.assertEqual(wreath_order(5, 2), 28800)

    def test_random_fallback_is_quiet(self):
        """Test the seeded random search for S_3 wr S_3 logs nothing above DEBUG"""
        with self.assertLogs('monoids.generators', level='DEBUG') as logs:
            pair = wreath_pair(3, 3, attempts=2000, seed=11)
        self.assertEqual(wreath_group_order(3, 3, (pair.first, pair.second)), 1296)
        self.assertTrue(any('searching randomly' in line for line in logs.output))
        self.assertFalse([record for record in logs.records if record.levelname != 'DEBUG'])

    def test_not_a_wreath_factor(self):
        """Test degenerate factors are refused"""
        with self.assertRaises(WreathSearchError):
            wreath_pair(1, 3)


class UnitsGeneratorsTest(SimpleTestCase):
    """Test generating sets of the group of units"""

    def test_examples(self):
        """Test sizes and generated orders"""
        for spec, size, order in (('2+2', 2, 8), ('3+2', 2, 12), ('3+2+2', 3, 48)):
            units = units_generators(P(spec))
            self.assertEqual(len(units), size, spec)
            self.assertEqual(units_group_order(units), order, spec)

    def test_singleton_is_fixed(self):
        """Test a lone singleton is fixed by every unit generator"""
        partition = P('3+2+1')
        for unit in units_generators(partition):
            self.assertEqual(unit(0), 0)

    def test_special_case(self):
        """Test groups of order at most 2 are refused"""
        with self.assertRaises(SpecialCaseError):
            units_generators(P('2+1'))

    def test_small_partitions(self):
        """Test every partition of 3..7 with at least three units"""
        for n in range(3, 8):
            for partition in partitions_of(n):
                if order_s(partition) < 3:
                    continue
                units = units_generators(partition)
                self.assertEqual(len(units), rank_total(partition).rank_units, str(partition))
                self.assertEqual(units_group_order(units), order_s(partition), str(partition))

    @pytest.mark.slow
    def test_up_to_nine_points(self):
        """Test every partition of 8 and 9 points"""
        for n in (8, 9):
            for partition in partitions_of(n):
                units = units_generators(partition)
                self.assertEqual(units_group_order(units), order_s(partition), str(partition))


class RepresentativesTest(SimpleTestCase):
    """Test A, B and C representatives"""

    def test_a_representatives(self):
        """Test one element per realizable size pair"""
        self.assertEqual(tags(P('3+2+1'), a_representatives(P('3+2+1'))), ['A(1,2)', 'A(1,3)', 'A(2,3)'])
        self.assertEqual(tags(P('2+2'), a_representatives(P('2+2'))), ['A(2,2)'])
        self.assertEqual(a_representatives(P('1+1')), [Transformation((1, 1))])

    def test_bc_representatives(self):
        """Test B_i for consecutive sizes and C_i where required"""
        self.assertEqual(tags(P('3+2'), bc_representatives(P('3+2'))), ['B(1)', 'C(1)'])
        self.assertEqual(tags(P('2+1'), bc_representatives(P('2+1'))), ['B(1)'])
        self.assertEqual(tags(P('3+1'), bc_representatives(P('3+1'))), ['B(1)', 'C(2)'])

    def test_image_sizes(self):
        """Test B_i has image N - l_(i+1) + l_i and C_i has image N - 1"""
        for n in range(2, 9):
            for partition in partitions_of(n):
                sizes = partition.distinct_sizes
                for f in bc_representatives(partition):
                    label = classify(partition, f)
                    if label.kind is LabelKind.B:
                        i = label.index
                        self.assertEqual(f.rank, n - sizes[i] + sizes[i - 1])
                    else:
                        self.assertIs(label.kind, LabelKind.C)
                        self.assertEqual(f.rank, n - 1)

    def test_collapse_from_b(self):
        """Test squaring a B element gives a C element when sizes differ by one"""
        partition = P('2+1')
        self.assertEqual(collapse_from_b(partition, 2), Transformation((0, 1, 1)))
        self.assertEqual(classify(partition, collapse_from_b(partition, 2)).tag, 'C(2)')
        self.assertEqual(classify(P('4+3+1'), collapse_from_b(P('4+3+1'), 3)).tag, 'C(3)')
        with self.assertRaises(TransformationError):
            collapse_from_b(P('3+1'), 2)


class FullGeneratingSetTest(SimpleTestCase):
    """Test the assembled generating set"""

    def test_sizes(self):
        """Test cardinalities of a few sets"""
        self.assertEqual(len(full_generating_set(P('2+2'))), 4)
        self.assertEqual(len(full_generating_set(P('3+2+1'))), 7)
        self.assertEqual(len(full_generating_set(P('2+1'))), 3)
        self.assertEqual(len(full_generating_set(P('1'))), 1)

    def test_special_cases(self):
        """Test hand-sized sets for groups of order at most 2"""
        self.assertEqual(
            [str(f) for f in full_generating_set(P('2+1')).transformations],
            ['0,2,1', '1,1,2', '1,0,0'],
        )
        self.assertEqual([str(f) for f in full_generating_set(P('2')).transformations], ['1,0', '0,0'])
        self.assertEqual([str(f) for f in full_generating_set(P('1+1')).transformations], ['1,0', '1,1'])

    def test_order_of_kinds(self):
        """Test units come first, then A, B and C elements"""
        rank = {LabelKind.UNIT: 0, LabelKind.A: 1, LabelKind.B: 2, LabelKind.C: 3}
        for spec in ('3+2+1', '2+2+1+1', '5+2', '4+4+2'):
            kinds = [rank[element.label.kind] for element in full_generating_set(P(spec))]
            self.assertEqual(kinds, sorted(kinds), spec)

    def test_cardinality_matches_rank(self):
        """Test |set| = rank for every partition of 1..9"""
        for n in range(1, 10):
            for partition in partitions_of(n):
                self.assertEqual(len(full_generating_set(partition)), rank_total(partition).total, str(partition))

    @pytest.mark.slow
    def test_cardinality_up_to_twelve(self):
        """Test |set| = rank for partitions of 10..12"""
        for n in range(10, 13):
            for partition in partitions_of(n):
                self.assertEqual(len(full_generating_set(partition)), rank_total(partition).total, str(partition))


class CompanionTest(SimpleTestCase):
    """Test companions of block permutations"""

    def test_identity(self):
        """Test the identity permutation"""
        partition = P('3+2+1')
        self.assertEqual(companion_of(partition, (0, 1, 2)), Transformation.identity(6))

    def test_forced_companion(self):
        """Test the swap on 2+1"""
        self.assertEqual(companion_of(P('2+1'), (1, 0)), Transformation((1, 0, 0)))

    def test_every_block_permutation(self):
        """Test companion clauses for every partition of N <= 7 with at most four blocks"""
        for n in range(1, 8):
            for partition in partitions_of(n):
                if partition.n_blocks > 4:
                    continue
                for tau in itertools.permutations(range(partition.n_blocks)):
                    self.assertTrue(is_companion(partition, companion_of(partition, tau), tau), f'{partition} {tau}')

    def test_rejects_non_permutation(self):
        """Test tau must permute the blocks"""
        with self.assertRaises(TransformationError):
            companion_of(P('2+1'), (0, 0))

    def test_adjacent_and_transposition_companions(self):
        """Test the conjugation products are companions of transpositions"""
        for spec in ('3+2+1', '4+2+1+1', '3+3+2', '5+3+2+1'):
            partition = P(spec)
            for k in range(partition.n_blocks - 1):
                tau = list(range(partition.n_blocks))
                tau[k], tau[k + 1] = k + 1, k
                self.assertTrue(is_companion(partition, adjacent_companion(partition, k), tau))
            for i, j in itertools.combinations(range(partition.n_blocks), 2):
                tau = list(range(partition.n_blocks))
                tau[i], tau[j] = j, i
                self.assertTrue(is_companion(partition, transposition_companion(partition, i, j), tau), f'{spec} {i} {j}')

    def test_companions_lie_in_units_and_swaps(self):
        """Test units and B representatives generate every companion of 3+2+1"""
        partition = P('3+2+1')
        swaps = [f for f in bc_representatives(partition) if classify(partition, f).kind is LabelKind.B]
        result = closure(units_generators(partition) + swaps)
        for tau in itertools.permutations(range(3)):
            self.assertIn(companion_of(partition, tau), result)


class DecomposeSigmaTest(SimpleTestCase):
    """Test f = e h g on Σ(X,P)"""

    def check(self, partition, f):
        e, h, g = decompose_sigma(partition, f)
        self.assertEqual(e * h * g, f)
        self.assertEqual(e * e, e)
        self.assertEqual(e.kernel_classes(), f.kernel_classes())
        self.assertEqual(induced_block_map(partition, e).images, tuple(range(partition.n_blocks)))
        self.assertEqual(membership(partition, h), Membership.IN_S)
        self.assertEqual(induced_block_map(partition, h).images, tuple(range(partition.n_blocks)))
        tau = induced_block_map(partition, f).images
        self.assertTrue(is_companion(partition, g, tau))

    def test_alignment_needed(self):
        """Test an element whose companion needs a target-side unit"""
        self.check(P('2+1'), Transformation((2, 0, 0)))

    def test_unit(self):
        """Test a unit decomposes with e the identity"""
        partition = P('3+2+1')
        f = Transformation((0, 2, 1, 4, 5, 3))
        e, _, _ = decompose_sigma(partition, f)
        self.assertEqual(e, Transformation.identity(6))
        self.check(partition, f)

    def test_every_sigma_element(self):
        """Test all of Σ for partitions of N <= 4"""
        for n in range(1, 5):
            for partition in partitions_of(n):
                for f in enumerate_t(partition):
                    if membership(partition, f) >= Membership.IN_SIGMA:
                        self.check(partition, f)

    def test_random_sigma_elements(self):
        """Test sampled Σ elements for every partition of 5..7 points"""
        rng = random.Random(0)
        for n in range(5, 8):
            for partition in partitions_of(n):
                for _ in range(30):
                    self.check(partition, _random_sigma(partition, rng))

    @pytest.mark.slow
    def test_thousand_sigma_elements(self):
        """Test 1000 sampled Σ elements for every partition of 5..7 points"""
        rng = random.Random(1)
        for n in range(5, 8):
            for partition in partitions_of(n):
                for _ in range(1000):
                    self.check(partition, _random_sigma(partition, rng))

    def test_requires_sigma(self):
        """Test elements outside Σ are refused"""
        from monoids.exceptions import MembershipError
        with self.assertRaises(MembershipError):
            decompose_sigma(P('2+1'), Transformation((0, 0, 0)))


def _random_sigma(partition, rng):
    tau = list(range(partition.n_blocks))
    rng.shuffle(tau)
    images = []
    for block, target in enumerate(tau):
        start = partition.offsets[target]
        images.extend(start + rng.randrange(partition.block_sizes[target]) for _ in partition.block_range(block))
    return Transformation(tuple(images))
