import itertools

import pytest
from django.test import SimpleTestCase

from monoids.exceptions import MembershipError, TransformationError
from monoids.partitions import order_s, order_sigma, order_t, parse_partition, partitions_of
from monoids.transformations import (
    LabelKind,
    Membership,
    Transformation,
    classify,
    compose,
    count_by_enumeration,
    double_coset_invariant,
    enumerate_t,
    fiber_profile,
    induced_block_map,
    injection_element,
    j_invariant,
    membership,
    same_double_coset,
    units_of,
)


def T(text):
    return Transformation.parse(text)


class TransformationTest(SimpleTestCase):
    """Test the Transformation value type"""

    def test_compose_left_to_right(self):
        """Test (x)(f*g) = ((x)f)g"""
        f, g = T('1,0,2'), T('0,2,1')
        self.assertEqual(compose(f, g), T('2,0,1'))
        self.assertEqual(f * g, compose(f, g))

    def test_parse_and_render(self):
        """Test the comma format"""
        f = T('1, 0,2')
        self.assertEqual(f.images, (1, 0, 2))
        self.assertEqual(str(f), '1,0,2')

    def test_rejects_bad_text(self):
        """Test malformed transformations"""
        for text in ('a,b', '3,0', '', '1,-1', '²,0,1', '1,٣,0'):
            with self.assertRaises(TransformationError):
                T(text)

    def test_degree_mismatch(self):
        """Test composing different degrees"""
        with self.assertRaises(TransformationError):
            compose(T('0,1'), T('0,1,2'))

    def test_kernel_and_image(self):
        """Test kernel classes and rank"""
        f = T('2,2,0,0,1')
        self.assertEqual(f.kernel_classes(), ((0, 1), (2, 3), (4,)))
        self.assertEqual(f.rank, 3)
        self.assertFalse(f.is_permutation)

    def test_inverse_and_power(self):
        """Test group operations on permutations"""
        f = T('1,2,0')
        self.assertEqual(f * f.inverse(), Transformation.identity(3))
        self.assertEqual(f.power(3), Transformation.identity(3))
        with self.assertRaises(TransformationError):
            T('0,0,1').inverse()


class MembershipTest(SimpleTestCase):
    """Test T â Î£ â S membership"""

    def setUp(self):
        self.partition = parse_partition('2+1')

    def test_levels(self):
        """Test each membership level on 2+1"""
        self.assertEqual(membership(self.partition, T('0,1,2')), Membership.IN_S)
        self.assertEqual(membership(self.partition, T('0,2,1')), Membership.IN_S)
        self.assertEqual(membership(self.partition, T('2,0,0')), Membership.IN_SIGMA)
        self.assertEqual(membership(self.partition, T('0,0,0')), Membership.IN_T)
        self.assertEqual(membership(self.partition, T('0,1,0')), Membership.NOT_IN_T)

    def test_block_map(self):
        """Test the induced block map"""
        self.assertEqual(induced_block_map(self.partition, T('2,0,0')).images, (1, 0))
        self.assertFalse(induced_block_map(self.partition, T('0,1,0')).defined)

    def test_wrong_degree(self):
        """Test a transformation of another degree"""
        with self.assertRaises(TransformationError):
            membership(self.partition, T('0,1'))

    def test_enumeration_matches_formulas(self):
        """Test N^N enumeration against the closed forms for N <= 5"""
        for n in range(1, 6):
            for partition in partitions_of(n):
                self.assertEqual(
                    count_by_enumeration(partition),
                    (order_t(partition), order_sigma(partition), order_s(partition)),
                )

    def test_enumeration_of_audited_sizes(self):
        """Test the two sizes where exhaustive enumeration settles the value"""
        self.assertEqual(count_by_enumeration(parse_partition('2+1'))[0], 15)
        self.assertEqual(count_by_enumeration(parse_partition('3+1'))[0], 112)

    def test_enumeration_limit(self):
        """Test N^N enumeration is refused for large N"""
        with self.assertRaises(TransformationError):
            count_by_enumeration(parse_partition('7'))

    def test_enumerate_t(self):
        """Test enumerate_t lists T(X,P) without repeats"""
        partition = parse_partition('2+1+1')
        elements = list(enumerate_t(partition))
        self.assertEqual(len(elements), 96)
        self.assertEqual(len(set(elements)), 96)
        self.assertTrue(all(membership(partition, f) >= Membership.IN_T for f in elements))

    def test_units_of(self):
        """Test units_of lists S(X,P)"""
        partition = parse_partition('2+2+1')
        units = list(units_of(partition))
        self.assertEqual(len(set(units)), order_s(partition))
        self.assertTrue(all(membership(partition, f) == Membership.IN_S for f in units))


class JInvariantTest(SimpleTestCase):
    """Test kernel-type invariants on the 4+4 example"""

    def setUp(self):
        self.partition = parse_partition('4+4')
        self.f = T('1,1,3,3,4,5,6,7')
        self.g = T('1,1,2,3,5,5,6,7')

    def test_worked_example(self):
        """Test J(4,4) of both elements"""
        self.assertEqual(j_invariant(self.partition, self.f).get(4, 4), ((1, 1, 1, 1), (2, 2)))
        self.assertEqual(j_invariant(self.partition, self.g).get(4, 4), ((2, 1, 1), (2, 1, 1)))

    def test_different_double_cosets(self):
        """Test f and g lie in different double cosets despite equal kernel sizes"""
        self.assertFalse(same_double_coset(self.partition, self.f, self.g))

    def test_conjugate_is_same_double_coset(self):
        """Test moving the collapse to the other block"""
        swap = T('4,5,6,7,0,1,2,3')
        moved = swap * self.f * swap
        self.assertEqual(moved, T('0,1,2,3,5,5,7,7'))
        self.assertTrue(same_double_coset(self.partition, self.f, moved))

    def test_requires_t(self):
        """Test the invariant is only defined on T(X,P)"""
        with self.assertRaises(MembershipError):
            j_invariant(self.partition, T('4,1,2,3,4,5,6,7'))

    def test_fiber_profile_separates_constant_maps(self):
        """Test two maps the kernel types cannot tell apart"""
        partition = parse_partition('2+2')
        constant, split = T('0,0,0,0'), T('0,0,1,1')
        self.assertEqual(j_invariant(partition, constant), j_invariant(partition, split))
        self.assertNotEqual(fiber_profile(partition, constant), fiber_profile(partition, split))
        self.assertFalse(same_double_coset(partition, constant, split))


def _double_cosets(partition):
    """Exhaustive S f S orbits, as element -> orbit id"""
    units = list(units_of(partition))
    orbit_of = {}
    for f in enumerate_t(partition):
        if f in orbit_of:
            continue
        orbit = {u * f * v for u in units for v in units}
        for g in orbit:
            orbit_of[g] = f
    return orbit_of


class DoubleCosetOracleTest(SimpleTestCase):
    """Test same_double_coset against brute-force orbits"""

    def check(self, spec):
        partition = parse_partition(spec)
        orbit_of = _double_cosets(partition)
        elements = list(orbit_of)
        keys = {f: double_coset_invariant(partition, f) for f in elements}
        for f, g in itertools.combinations(elements, 2):
            self.assertEqual(keys[f] == keys[g], orbit_of[f] == orbit_of[g], f'{f} vs {g} in {spec}')

    def test_small_partitions(self):
        """Test 2+1, 1+1+1 and 3"""
        for spec in ('2+1', '1+1+1', '3'):
            self.check(spec)

    @pytest.mark.slow
    def test_four_points(self):
        """Test 2+2, 3+1 and 2+1+1"""
        for spec in ('2+2', '3+1', '2+1+1'):
            self.check(spec)

    def test_same_double_coset_agrees_with_keys(self):
        """Test the public predicate on a sample"""
        partition = parse_partition('2+1')
        orbit_of = _double_cosets(partition)
        for f, g in itertools.combinations(list(orbit_of)[:10], 2):
            self.assertEqual(same_double_coset(partition, f, g), orbit_of[f] == orbit_of[g])


class ClassifyTest(SimpleTestCase):
    """Test class labels"""

    def test_units(self):
        """Test units are labelled as units"""
        self.assertEqual(classify(parse_partition('2+1'), T('0,2,1')).kind, LabelKind.UNIT)

    def test_merge_classes(self):
        """Test A(a,b) labels"""
        partition = parse_partition('3+2+1')
        self.assertEqual(classify(partition, injection_element(partition, 0, 1, [1])).tag, 'A(1,2)')
        self.assertEqual(classify(partition, injection_element(partition, 1, 2, [2, 0])).tag, 'A(2,3)')
        self.assertEqual(classify(partition, injection_element(partition, 0, 2, [2])).tag, 'A(1,3)')

    def test_swap_collapse(self):
        """Test a B(1) element of 3+2+1"""
        partition = parse_partition('3+2+1')
        label = classify(partition, T('1,0,0,3,4,5'))
        self.assertEqual(label.tag, 'B(1)')
        self.assertEqual(label.blocks, (0, 0, 1, 1))

    def test_self_collapse(self):
        """Test a C(1) element of 3+2"""
        self.assertEqual(classify(parse_partition('3+2'), T('0,0,2,3,4')).tag, 'C(1)')

    def test_other_sigma(self):
        """Test Î£ elements outside B and C"""
        self.assertEqual(classify(parse_partition('2+2'), T('2,2,0,0')).kind, LabelKind.SIGMA)

    def test_plain_t(self):
        """Test elements of T outside Î£ and A"""
        self.assertEqual(classify(parse_partition('2+2'), T('0,0,0,0')).kind, LabelKind.PLAIN_T)

    def test_injection_element_validation(self):
        """Test injections must be injective and fit the target"""
        partition = parse_partition('3+2+1')
        with self.assertRaises(TransformationError):
            injection_element(partition, 1, 2, [0, 0])
        with self.assertRaises(TransformationError):
            injection_element(partition, 2, 1, [0, 1, 2])
        with self.assertRaises(TransformationError):
            injection_element(partition, 1, 1, [0, 1])
