"""
Explicit generating sets of T(X,P) of minimum size, companions and the e*h*g
factorization of elements of Σ(X,P).

The group of units is a direct product of wreath factors S_n wr S_m (one per
block size n >= 2 occurring m >= 2 times) and symmetric factors (one per block
size occurring once, plus S_t permuting the singletons when t >= 2). A unit is
described per factor by its inner position permutations and its top block
permutation.
"""
import logging
import random
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from sympy.combinatorics import Permutation, PermutationGroup

from .conf import monoid_setting
from .exceptions import MembershipError, SpecialCaseError, TransformationError, WreathSearchError
from .partitions import order_s
from .transformations import (
    Membership,
    Transformation,
    classify,
    compose,
    induced_block_map,
    injection_element,
    membership,
    require_membership,
    units_of,
)

logger = logging.getLogger(__name__)


def _identity(length):
    return tuple(range(length))


def _cycle(length, points):
    """Permutation of range(length) cycling `points` in the given order"""
    images = list(range(length))
    points = list(points)
    for here, there in zip(points, points[1:] + points[:1]):
        images[here] = there
    return tuple(images)


def _transposition(length):
    return _cycle(length, [0, 1])


def _full_cycle(length):
    return _cycle(length, range(length))


def _odd_cycle(length):
    """An odd-length cycle z with S_length = <(0 1), z>"""
    if length % 2 == 0:
        return _cycle(length, range(1, length))
    return _full_cycle(length)


@dataclass(frozen=True)
class UnitFactor:
    """One direct factor of S(X,P): m blocks of size n permuted among themselves"""
    blocks: tuple
    n: int

    @property
    def m(self):
        return len(self.blocks)

    @property
    def is_wreath(self):
        return self.n >= 2 and self.m >= 2

    @property
    def symmetric_degree(self):
        """l for a factor acting as S_l"""
        return self.n if self.m == 1 else self.m

    def symmetric(self, perm):
        """Action of perm ∈ S_l on this symmetric factor as (inner, top)"""
        if self.m == 1:
            return (tuple(perm),), (0,)
        return tuple((0,) for _ in self.blocks), tuple(perm)

    def identity(self):
        return tuple(_identity(self.n) for _ in self.blocks), _identity(self.m)


def unit_factors(partition):
    """Wreath factors by ascending size, then unique sizes ascending, then the singleton factor"""
    wreath, unique, singletons = [], [], []
    for size, count in partition.size_classes:
        factor = UnitFactor(partition.blocks_of_size(size), size)
        if size >= 2 and count >= 2:
            wreath.append(factor)
        elif size >= 2:
            unique.append(factor)
        elif count >= 2:
            singletons.append(factor)
    return wreath, unique + singletons


def unit_from_actions(partition, actions):
    """
    Assemble a unit from (factor, inner, top) triples; factors not named act
    trivially. Point (blocks[j], x) goes to (blocks[top[j]], inner[j][x]).
    """
    images = list(range(partition.degree))
    for factor, inner, top in actions:
        for j, block in enumerate(factor.blocks):
            start = partition.offsets[factor.blocks[top[j]]]
            for position, point in enumerate(partition.block_range(block)):
                images[point] = start + inner[j][position]
    return Transformation(tuple(images))


def _wreath_permutation(n, m, inner, top):
    """Array form of a wreath element on the points j*n + x"""
    return Permutation([top[j] * n + inner[j][x] for j in range(m) for x in range(n)])


def wreath_group_order(n, m, elements):
    group = PermutationGroup([_wreath_permutation(n, m, inner, top) for inner, top in elements])
    return group.order()


@dataclass(frozen=True)
class WreathGenPair:
    """Two elements of S_n wr S_m, each as (inner permutations, top permutation)"""
    n: int
    m: int
    first: tuple
    second: tuple

    @property
    def expected_order(self):
        return wreath_order(self.n, self.m)

    def place(self, partition, factor):
        return [unit_from_actions(partition, [(factor, *element)]) for element in (self.first, self.second)]


def wreath_order(n, m):
    return factorial(n) ** m * factorial(m)


def _structured_candidates(n, m):
    rest = [_identity(n)] * (m - 1)
    swap, cycle = [_transposition(n)] + rest, [_full_cycle(n)] + rest
    yield (tuple(swap), _transposition(m)), (tuple(cycle), _full_cycle(m))
    yield (tuple(swap), _identity(m)), (tuple(cycle), _full_cycle(m))
    yield (tuple(swap), _transposition(m)), (tuple([_identity(n)] * m), _full_cycle(m))
    yield (tuple(cycle), _transposition(m)), (tuple(swap), _full_cycle(m))


@lru_cache(maxsize=None)
def _wreath_pair(n, m, attempts, seed):
    target = wreath_order(n, m)
    for first, second in _structured_candidates(n, m):
        if wreath_group_order(n, m, (first, second)) == target:
            return WreathGenPair(n, m, first, second)
    logger.debug('no structured generating pair for S_%d wr S_%d; searching randomly', n, m)
    rng = random.Random(seed)

    def draw():
        inner = tuple(tuple(rng.sample(range(n), n)) for _ in range(m))
        return inner, tuple(rng.sample(range(m), m))

    for attempt in range(attempts):
        first, second = draw(), draw()
        if wreath_group_order(n, m, (first, second)) == target:
            logger.debug('S_%d wr S_%d generated after %d random attempts', n, m, attempt + 1)
            return WreathGenPair(n, m, first, second)
    raise WreathSearchError(f'no generating pair of S_{n} wr S_{m} in {attempts} attempts (seed {seed})')


def wreath_pair(n, m, attempts=None, seed=None):
    """A pair of elements generating S_n wr S_m, certified by its group order"""
    if n < 2 or m < 2:
        raise WreathSearchError(f'S_{n} wr S_{m} is not a wreath factor')
    if attempts is None:
        attempts = monoid_setting('WREATH_ATTEMPTS')
    if seed is None:
        seed = monoid_setting('SEED')
    return _wreath_pair(n, m, attempts, seed)


def units_generators(partition, attempts=None, seed=None):
    """max{2, 2p + q + g(t)} units generating S(X,P)"""
    if order_s(partition) <= 2:
        raise SpecialCaseError(f'S({partition}) has at most two elements')
    wreath, symmetric = unit_factors(partition)
    pairs = [wreath_pair(factor.n, factor.m, attempts, seed) for factor in wreath]
    result = []

    if len(symmetric) == 1 and wreath:
        for factor, pair in zip(wreath[:-1], pairs[:-1]):
            result.extend(pair.place(partition, factor))
        last, pair = wreath[-1], pairs[-1]
        lone = symmetric[0]
        degree = lone.symmetric_degree
        result.append(unit_from_actions(partition, [(last, *pair.first)]))
        result.append(unit_from_actions(partition, [(last, *pair.second), (lone, *lone.symmetric(_full_cycle(degree)))]))
        result.append(unit_from_actions(partition, [(lone, *lone.symmetric(_transposition(degree)))]))
        return result

    for factor, pair in zip(wreath, pairs):
        result.extend(pair.place(partition, factor))

    if len(symmetric) == 1:
        lone = symmetric[0]
        degree = lone.symmetric_degree
        result.append(unit_from_actions(partition, [(lone, *lone.symmetric(_transposition(degree)))]))
        result.append(unit_from_actions(partition, [(lone, *lone.symmetric(_full_cycle(degree)))]))
    elif len(symmetric) >= 2:
        u = len(symmetric)
        for i in range(u):
            here, there = symmetric[i], symmetric[(i + 1) % u]
            if i < u - 1:
                actions = [
                    (here, *here.symmetric(_transposition(here.symmetric_degree))),
                    (there, *there.symmetric(_odd_cycle(there.symmetric_degree))),
                ]
            else:
                first = symmetric[0]
                actions = [
                    (first, *first.symmetric(_odd_cycle(first.symmetric_degree))),
                    (here, *here.symmetric(_transposition(here.symmetric_degree))),
                ]
            result.append(unit_from_actions(partition, actions))
    return result


def units_group_order(generators):
    """Order of the permutation group generated by units, via Schreier-Sims"""
    generators = list(generators)
    if not generators:
        return 1
    for index, unit in enumerate(generators):
        if not unit.is_permutation:
            raise MembershipError(f'{unit} is not a permutation', index=index)
    return PermutationGroup([Permutation(list(unit.images)) for unit in generators]).order()


def realizable_size_pairs(partition):
    """Size pairs (a, b), a <= b, of two distinct blocks"""
    pairs = []
    classes = partition.size_classes
    for position, (a, count) in enumerate(classes):
        if count >= 2:
            pairs.append((a, a))
        pairs.extend((a, b) for b, _ in classes[position + 1:])
    return sorted(pairs)


def a_representatives(partition):
    result = []
    for a, b in realizable_size_pairs(partition):
        source = partition.blocks_of_size(a)[0]
        target = partition.blocks_of_size(b)[1 if a == b else 0]
        result.append(injection_element(partition, source, target, range(a)))
    return result


def qualifying_collapse_indices(partition):
    """1-based indices i whose size class needs its own collapse representative"""
    sizes = partition.distinct_sizes
    result = []
    for i, size in enumerate(sizes, start=1):
        if (i == 1 and size >= 2) or (i >= 2 and size - sizes[i - 2] >= 2):
            result.append(i)
    return result


def _swap_collapse(partition, i):
    """Lowest size-l_i block into the lowest size-l_{i+1} block, and that block collapsed back"""
    sizes = partition.distinct_sizes
    small, large = sizes[i - 1], sizes[i]
    j, k = partition.blocks_of_size(small)[0], partition.blocks_of_size(large)[0]
    images = list(range(partition.degree))
    for position, point in enumerate(partition.block_range(j)):
        images[point] = partition.offsets[k] + position
    for position, point in enumerate(partition.block_range(k)):
        images[point] = partition.offsets[j] + min(position, small - 1)
    return Transformation(tuple(images))


def _self_collapse(partition, i):
    size = partition.distinct_sizes[i - 1]
    block = partition.blocks_of_size(size)[0]
    images = list(range(partition.degree))
    start = partition.offsets[block]
    for position, point in enumerate(partition.block_range(block)):
        images[point] = start + min(position, size - 2)
    return Transformation(tuple(images))


def bc_representatives(partition):
    """One B_i element per consecutive size pair, then one C_i element per qualifying i"""
    r = len(partition.distinct_sizes)
    swaps = [_swap_collapse(partition, i) for i in range(1, r)]
    return swaps + [_self_collapse(partition, i) for i in qualifying_collapse_indices(partition)]


def collapse_from_b(partition, i):
    """For l_i - l_{i-1} = 1: the square of the B_{i-1} representative, an element of C_i"""
    sizes = partition.distinct_sizes
    if not 2 <= i <= len(sizes) or sizes[i - 1] - sizes[i - 2] != 1:
        raise TransformationError(f'size class {i} of {partition} does not follow its predecessor by one')
    swap = _swap_collapse(partition, i - 1)
    return compose(swap, swap)


@dataclass(frozen=True)
class GeneratedElement:
    transformation: Transformation
    label: object
    note: str = ''

    @property
    def tag(self):
        return self.label.tag


@dataclass(frozen=True)
class GeneratingSet:
    partition: object
    elements: tuple

    def __len__(self):
        return len(self.elements)

    @property
    def size(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def transformations(self):
        return [element.transformation for element in self.elements]

    def without(self, index):
        return GeneratingSet(self.partition, self.elements[:index] + self.elements[index + 1:])


def _special_units(partition):
    """{identity} for the trivial group, else the single non-identity unit"""
    identity = Transformation.identity(partition.degree)
    others = [unit for unit in units_of(partition) if unit != identity]
    return others or [identity]


def full_generating_set(partition, attempts=None, seed=None):
    if order_s(partition) <= 2:
        units = _special_units(partition)
    else:
        units = units_generators(partition, attempts, seed)
    elements = [GeneratedElement(unit, classify(partition, unit), 'generates the units') for unit in units]
    elements += [
        GeneratedElement(f, classify(partition, f), 'merges two blocks (T over Σ)') for f in a_representatives(partition)
    ]
    elements += [
        GeneratedElement(f, classify(partition, f), 'non-unit of Σ (Σ over S)') for f in bc_representatives(partition)
    ]
    logger.debug('generating set of %s has %d elements', partition, len(elements))
    return GeneratingSet(partition, tuple(elements))


def adjacent_companion(partition, k):
    """Companion of the block transposition (k k+1)"""
    if not 0 <= k < partition.n_blocks - 1:
        raise TransformationError(f'no adjacent blocks {k}, {k + 1} in {partition}')
    small = partition.block_sizes[k]
    images = list(range(partition.degree))
    for position, point in enumerate(partition.block_range(k + 1)):
        images[point] = partition.offsets[k] + min(position, small - 1)
    for position, point in enumerate(partition.block_range(k)):
        images[point] = partition.offsets[k + 1] + position
    return Transformation(tuple(images))


def transposition_companion(partition, i, j):
    """Companion of (i j) as the conjugate of f_(i i+1) by adjacent companions"""
    if i == j:
        return Transformation.identity(partition.degree)
    i, j = sorted((i, j))
    steps = [adjacent_companion(partition, k) for k in range(i, j)]
    word = list(reversed(steps[1:])) + [steps[0]] + steps[1:]
    result = word[0]
    for factor in word[1:]:
        result = compose(result, factor)
    return result


def _check_block_permutation(partition, tau):
    tau = tuple(tau)
    if sorted(tau) != list(range(partition.n_blocks)):
        raise TransformationError(f'{tau} is not a permutation of the {partition.n_blocks} blocks')
    return tau


def companion_of(partition, tau):
    """
    The canonical companion of a block permutation: order-preserving where the
    target block is no smaller, tail-collapsing where it is smaller.
    """
    tau = _check_block_permutation(partition, tau)
    sizes = partition.block_sizes
    images = list(range(partition.degree))
    for block, target in enumerate(tau):
        start, last = partition.offsets[target], sizes[target] - 1
        for position, point in enumerate(partition.block_range(block)):
            images[point] = start + min(position, last)
    return Transformation(tuple(images))


def is_companion(partition, g, tau):
    """g ∈ Σ with block map tau, injective on growing blocks, surjective on shrinking ones"""
    if membership(partition, g) < Membership.IN_SIGMA:
        return False
    if induced_block_map(partition, g).images != tuple(tau):
        return False
    sizes = partition.block_sizes
    for block, target in enumerate(tau):
        image = len({g(x) for x in partition.block_range(block)})
        if sizes[block] <= sizes[target] and image != sizes[block]:
            return False
        if sizes[block] >= sizes[target] and image != sizes[target]:
            return False
    return True


def _complete_bijection(mapping, size):
    """Extend an injective partial map on range(size) by the lowest-available rule"""
    free = iter(sorted(set(range(size)) - set(mapping.values())))
    return tuple(mapping[x] if x in mapping else next(free) for x in range(size))


def decompose_sigma(partition, f):
    """
    Factor f ∈ Σ(X,P) as e*h*g: e an idempotent with the kernel of f fixing
    every block, h a unit fixing every block, g a companion of the block map of f.
    """
    require_membership(partition, f, Membership.IN_SIGMA)
    tau = induced_block_map(partition, f).images
    sizes, offsets = partition.block_sizes, partition.offsets
    companion = companion_of(partition, tau)

    e_images = list(range(partition.degree))
    for points in f.kernel_classes():
        for x in points:
            e_images[x] = points[0]
    representatives = sorted(set(e_images))

    h_images = list(range(partition.degree))
    v_images = list(range(partition.degree))
    for block, target in enumerate(tau):
        reps = [x for x in representatives if partition.block_of[x] == block]
        if sizes[block] <= sizes[target]:
            # h fixes the block; v moves companion images onto f's values
            align = {companion(x) - offsets[target]: f(x) - offsets[target] for x in reps}
            for position, image in enumerate(_complete_bijection(align, sizes[target])):
                v_images[offsets[target] + position] = offsets[target] + image
        else:
            fibers = {}
            for x in partition.block_range(block):
                fibers.setdefault(companion(x), x)
            align = {x - offsets[block]: fibers[f(x)] - offsets[block] for x in reps}
            for position, image in enumerate(_complete_bijection(align, sizes[block])):
                h_images[offsets[block] + position] = offsets[block] + image

    e, h = Transformation(tuple(e_images)), Transformation(tuple(h_images))
    g = compose(companion, Transformation(tuple(v_images)))
    if compose(compose(e, h), g) != f:
        raise AssertionError(f'factorization of {f} in {partition} does not multiply back')
    return e, h, g
