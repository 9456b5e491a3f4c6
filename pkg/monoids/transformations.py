"""
Transformations of {0..N-1} and their relationship to a partition.

Transformations act on the right and compose left to right: (x)(f*g) = ((x)f)g.
Everything here is a pure function of immutable values.
"""
import enum
import itertools
import logging
import re
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property

from .exceptions import MembershipError, TransformationError

logger = logging.getLogger(__name__)

# N^N enumeration is refused beyond this degree
ENUMERATION_DEGREE_LIMIT = 6

_IMAGE = re.compile(r'[0-9]+')


@dataclass(frozen=True)
class Transformation:
    """Total self-map of {0..N-1} stored as its image sequence"""
    images: tuple

    def __post_init__(self):
        try:
            images = tuple(int(x) for x in self.images)
        except (TypeError, ValueError) as exc:
            raise TransformationError(f'images must be integers: {self.images!r}') from exc
        degree = len(images)
        if degree == 0:
            raise TransformationError('a transformation needs at least one point')
        for point, image in enumerate(images):
            if not 0 <= image < degree:
                raise TransformationError(f'image {image} of point {point} is outside 0..{degree - 1}')
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, degree):
        return cls(tuple(range(degree)))

    @classmethod
    def parse(cls, text):
        """Parse the comma format, e.g. '1,0,2'"""
        tokens = [token.strip() for token in str(text).split(',')]
        if any(not _IMAGE.fullmatch(token) for token in tokens):
            raise TransformationError(f'invalid transformation {text!r}; expected comma-separated images')
        return cls(tuple(int(token) for token in tokens))

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point]

    def __mul__(self, other):
        return compose(self, other)

    def render(self):
        return ','.join(str(x) for x in self.images)

    def __str__(self):
        return self.render()

    @cached_property
    def image(self):
        return frozenset(self.images)

    @property
    def rank(self):
        """Size of the image"""
        return len(self.image)

    def kernel_classes(self):
        """Kernel classes, each sorted, ordered by their least point"""
        classes = defaultdict(list)
        for point, image in enumerate(self.images):
            classes[image].append(point)
        return tuple(sorted(tuple(points) for points in classes.values()))

    @property
    def is_permutation(self):
        return self.rank == self.degree

    def inverse(self):
        if not self.is_permutation:
            raise TransformationError(f'{self} is not a permutation')
        inverse = [0] * self.degree
        for point, image in enumerate(self.images):
            inverse[image] = point
        return Transformation(tuple(inverse))

    def power(self, exponent):
        if exponent < 1:
            raise TransformationError('powers start at 1 in a semigroup')
        result = self
        for _ in range(exponent - 1):
            result = compose(result, self)
        return result


def compose(f, g):
    """Left-to-right product: (x)(f*g) = ((x)f)g"""
    if f.degree != g.degree:
        raise TransformationError(f'cannot compose degree {f.degree} with degree {g.degree}')
    return Transformation(tuple(g.images[x] for x in f.images))


def _check_degree(partition, f):
    if f.degree != partition.degree:
        raise TransformationError(
            f'transformation of degree {f.degree} does not act on a partition of {partition.degree} points'
        )


@dataclass(frozen=True)
class BlockMap:
    """The map f-bar induced on block indices; images is None when f does not preserve P"""
    images: tuple = None

    @property
    def defined(self):
        return self.images is not None

    @property
    def image_size(self):
        return len(set(self.images)) if self.defined else 0

    @property
    def is_permutation(self):
        return self.defined and self.image_size == len(self.images)


def induced_block_map(partition, f):
    _check_degree(partition, f)
    block_of = partition.block_of
    images = []
    for block in range(partition.n_blocks):
        targets = {block_of[f(x)] for x in partition.block_range(block)}
        if len(targets) != 1:
            return BlockMap(None)
        images.append(targets.pop())
    return BlockMap(tuple(images))


class Membership(enum.IntEnum):
    NOT_IN_T = 0
    IN_T = 1
    IN_SIGMA = 2
    IN_S = 3


def membership(partition, f):
    """Finest of T(X,P) ⊇ Σ(X,P) ⊇ S(X,P) containing f"""
    bar = induced_block_map(partition, f)
    if not bar.defined:
        return Membership.NOT_IN_T
    if not bar.is_permutation:
        return Membership.IN_T
    if f.is_permutation:
        return Membership.IN_S
    return Membership.IN_SIGMA


def require_membership(partition, f, level=Membership.IN_T, index=None):
    found = membership(partition, f)
    if found < level:
        where = '' if index is None else f' (element {index})'
        raise MembershipError(f'{f} is {found.name}, expected at least {level.name}{where}', index=index)
    return found


def positions_in_target(partition, f, block, target=None):
    """Positions inside the target block of the images of the points of `block`"""
    if target is None:
        target = partition.block_of[f(partition.offsets[block])]
    start = partition.offsets[target]
    return tuple(f(x) - start for x in partition.block_range(block))


def block_image_size(partition, f, block):
    return len({f(x) for x in partition.block_range(block)})


@dataclass(frozen=True)
class JInvariant:
    """
    For each size pair (a, b): the multiset, over blocks of size a mapped into a
    block of size b, of the kernel-class sizes of f restricted to that block.
    Multisets are stored as sorted tuples so equality is plain tuple equality.
    """
    table: tuple

    def as_dict(self):
        return dict(self.table)

    def get(self, a, b):
        return self.as_dict().get((a, b), ())


def _kernel_type(f, points):
    return tuple(sorted(Counter(f(x) for x in points).values(), reverse=True))


def j_invariant(partition, f):
    require_membership(partition, f)
    sizes = partition.block_sizes
    bar = induced_block_map(partition, f)
    table = defaultdict(list)
    for block, target in enumerate(bar.images):
        table[(sizes[block], sizes[target])].append(_kernel_type(f, partition.block_range(block)))
    return JInvariant(tuple(sorted((key, tuple(sorted(types))) for key, types in table.items())))


def _canonical_incidence(labels, columns):
    """Least row-sorted matrix over all label-preserving column orders"""
    groups = defaultdict(list)
    for label, column in zip(labels, columns):
        groups[label].append(column)
    ordered_labels = sorted(groups)
    best = None
    for arrangement in itertools.product(*(itertools.permutations(groups[label]) for label in ordered_labels)):
        ordered = [column for group in arrangement for column in group]
        rows = tuple(sorted(zip(*ordered)))
        if best is None or rows < best:
            best = rows
    return tuple(label for label in ordered_labels for _ in groups[label]), best


def fiber_profile(partition, f):
    """
    Complete invariant of the S(X,P) x S(X,P) double coset of f in T(X,P).

    For every target block: its size, and the matrix |f^-1(y) ∩ B| over hit
    points y and source blocks B, up to permuting rows and permuting columns
    whose source blocks have equal size.
    """
    require_membership(partition, f)
    sizes = partition.block_sizes
    bar = induced_block_map(partition, f)
    sources = defaultdict(list)
    for block, target in enumerate(bar.images):
        sources[target].append(block)
    profile = []
    for target, blocks in sources.items():
        hit = sorted({f(x) for block in blocks for x in partition.block_range(block)})
        columns = []
        for block in blocks:
            counts = Counter(f(x) for x in partition.block_range(block))
            columns.append(tuple(counts.get(y, 0) for y in hit))
        labels = [sizes[block] for block in blocks]
        profile.append((sizes[target],) + _canonical_incidence(labels, columns))
    return tuple(sorted(profile))


def double_coset_invariant(partition, f):
    return j_invariant(partition, f), fiber_profile(partition, f)


def same_double_coset(partition, f, g):
    """True iff g ∈ S(X,P) f S(X,P)"""
    if j_invariant(partition, f) != j_invariant(partition, g):
        return False
    return fiber_profile(partition, f) == fiber_profile(partition, g)


class LabelKind(str, enum.Enum):
    UNIT = 'unit'
    SIGMA = 'sigma'
    A = 'A'
    B = 'B'
    C = 'C'
    PLAIN_T = 'T'


@dataclass(frozen=True)
class ClassLabel:
    """Class of an element of T(X,P), with the blocks that witness it"""
    kind: LabelKind
    sizes: tuple = ()
    index: int = None
    blocks: tuple = ()

    @property
    def tag(self):
        if self.kind is LabelKind.A:
            return f'A({self.sizes[0]},{self.sizes[1]})'
        if self.kind in (LabelKind.B, LabelKind.C):
            return f'{self.kind.value}({self.index})'
        return self.kind.value

    def __str__(self):
        return self.tag


def classify(partition, f):
    level = require_membership(partition, f)
    if level == Membership.IN_S:
        return ClassLabel(LabelKind.UNIT)
    bar = induced_block_map(partition, f)
    if level == Membership.IN_SIGMA:
        return _classify_sigma(partition, f, bar)
    return _classify_t(partition, f, bar)


def _classify_t(partition, f, bar):
    sizes = partition.block_sizes
    injective = all(
        block_image_size(partition, f, block) == sizes[block] for block in range(partition.n_blocks)
    )
    if not injective or bar.image_size != partition.n_blocks - 1:
        return ClassLabel(LabelKind.PLAIN_T)
    preimages = defaultdict(list)
    for block, target in enumerate(bar.images):
        preimages[target].append(block)
    first, second = next(blocks for blocks in preimages.values() if len(blocks) == 2)
    pair = tuple(sorted((sizes[first], sizes[second])))
    return ClassLabel(LabelKind.A, sizes=pair, blocks=(first, second))


def _classify_sigma(partition, f, bar):
    sizes = partition.block_sizes
    distinct = partition.distinct_sizes
    size_index = {size: position + 1 for position, size in enumerate(distinct)}
    up = [block for block, target in enumerate(bar.images) if sizes[target] > sizes[block]]
    down = [block for block, target in enumerate(bar.images) if sizes[target] < sizes[block]]
    image_sizes = [block_image_size(partition, f, block) for block in range(partition.n_blocks)]

    if len(up) == 1 and len(down) == 1:
        j, k_prime = up[0], down[0]
        k, j_prime = bar.images[j], bar.images[k_prime]
        i = size_index[sizes[j]]
        consecutive = i < len(distinct) and sizes[k] == distinct[i]
        matched = sizes[k_prime] == sizes[k] and sizes[j_prime] == sizes[j]
        injective = image_sizes[j] == sizes[j]
        surjective = image_sizes[k_prime] == sizes[j_prime]
        others_bijective = all(
            image_sizes[block] == sizes[block] for block in range(partition.n_blocks) if block not in (j, k_prime)
        )
        if consecutive and matched and injective and surjective and others_bijective:
            return ClassLabel(LabelKind.B, index=i, blocks=(j, j_prime, k, k_prime))
        return ClassLabel(LabelKind.SIGMA)

    if not up and not down:
        collapsed = [block for block in range(partition.n_blocks) if image_sizes[block] < sizes[block]]
        if len(collapsed) == 1 and image_sizes[collapsed[0]] == sizes[collapsed[0]] - 1:
            block = collapsed[0]
            return ClassLabel(LabelKind.C, index=size_index[sizes[block]], blocks=(block,))
    return ClassLabel(LabelKind.SIGMA)


def injection_element(partition, source, target, phi):
    """The element agreeing with the injection phi: P_source -> P_target and fixing the rest"""
    sizes = partition.block_sizes
    phi = tuple(phi)
    if source == target:
        raise TransformationError('source and target blocks must differ')
    if len(phi) != sizes[source] or len(set(phi)) != len(phi):
        raise TransformationError(f'phi must be an injection on block {source}, got {phi}')
    if any(not 0 <= position < sizes[target] for position in phi):
        raise TransformationError(f'phi leaves block {target}: {phi}')
    images = list(range(partition.degree))
    start = partition.offsets[target]
    for point, position in zip(partition.block_range(source), phi):
        images[point] = start + position
    return Transformation(tuple(images))


def enumerate_t(partition):
    """Every element of T(X,P): each block picks a target block and a map into it"""
    ranges = [partition.block_range(block) for block in range(partition.n_blocks)]
    options = []
    for block, size in enumerate(partition.block_sizes):
        options.append([
            choice for target in range(partition.n_blocks)
            for choice in itertools.product(ranges[target], repeat=size)
        ])
    for choice in itertools.product(*options):
        yield Transformation(tuple(image for block_images in choice for image in block_images))


def units_of(partition):
    """Every element of S(X,P)"""
    sizes = partition.block_sizes
    classes = [partition.blocks_of_size(size) for size in partition.distinct_sizes]
    inner = [list(itertools.permutations(range(size))) for size in sizes]
    for arrangement in itertools.product(*(itertools.permutations(blocks) for blocks in classes)):
        target = {}
        for blocks, images in zip(classes, arrangement):
            target.update(zip(blocks, images))
        for positions in itertools.product(*inner):
            images = [0] * partition.degree
            for block, block_positions in enumerate(positions):
                start = partition.offsets[target[block]]
                for point, position in zip(partition.block_range(block), block_positions):
                    images[point] = start + position
            yield Transformation(tuple(images))


def count_by_enumeration(partition):
    """(|T|, |Σ|, |S|) by testing all N^N self-maps"""
    degree = partition.degree
    if degree > ENUMERATION_DEGREE_LIMIT:
        raise TransformationError(f'refusing to enumerate {degree}^{degree} maps')
    counts = Counter(
        membership(partition, Transformation(images))
        for images in itertools.product(range(degree), repeat=degree)
    )
    in_s = counts[Membership.IN_S]
    in_sigma = in_s + counts[Membership.IN_SIGMA]
    in_t = in_sigma + counts[Membership.IN_T]
    logger.debug('enumerated %d maps of %s: T=%d Sigma=%d S=%d', degree ** degree, partition, in_t, in_sigma, in_s)
    return in_t, in_sigma, in_s
