"""
Partitioned sets and the exact sizes of the monoids they carry.

A partition of X = {0, ..., N-1} is stored by its block sizes in ascending
order; block i covers the contiguous interval [offset_i, offset_i + size_i).
Only sizes matter to every question asked here, so two specs listing the same
sizes in a different order give the same Partition.
"""
import logging
import re
from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial, prod

from sympy.utilities.iterables import partitions as integer_partitions

from .exceptions import PartitionSpecError

logger = logging.getLogger(__name__)

_PART = re.compile(r'[0-9]+')


@dataclass(frozen=True)
class Partition:
    """Canonical partition of {0..N-1} into contiguous blocks of ascending size"""
    block_sizes: tuple

    def __post_init__(self):
        sizes = tuple(self.block_sizes)
        if not sizes:
            raise PartitionSpecError('a partition needs at least one block')
        for size in sizes:
            if not isinstance(size, int) or size < 1:
                raise PartitionSpecError(f'block size must be a positive integer, got {size!r}', token=str(size))
        if list(sizes) != sorted(sizes):
            raise PartitionSpecError(f'block sizes must be ascending, got {sizes}')
        object.__setattr__(self, 'block_sizes', sizes)

    @classmethod
    def from_sizes(cls, sizes):
        """Build a partition from block sizes given in any order"""
        return cls(tuple(sorted(sizes)))

    @property
    def degree(self):
        """N, the number of points of X"""
        return self.offsets[-1] + self.block_sizes[-1]

    @property
    def n_blocks(self):
        return len(self.block_sizes)

    @cached_property
    def offsets(self):
        result, running = [], 0
        for size in self.block_sizes:
            result.append(running)
            running += size
        return tuple(result)

    @cached_property
    def block_of(self):
        """Block index of every point"""
        return tuple(
            block for block, size in enumerate(self.block_sizes) for _ in range(size)
        )

    def block_range(self, block):
        return range(self.offsets[block], self.offsets[block] + self.block_sizes[block])

    def blocks_of_size(self, size):
        return tuple(block for block, s in enumerate(self.block_sizes) if s == size)

    @cached_property
    def size_classes(self):
        """(size, number of blocks of that size), ascending by size"""
        return tuple(sorted(Counter(self.block_sizes).items()))

    @property
    def distinct_sizes(self):
        return tuple(size for size, _ in self.size_classes)

    def render(self):
        return '+'.join(str(size) for size in reversed(self.block_sizes))

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class PartitionSignature:
    """Counting parameters of a partition used by the rank formula"""
    p: int
    q: int
    t: int
    repeated_sizes: tuple
    unique_sizes: tuple
    distinct_sizes: tuple
    s: int
    r_rep: int

    @property
    def k(self):
        """Number of wreath-product factors S_n wr S_m in the group of units"""
        return self.p

    @property
    def u(self):
        """Number of lone symmetric factors (unique sizes, plus S_t when t >= 2)"""
        return self.q + (1 if self.t >= 2 else 0)

    @property
    def parity_dimension(self):
        return 2 * self.k + self.u


def parse_partition(spec):
    """Parse a spec such as '3+2+1' (any order) into a canonical Partition"""
    if spec is None or not str(spec).strip():
        raise PartitionSpecError('empty partition spec', token='')
    sizes = []
    for raw in str(spec).split('+'):
        token = raw.strip()
        if not _PART.fullmatch(token):
            raise PartitionSpecError(f'invalid block size {token!r} in partition spec {spec!r}', token=token)
        size = int(token)
        if size < 1:
            raise PartitionSpecError(f'block size must be at least 1, got {token!r}', token=token)
        sizes.append(size)
    return Partition.from_sizes(sizes)


def render(partition):
    return partition.render()


def signature(partition):
    classes = partition.size_classes
    repeated = tuple((size, count) for size, count in classes if size >= 2 and count >= 2)
    unique = tuple(size for size, count in classes if size >= 2 and count == 1)
    t = dict(classes).get(1, 0)
    p, q = len(repeated), len(unique)
    return PartitionSignature(
        p=p,
        q=q,
        t=t,
        repeated_sizes=repeated,
        unique_sizes=unique,
        distinct_sizes=partition.distinct_sizes,
        s=p + q + (1 if t >= 1 else 0),
        r_rep=p + (1 if t >= 2 else 0),
    )


def order_t(partition):
    """|T(X,P)|: every block picks a target block and any map into it"""
    sizes = partition.block_sizes
    return prod(sum(target ** source for target in sizes) for source in sizes)


def order_sigma(partition):
    """|Σ(X,P)|: the permanent of the matrix |P_j|^|P_i|, summed by size class"""
    sizes = partition.block_sizes
    class_sizes = partition.distinct_sizes

    @lru_cache(maxsize=None)
    def count(block, remaining):
        if block == len(sizes):
            return 1
        total = 0
        for position, left in enumerate(remaining):
            if left:
                rest = remaining[:position] + (left - 1,) + remaining[position + 1:]
                total += left * class_sizes[position] ** sizes[block] * count(block + 1, rest)
        return total

    return count(0, tuple(number for _, number in partition.size_classes))


def order_s(partition):
    """|S(X,P)| = product over size classes of (size!)^count * count!"""
    return prod(factorial(size) ** count * factorial(count) for size, count in partition.size_classes)


def partitions_of(n):
    """Every partition of n, ordered by descending-part tuples"""
    if n < 1:
        raise PartitionSpecError(f'cannot partition {n}', token=str(n))
    result = []
    for parts in integer_partitions(n):
        sizes = [size for size, count in dict(parts).items() for _ in range(count)]
        result.append(Partition.from_sizes(sizes))
    result.sort(key=lambda partition: tuple(reversed(partition.block_sizes)))
    logger.debug('enumerated %d partitions of %d', len(result), n)
    return result
