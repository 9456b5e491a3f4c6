"""
Enumeration of the semigroup generated by a set of transformations.

A transformation of degree N is stored as the integer sum(images[x] * N**x),
so a whole frontier is one int64 array and right multiplication by a
generator g is the fancy-indexing step g[f].
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .conf import monoid_setting
from .exceptions import ClosureCapExceeded, TransformationError
from .partitions import order_t
from .transformations import Membership, Transformation, require_membership

logger = logging.getLogger(__name__)

# 15**15 still fits in an int64 code
MAX_DEGREE = 15


def _powers(degree):
    return degree ** np.arange(degree, dtype=np.int64)


def encode(images, degree):
    """Codes of the rows of an (k, N) image array"""
    return np.asarray(images, dtype=np.int64) @ _powers(degree)


def decode(codes, degree):
    """(k, N) image array of the given codes"""
    codes = np.asarray(codes, dtype=np.int64)
    return (codes[:, None] // _powers(degree)) % degree


def _in_order_unique(codes):
    """Distinct codes, kept in order of first occurrence"""
    _, first = np.unique(codes, return_index=True)
    return codes[np.sort(first)]


class _SeenSet:
    """Codes met so far: a dense bitmap when N**N is small, else a sorted array"""

    def __init__(self, degree, dense_limit):
        size = degree ** degree
        self.dense = size <= dense_limit
        if self.dense:
            self._bits = np.zeros(size, dtype=bool)
        else:
            self._sorted = np.empty(0, dtype=np.int64)

    def add_new(self, codes):
        """Record unique codes and return the ones not seen before"""
        if self.dense:
            fresh = codes[~self._bits[codes]]
            self._bits[fresh] = True
            return fresh
        fresh = codes[~np.isin(codes, self._sorted, assume_unique=True)]
        self._sorted = np.union1d(self._sorted, fresh)
        return fresh


@dataclass
class ClosureResult:
    order: int
    degree: int
    generator_count: int
    codes: np.ndarray = None
    stats: dict = field(default_factory=dict)

    @property
    def retained(self):
        return self.codes is not None

    @cached_property
    def elements(self):
        """Generated elements in enumeration order, or None above the retention cap"""
        if self.codes is None:
            return None
        return [Transformation(tuple(row)) for row in decode(self.codes, self.degree).tolist()]

    def __contains__(self, f):
        if self.codes is None:
            raise TransformationError('closure elements were not retained')
        if f.degree != self.degree:
            return False
        return bool(np.isin(encode([f.images], self.degree), self.codes)[0])


def _generator_array(gens):
    gens = list(gens)
    if not gens:
        raise TransformationError('closure needs at least one generator')
    degree = gens[0].degree
    for index, g in enumerate(gens):
        if g.degree != degree:
            raise TransformationError(f'generator {index} has degree {g.degree}, expected {degree}')
    if degree > MAX_DEGREE:
        raise TransformationError(f'degree {degree} exceeds the closure limit of {MAX_DEGREE}')
    return np.array([g.images for g in gens], dtype=np.int64), degree


def closure(gens, cap=None, retain_cap=None, batch=None, dense_limit=None):
    """
    Breadth-first right-multiplication closure of gens. Raises
    ClosureCapExceeded once more than `cap` elements are found.
    """
    generators, degree = _generator_array(gens)
    retain_cap = monoid_setting('CLOSURE_RETAIN_CAP') if retain_cap is None else retain_cap
    batch = monoid_setting('CLOSURE_BATCH') if batch is None else batch
    dense_limit = monoid_setting('DENSE_SEEN_LIMIT') if dense_limit is None else dense_limit

    seen = _SeenSet(degree, dense_limit)
    frontier = seen.add_new(_in_order_unique(encode(generators, degree)))
    order = len(frontier)
    retained = [frontier] if order <= retain_cap else None
    multiplications, depth = 0, 0
    if cap is not None and order > cap:
        raise ClosureCapExceeded(order, cap)

    while len(frontier):
        layer = []
        for start in range(0, len(frontier), batch):
            chunk = decode(frontier[start:start + batch], degree)
            # products[j, i] = chunk[i] * generators[j]; rows reordered element-major
            products = generators[:, chunk].transpose(1, 0, 2).reshape(-1, degree)
            multiplications += len(products)
            fresh = seen.add_new(_in_order_unique(encode(products, degree)))
            order += len(fresh)
            if cap is not None and order > cap:
                raise ClosureCapExceeded(order, cap)
            layer.append(fresh)
        frontier = np.concatenate(layer) if layer else np.empty(0, dtype=np.int64)
        if len(frontier):
            depth += 1
            if retained is not None:
                retained.append(frontier)
                if order > retain_cap:
                    logger.debug('closure passed %d elements; elements are no longer retained', retain_cap)
                    retained = None
        logger.debug('closure layer %d: %d new, %d total', depth, len(frontier), order)

    codes = np.concatenate(retained) if retained is not None else None
    stats = {'multiplications': multiplications, 'depth': depth, 'dense_seen': seen.dense}
    return ClosureResult(order, degree, len(generators), codes, stats)


def generates_t(partition, gens, cap=None):
    """True iff gens (all checked to lie in T(X,P)) generate T(X,P)"""
    gens = list(gens)
    for index, g in enumerate(gens):
        require_membership(partition, g, Membership.IN_T, index=index)
    if not gens:
        return False
    result = closure(gens, cap=cap, retain_cap=0)
    return result.order == order_t(partition)
