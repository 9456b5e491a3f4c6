"""
Necessity certificates for generating sets of T(X,P).

Any generating set must contain an element of every mandatory class (each
realizable A(a,b), every B(i), every qualifying C(i)), and its units must map
onto a basis of the parity quotient of S(X,P), together with enough further
units to reach rank(S(X,P)). The factory's set discharges each obligation with
a different element, which is what makes it minimal.
"""
import logging
from dataclasses import dataclass, field

from sympy.combinatorics import Permutation

from .generators import full_generating_set, qualifying_collapse_indices, realizable_size_pairs, unit_factors
from .rank_formulas import rank_total
from .transformations import LabelKind, Membership, classify, positions_in_target, require_membership

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParityVector:
    bits: tuple

    def __xor__(self, other):
        return ParityVector(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def as_int(self):
        return sum(bit << position for position, bit in enumerate(self.bits))

    def __str__(self):
        return ''.join(str(bit) for bit in self.bits)


def _odd(perm):
    return 1 if Permutation(list(perm)).signature() == -1 else 0


def parity_vector(partition, f):
    """
    Sign bits of a unit: per wreath factor (inner signs, block permutation),
    then one bit per symmetric factor.
    """
    require_membership(partition, f, Membership.IN_S)
    wreath, symmetric = unit_factors(partition)
    bits = []
    for factor in wreath + symmetric:
        top = []
        inner_odd = 0
        for block in factor.blocks:
            target = partition.block_of[f(partition.offsets[block])]
            top.append(factor.blocks.index(target))
            inner_odd ^= _odd(positions_in_target(partition, f, block, target))
        if factor.is_wreath:
            bits.extend((inner_odd, _odd(top)))
        elif factor.m == 1:
            bits.append(inner_odd)
        else:
            bits.append(_odd(top))
    return ParityVector(tuple(bits))


def parity_dimension(partition):
    """2k + u"""
    wreath, symmetric = unit_factors(partition)
    return 2 * len(wreath) + len(symmetric)


def gf2_pivots(vectors):
    """Indices of a greedy basis, in order, of the span of the given bit masks"""
    basis = {}
    pivots = []
    for index, vector in enumerate(vectors):
        reduced = vector
        while reduced:
            lead = reduced.bit_length() - 1
            if lead not in basis:
                basis[lead] = reduced
                pivots.append(index)
                break
            reduced ^= basis[lead]
    return pivots


def gf2_rank(vectors):
    return len(gf2_pivots(vectors))


@dataclass(frozen=True)
class Obligation:
    requirement: str
    kind: str
    satisfied_by: int = None

    @property
    def satisfied(self):
        return self.satisfied_by is not None


@dataclass
class Certificate:
    partition: str
    element_count: int
    obligations: list
    parity_rank: int
    parity_dimension: int
    notes: list = field(default_factory=list)

    @property
    def missing(self):
        return [obligation for obligation in self.obligations if not obligation.satisfied]

    @property
    def passed(self):
        return not self.missing and not self.notes

    @property
    def verdict(self):
        return 'pass' if self.passed else 'fail'


def mandatory_labels(partition):
    """Tags every generating set must hit outside the units"""
    labels = [f'A({a},{b})' for a, b in realizable_size_pairs(partition)]
    labels += [f'B({i})' for i in range(1, len(partition.distinct_sizes))]
    labels += [f'C({i})' for i in qualifying_collapse_indices(partition)]
    return labels


def certify_lower_bound(partition, elements):
    elements = list(elements)
    for index, f in enumerate(elements):
        require_membership(partition, f, Membership.IN_T, index=index)
    labels = [classify(partition, f) for f in elements]
    obligations = []

    for tag in mandatory_labels(partition):
        match = next((index for index, label in enumerate(labels) if label.tag == tag), None)
        obligations.append(Obligation(f'an element of {tag}', tag[0], match))

    units = [index for index, label in enumerate(labels) if label.kind is LabelKind.UNIT]
    vectors = [parity_vector(partition, elements[index]).as_int() for index in units]
    pivots = [units[position] for position in gf2_pivots(vectors)]
    dimension = parity_dimension(partition)
    for position in range(dimension):
        match = pivots[position] if position < len(pivots) else None
        obligations.append(Obligation(f'parity direction {position + 1} of {dimension}', 'parity', match))

    spare = iter(index for index in units if index not in pivots)
    for position in range(max(0, rank_total(partition).rank_units - dimension)):
        requirement = 'the identity' if dimension == 0 else 'a unit beyond the parity basis (S is not cyclic)'
        obligations.append(Obligation(requirement, 'unit', next(spare, None)))

    certificate = Certificate(str(partition), len(elements), obligations, len(pivots), dimension)
    if certificate.missing:
        logger.debug('%s fails %d obligations', partition, len(certificate.missing))
    return certificate


def certify_minimality(partition, generating_set=None):
    """Certify that the factory set meets every obligation, one element per obligation"""
    if generating_set is None:
        generating_set = full_generating_set(partition)
    elements = [element.transformation for element in generating_set]
    certificate = certify_lower_bound(partition, elements)
    total = rank_total(partition).total
    if len(elements) != total:
        certificate.notes.append(f'set has {len(elements)} elements but the rank is {total}')
    if len(certificate.obligations) != total:
        certificate.notes.append(f'{len(certificate.obligations)} obligations but the rank is {total}')
    used = [obligation.satisfied_by for obligation in certificate.obligations if obligation.satisfied]
    if len(used) != len(set(used)):
        certificate.notes.append('an element discharges more than one obligation')
    idle = sorted(set(range(len(elements))) - set(used))
    if idle:
        certificate.notes.append(f'elements {idle} discharge no obligation')
    for note in certificate.notes:
        logger.error('minimality of %s: %s', partition, note)
    return certificate
