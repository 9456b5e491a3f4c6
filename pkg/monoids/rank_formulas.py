"""Closed-form ranks of T(X,P) and of its two relative ranks"""
import logging
from dataclasses import dataclass
from math import comb

from .exceptions import SpecialCaseError
from .partitions import order_s, signature

logger = logging.getLogger(__name__)

# Partitions whose group of units has at most two elements, with rank(T(X,P)).
SPECIAL_CASES = {
    (1,): 1,
    (2,): 2,
    (1, 1): 2,
    (1, 2): 3,
}

SPECIAL_CASE_NOTES = {
    (1,): 'trivial monoid, generated by its identity',
    (2,): 'T_2: the swap and a constant map',
    (1, 1): 'the swap and one singleton sent onto the other',
    (1, 2): 'a unit, the merge of the singleton into the pair, and the block swap',
}


def g(t):
    return 1 if t >= 2 else 0


def g_prime(t):
    return 1 if t >= 1 else 0


def h(p, q, t):
    if t == 0:
        return 0
    if t == 1:
        return p + q
    return p + q + 1


def little_l(partition):
    """Block sizes s >= 2 present in P with no block of size s - 1"""
    present = set(partition.block_sizes)
    return sum(1 for size in present if size >= 2 and size - 1 not in present)


def _require_general(partition):
    if order_s(partition) <= 2:
        raise SpecialCaseError(
            f'{partition} has at most two units; its rank comes from the special-case table',
            table={'+'.join(str(x) for x in reversed(key)): value for key, value in SPECIAL_CASES.items()},
        )


def rank_units(partition):
    """rank(S(X,P)) = max{2, 2p + q + g(t)}"""
    _require_general(partition)
    sig = signature(partition)
    return max(2, 2 * sig.p + sig.q + g(sig.t))


def relrank_t_over_sigma(partition):
    """rank(T(X,P):Σ(X,P)) = C(s,2) + r"""
    sig = signature(partition)
    return comb(sig.s, 2) + sig.r_rep


def relrank_sigma_over_s(partition):
    """rank(Σ(X,P):S(X,P)) = p + q + g'(t) - 1 + l"""
    sig = signature(partition)
    return sig.p + sig.q + g_prime(sig.t) - 1 + little_l(partition)


@dataclass(frozen=True)
class RankParameters:
    p: int
    q: int
    t: int
    s: int
    r_rep: int
    l: int
    g: int
    g_prime: int
    h: int


@dataclass(frozen=True)
class RankBreakdown:
    partition: str
    rank_units: int
    relrank_t_over_sigma: int
    relrank_sigma_over_s: int
    total: int
    params: RankParameters
    special_case: str = None


def rank_parameters(partition):
    sig = signature(partition)
    return RankParameters(
        p=sig.p,
        q=sig.q,
        t=sig.t,
        s=sig.s,
        r_rep=sig.r_rep,
        l=little_l(partition),
        g=g(sig.t),
        g_prime=g_prime(sig.t),
        h=h(sig.p, sig.q, sig.t),
    )


def rank_total(partition):
    params = rank_parameters(partition)
    t_over_sigma = relrank_t_over_sigma(partition)
    sigma_over_s = relrank_sigma_over_s(partition)
    key = partition.block_sizes
    if key in SPECIAL_CASES:
        # S(X,P) is cyclic of order <= 2, so one unit generates it
        units = 1
        total = SPECIAL_CASES[key]
        if units + t_over_sigma + sigma_over_s != total:
            logger.warning('special case %s does not split into its components', partition)
        return RankBreakdown(str(partition), units, t_over_sigma, sigma_over_s, total, params, SPECIAL_CASE_NOTES[key])

    p, q = params.p, params.q
    total = max(2, 2 * p + q + params.g) + comb(p + q, 2) + 2 * p + q + params.g_prime - 1 + params.l + params.h
    units = rank_units(partition)
    if units + t_over_sigma + sigma_over_s != total:
        raise AssertionError(f'rank components of {partition} do not add up to {total}')
    return RankBreakdown(str(partition), units, t_over_sigma, sigma_over_s, total, params)
