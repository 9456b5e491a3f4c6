"""
Exhaustive minimum generating set search for small T(X,P).

T(X,P) \\ Σ(X,P) and Σ(X,P) \\ S(X,P) are ideals, so a set U generates T(X,P)
exactly when U ∩ S generates S, (U ∩ Σ) ∪ S generates Σ and U ∪ Σ generates
T. Each layer is searched on its own, by subsets of increasing size. Subsets
meeting the layer's obligations are tried first; a size is only declared
insufficient after every subset of that size has failed.
"""
import itertools
import logging
from dataclasses import dataclass, field

from .certification import gf2_rank, mandatory_labels, parity_dimension, parity_vector
from .closure import closure
from .conf import monoid_setting
from .exceptions import SearchInconclusive
from .partitions import order_s, order_sigma, order_t
from .transformations import Membership, classify, double_coset_invariant, enumerate_t, membership

logger = logging.getLogger(__name__)


@dataclass
class SearchResult:
    partition: str
    rank: int
    witness: list
    layer_ranks: dict
    closures_run: int
    insufficient: dict = field(default_factory=dict)


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self, lower_bound):
        self.used += 1
        if self.used > self.limit:
            raise SearchInconclusive(f'closure budget of {self.limit} exhausted', lower_bound=lower_bound)


def _class_first(partition, elements):
    """One element per double coset first, then the rest, each in enumeration order"""
    seen, first, rest = set(), [], []
    for f in elements:
        key = double_coset_invariant(partition, f)
        (rest if key in seen else first).append(f)
        seen.add(key)
    return first + rest


def _search_layer(name, base, layer, target, meets_obligations, budget, found_so_far, start=0):
    """Least k and a k-subset of layer with |<base ∪ subset>| = target"""
    insufficient = []
    for k in range(start, len(layer) + 1):
        flagged = [(subset, meets_obligations(subset)) for subset in itertools.combinations(layer, k)]
        ordered = [item for item in flagged if item[1]] + [item for item in flagged if not item[1]]
        for subset, promising in ordered:
            gens = list(base) + list(subset)
            if not gens:
                continue
            budget.spend(found_so_far + k)
            if closure(gens, retain_cap=0).order == target:
                if not promising:
                    logger.warning('%s layer generated by a subset missing an obligation: %s', name, subset)
                logger.debug('%s layer: rank %d after %d closures', name, k, budget.used)
                return k, list(subset), insufficient
        insufficient.append(k)
        logger.debug('%s layer: no generating subset of size %d', name, k)
    raise AssertionError(f'{name} layer is not generated by all of its elements')


def minimal_genset_search(partition, max_order=None, max_closures=None):
    max_order = monoid_setting('SEARCH_MAX_ORDER') if max_order is None else max_order
    max_closures = monoid_setting('SEARCH_MAX_CLOSURES') if max_closures is None else max_closures
    size = order_t(partition)
    if size > max_order:
        raise SearchInconclusive(f'|T({partition})| = {size} exceeds the search limit of {max_order}')
    budget = _Budget(max_closures)

    layers = {Membership.IN_S: [], Membership.IN_SIGMA: [], Membership.IN_T: []}
    for f in enumerate_t(partition):
        layers[membership(partition, f)].append(f)
    units = layers[Membership.IN_S]
    sigma = _class_first(partition, layers[Membership.IN_SIGMA])
    rest = _class_first(partition, layers[Membership.IN_T])
    tags = {f: classify(partition, f).tag for f in sigma + rest}
    required = set(mandatory_labels(partition))
    dimension = parity_dimension(partition)

    def spans_parity(subset):
        return gf2_rank([parity_vector(partition, f).as_int() for f in subset]) == dimension

    def covers(subset, prefix):
        wanted = {tag for tag in required if tag.startswith(prefix)}
        return wanted <= {tags[f] for f in subset}

    insufficient = {}
    k_units, unit_witness, insufficient['units'] = _search_layer(
        'units', [], units, order_s(partition), spans_parity, budget, 0, start=1,
    )
    k_sigma, sigma_witness, insufficient['sigma'] = _search_layer(
        'sigma', units, sigma, order_sigma(partition),
        lambda subset: covers(subset, 'B') and covers(subset, 'C'), budget, k_units,
    )
    k_t, t_witness, insufficient['t'] = _search_layer(
        't', units + layers[Membership.IN_SIGMA], rest, size,
        lambda subset: covers(subset, 'A'), budget, k_units + k_sigma,
    )
    rank = k_units + k_sigma + k_t
    logger.info('search on %s: rank %d after %d closures', partition, rank, budget.used)
    return SearchResult(
        partition=str(partition),
        rank=rank,
        witness=unit_witness + sigma_witness + t_witness,
        layer_ranks={'units': k_units, 'sigma': k_sigma, 't': k_t},
        closures_run=budget.used,
        insufficient=insufficient,
    )
