from monoids.rank_formulas import rank_total
from monoids.search import minimal_genset_search
from monoids.serializers import SearchResultSerializer

from ._base import MonoidCommand


class Command(MonoidCommand):
    help = 'Find the rank of a small T(X,P) by exhaustive search'

    def add_arguments(self, parser):
        parser.add_argument('partition', help='Partition spec, e.g. 2+1')
        parser.add_argument('--max-order', type=int, default=None, help='Refuse monoids larger than this')
        parser.add_argument('--max-closures', type=int, default=None, help='Closure budget before giving up')
        super().add_arguments(parser)

    def run(self, **options):
        partition = self.partition(options['partition'])
        result = minimal_genset_search(
            partition, max_order=options['max_order'], max_closures=options['max_closures'],
        )
        self.emit(SearchResultSerializer, result)
        expected = rank_total(partition).total
        self.result(f'rank(T({partition})) = {result.rank} by search')
        self.say(f'  units {result.layer_ranks["units"]}, Σ over S {result.layer_ranks["sigma"]}, '
                 f'T over Σ {result.layer_ranks["t"]}; {result.closures_run} closures')
        for f in result.witness:
            self.say(f'  {f}')
        if result.rank != expected:
            self.fail(f'search gives {result.rank}, the formula gives {expected}')
        self.result(self.style.SUCCESS(f'agrees with the formula ({expected})'))
