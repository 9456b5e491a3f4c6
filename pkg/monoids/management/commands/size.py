from monoids.partitions import order_s, order_sigma, order_t
from monoids.serializers import SizesSerializer
from monoids.transformations import count_by_enumeration

from ._base import MonoidCommand


class Command(MonoidCommand):
    help = 'Print |T(X,P)|, |Σ(X,P)| and |S(X,P)|'

    def add_arguments(self, parser):
        parser.add_argument('partition', help='Partition spec, e.g. 3+2+1')
        parser.add_argument('--brute', action='store_true', help='Cross-check by enumerating all N^N maps (N <= 6)')
        super().add_arguments(parser)

    def run(self, **options):
        partition = self.partition(options['partition'])
        sizes = {
            'partition': partition,
            'order_t': order_t(partition),
            'order_sigma': order_sigma(partition),
            'order_s': order_s(partition),
            'enumerated': None,
        }
        if options['brute']:
            sizes['enumerated'] = list(count_by_enumeration(partition))
        self.emit(SizesSerializer, sizes)
        self.result(f'|T| = {sizes["order_t"]}')
        self.result(f'|Σ| = {sizes["order_sigma"]}')
        self.result(f'|S| = {sizes["order_s"]}')
        if sizes['enumerated'] is None:
            return
        expected = [sizes['order_t'], sizes['order_sigma'], sizes['order_s']]
        if sizes['enumerated'] != expected:
            self.fail(f'enumeration gives {sizes["enumerated"]}, formulas give {expected}')
        self.say(self.style.SUCCESS('enumeration agrees'))
