import time

from monoids.closure import closure
from monoids.generators import full_generating_set
from monoids.partitions import order_t
from monoids.serializers import ClosureReportSerializer

from ._base import MonoidCommand


class Command(MonoidCommand):
    help = 'Enumerate the closure of the generating set and compare with |T(X,P)|'

    def add_arguments(self, parser):
        parser.add_argument('partition', help='Partition spec, e.g. 3+2+1')
        parser.add_argument('--cap', type=int, default=None, help='Give up after this many elements')
        parser.add_argument('--seed', type=int, default=None, help='Seed for the wreath-pair search')
        super().add_arguments(parser)

    def run(self, **options):
        partition = self.partition(options['partition'])
        gens = full_generating_set(partition, seed=options['seed']).transformations
        started = time.perf_counter()
        result = closure(gens, cap=options['cap'], retain_cap=0)
        seconds = time.perf_counter() - started
        expected = order_t(partition)
        passed = result.order == expected
        self.emit(ClosureReportSerializer, {
            'partition': partition,
            'order': result.order,
            'expected_order': expected,
            'passed': passed,
            'generator_count': result.generator_count,
            'multiplications': result.stats['multiplications'],
            'depth': result.stats['depth'],
            'seconds': round(seconds, 6),
        })
        self.result(f'closure order {result.order}, |T| = {expected}')
        self.say(f'{result.generator_count} generators, {result.stats["multiplications"]} products, depth {result.stats["depth"]}')
        self.say(f'{seconds:.3f}s')
        if not passed:
            self.result(self.style.ERROR('FAIL'))
            self.fail(f'closure of the generating set of {partition} has {result.order} elements, expected {expected}')
        self.result(self.style.SUCCESS('PASS'))
