from monoids.closure import generates_t
from monoids.generators import full_generating_set
from monoids.serializers import GeneratingSetSerializer

from ._base import MonoidCommand


class Command(MonoidCommand):
    help = 'Print a generating set of T(X,P) of minimum size'

    def add_arguments(self, parser):
        parser.add_argument('partition', help='Partition spec, e.g. 3+2+1')
        parser.add_argument('--verify', action='store_true', help='Check by closure that the set generates T(X,P)')
        parser.add_argument('--seed', type=int, default=None, help='Seed for the wreath-pair search')
        super().add_arguments(parser)

    def run(self, **options):
        partition = self.partition(options['partition'])
        generating_set = full_generating_set(partition, seed=options['seed'])
        generates = None
        if options['verify']:
            generates = generates_t(partition, generating_set.transformations)
        self.emit(GeneratingSetSerializer, {
            'partition': partition,
            'size': generating_set.size,
            'elements': generating_set.elements,
            'generates': generates,
        })
        self.say(f'# {generating_set.size} generators of T({partition})')
        for element in generating_set:
            self.result(f'{element.tag}: {element.transformation}')
        if generates is False:
            self.fail(f'the set does not generate T({partition})')
        if generates:
            self.say(self.style.SUCCESS('generates T(X,P)'))
