from monoids.serializers import JInvariantSerializer
from monoids.transformations import Transformation, classify, j_invariant, membership

from ._base import MonoidCommand


class Command(MonoidCommand):
    help = 'Print the class and the kernel-type invariant of an element of T(X,P)'

    def add_arguments(self, parser):
        parser.add_argument('partition', help='Partition spec, e.g. 4+4')
        parser.add_argument('transformation', help='Images in comma format, e.g. 0,0,1,1,4,5,6,7')
        super().add_arguments(parser)

    def run(self, **options):
        partition = self.partition(options['partition'])
        f = Transformation.parse(options['transformation'])
        level = membership(partition, f)
        invariant = j_invariant(partition, f)
        label = classify(partition, f)
        entries = [
            {'source_size': a, 'target_size': b, 'kernel_types': [list(kernel) for kernel in types]}
            for (a, b), types in invariant.table
        ]
        self.emit(JInvariantSerializer, {
            'partition': partition, 'transformation': f, 'label': label.tag, 'entries': entries,
        })
        self.say(f'{f} in {partition}: {level.name}, class {label.tag}')
        for entry in entries:
            kernels = ', '.join('{' + ','.join(str(k) for k in kernel) + '}' for kernel in entry['kernel_types'])
            self.result(f'J({entry["source_size"]},{entry["target_size"]}) = {{{kernels}}}')
