from pathlib import Path

from monoids.certification import certify_lower_bound, certify_minimality
from monoids.serializers import CertificateSerializer
from monoids.transformations import Transformation

from ._base import EXIT_USAGE, MonoidCommand


def read_generating_set(path):
    """One transformation per line, optionally prefixed by its tag ('unit: 1,0,2')"""
    elements = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        elements.append(Transformation.parse(line.rsplit(':', 1)[-1]))
    return elements


class Command(MonoidCommand):
    help = 'Check a generating set against every necessity obligation'

    def add_arguments(self, parser):
        parser.add_argument('partition', help='Partition spec, e.g. 3+2+1')
        parser.add_argument('path', nargs='?', help='File with one transformation per line')
        parser.add_argument('--file', dest='file_path', help='Same as the positional file')
        super().add_arguments(parser)

    def run(self, **options):
        partition = self.partition(options['partition'])
        path = options['path'] or options['file_path']
        if path:
            try:
                elements = read_generating_set(path)
            except OSError as exc:
                self.fail(f'cannot read {path}: {exc}', returncode=EXIT_USAGE)
            certificate = certify_lower_bound(partition, elements)
        else:
            certificate = certify_minimality(partition)

        self.emit(CertificateSerializer, certificate)
        self.say(f'# {certificate.element_count} elements, {len(certificate.obligations)} obligations')
        for obligation in certificate.obligations:
            holder = 'MISSING' if obligation.satisfied_by is None else f'element {obligation.satisfied_by}'
            self.result(f'{obligation.requirement:<50} {holder}')
        for note in certificate.notes:
            self.result(self.style.ERROR(note))
        if not certificate.passed:
            self.result(self.style.ERROR('fail'))
            self.fail(f'{len(certificate.missing)} obligations missing for {partition}')
        self.result(self.style.SUCCESS('pass'))
