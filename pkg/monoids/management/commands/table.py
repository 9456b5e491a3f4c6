from monoids.published import audit_table
from monoids.serializers import AuditRowSerializer, render_json

from ._base import EXIT_USAGE, MonoidCommand


class Command(MonoidCommand):
    help = 'Compare ranks and sizes of every partition of 3..N with the published tables'

    def add_arguments(self, parser):
        parser.add_argument('max_degree', type=int, help='Largest |X| to list')
        super().add_arguments(parser)

    def run(self, **options):
        max_degree = options['max_degree']
        if max_degree < 3:
            self.fail('the table starts at |X| = 3', returncode=EXIT_USAGE)
        rows = audit_table(max_degree)
        if self.json_output:
            self.stdout.write(render_json(AuditRowSerializer(rows, many=True).data))

        self.say(f'{"partition":<14}{"rank":>6}{"pub":>6}{"|T|":>12}{"pub":>12}')
        mismatches = 0
        for row in rows:
            marker = 'ok'
            if not row.rank_matches or (not row.order_matches and not row.anomaly):
                marker = 'MISMATCH'
                mismatches += 1
            elif row.anomaly:
                marker = f'anomaly: {row.note}'
            self.result(
                f'{row.partition:<14}{row.rank:>6}{self._cell(row.published_rank):>6}'
                f'{row.order_t:>12}{self._cell(row.published_order):>12}  {marker}'
            )
        if mismatches:
            self.fail(f'{mismatches} rows disagree with the published tables')
        self.result(self.style.SUCCESS(f'{len(rows)} rows checked'))

    def _cell(self, value):
        return '-' if value is None else str(value)
