import sys

from django.core.management.base import BaseCommand, CommandError

from monoids.exceptions import (
    ClosureCapExceeded,
    MembershipError,
    PartitionSpecError,
    SearchInconclusive,
    SpecialCaseError,
    TransformationError,
    WreathSearchError,
)
from monoids.partitions import parse_partition
from monoids.serializers import render_json

EXIT_USAGE = 1
EXIT_FAILED = 2
EXIT_INCONCLUSIVE = 3


class MonoidCommand(BaseCommand):
    """Shared options, output helpers and exit codes of the monoid commands"""
    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        # usage errors surface as CommandError so they exit with EXIT_USAGE
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.called_from_command_line = False
        return parser

    def run_from_argv(self, argv):
        # argument parsing happens outside Django's own CommandError handler
        try:
            super().run_from_argv(argv)
        except CommandError as exc:
            self.stderr.write(str(exc))
            sys.exit(exc.returncode)

    def add_arguments(self, parser):
        parser.add_argument('--json', action='store_true', help='Emit JSON instead of text')
        parser.add_argument('--quiet', action='store_true', help='Suppress explanatory lines')

    def handle(self, *args, **options):
        self.json_output = options.get('json', False)
        self.quiet = options.get('quiet', False)
        try:
            return self.run(**options)
        except (PartitionSpecError, TransformationError, MembershipError, SpecialCaseError) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE)
        except (ClosureCapExceeded, SearchInconclusive, WreathSearchError) as exc:
            raise CommandError(f'inconclusive: {exc}', returncode=EXIT_INCONCLUSIVE)

    def run(self, **options):
        raise NotImplementedError

    def partition(self, spec):
        return parse_partition(spec)

    def say(self, message):
        """Explanatory line, dropped by --quiet"""
        if not self.quiet and not self.json_output:
            self.stdout.write(message)

    def result(self, message):
        if not self.json_output:
            self.stdout.write(message)

    def emit(self, serializer_class, instance):
        if self.json_output:
            self.stdout.write(render_json(serializer_class(instance).data))

    def fail(self, message, returncode=EXIT_FAILED):
        raise CommandError(message, returncode=returncode)
