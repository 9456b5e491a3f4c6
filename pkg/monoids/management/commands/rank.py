from monoids.rank_formulas import rank_total
from monoids.serializers import RankBreakdownSerializer

from ._base import MonoidCommand


class Command(MonoidCommand):
    help = 'Print the rank of T(X,P) and its three components'

    def add_arguments(self, parser):
        parser.add_argument('partition', help='Partition spec, e.g. 3+2+1')
        super().add_arguments(parser)

    def run(self, **options):
        partition = self.partition(options['partition'])
        breakdown = rank_total(partition)
        self.emit(RankBreakdownSerializer, breakdown)
        self.result(self.style.SUCCESS(f'rank(T({partition})) = {breakdown.total}'))
        self.say(f'  rank(S)   = {breakdown.rank_units}')
        self.say(f'  rank(T:Σ) = {breakdown.relrank_t_over_sigma}')
        self.say(f'  rank(Σ:S) = {breakdown.relrank_sigma_over_s}')
        params = breakdown.params
        self.say(
            f'  p={params.p} q={params.q} t={params.t} s={params.s} r={params.r_rep} '
            f'l={params.l} g={params.g} g\'={params.g_prime} h={params.h}'
        )
        if breakdown.special_case:
            self.say(f'  special case: {breakdown.special_case}')
