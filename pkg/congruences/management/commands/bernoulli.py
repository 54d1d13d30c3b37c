"""Print B_0..B_M exactly, or reduced modulo p^e."""

from django.core.management.base import BaseCommand, CommandError

from congruences.bernoulli import bernoulli_exact, bernoulli_mod_table
from congruences.exactmath import as_fraction_string
from congruences.exceptions import DomainError
from congruences.modring import make_ring
from congruences.verifier import parse_pair


class Command(BaseCommand):
    help = 'Print Bernoulli numbers, exactly or modulo a prime power'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--max', type=int, required=True, dest='max_index', help='Largest index M')
        parser.add_argument('--mod', default=None, help='P or P:E; reduce modulo P^E (E defaults to 1)')

    def handle(self, *args, **options):
        max_index = options['max_index']
        try:
            if options['mod'] is None:
                table = bernoulli_exact(max_index)
                lines = [f"B_{n} = {as_fraction_string(value)}" for n, value in enumerate(table.values)]
            else:
                p, e = parse_pair(options['mod'], '--mod', default_second=1)
                table = bernoulli_mod_table(make_ring(p, e), max_index)
                lines = [f"B_{n} = {table[n]}" for n in range(table.max_index + 1)]
        except DomainError as error:
            raise CommandError(str(error), returncode=2)

        self.stdout.write('\n'.join(lines))
