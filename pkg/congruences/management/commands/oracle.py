"""Print one brute-force sum of k^m H_k^n over k < p, modulo p^e."""

from django.core.management.base import BaseCommand, CommandError

from congruences.exceptions import DomainError
from congruences.harmonic import sum_pow_harmonic
from congruences.modring import make_ring


class Command(BaseCommand):
    help = 'Evaluate sum_{k<p} k^m H_k^n modulo p^e by direct summation'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--p', type=int, required=True)
        parser.add_argument('--e', type=int, default=2)
        parser.add_argument('--m', type=int, required=True, help='Signed power of k')
        parser.add_argument('--n', type=int, required=True, help='Power of H_k, 0..3')

    def handle(self, *args, **options):
        try:
            ring = make_ring(options['p'], options['e'])
            value = sum_pow_harmonic(options['m'], options['n'], ring)
        except DomainError as error:
            raise CommandError(str(error), returncode=2)
        self.stdout.write(str(value))
