"""
Sweep the identity catalog over a range of primes and report the outcome.

Exits 1 when any record fails and 2 on a usage error.
"""

from django.core.management.base import BaseCommand, CommandError

from congruences.conf import get_setting
from congruences.exceptions import DomainError
from congruences.reporting import emit
from congruences.verifier import FORMATS, SweepConfig, parse_pair, run


class Command(BaseCommand):
    help = 'Verify harmonic-number congruences over a range of primes'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--primes', default='5:199', help='Prime range LO:HI, inclusive')
        parser.add_argument('--identities', default='all',
                            help="'all' or a comma-separated list of identity ids")
        parser.add_argument('--m-max', type=int, default=None, help='Largest exponent m to sweep')
        parser.add_argument('--format', choices=FORMATS, default='text')
        parser.add_argument('--out', default=None, help='Write the report here instead of stdout')
        parser.add_argument('--workers', type=int, default=None, help='Worker processes')

    def handle(self, *args, **options):
        identities = options['identities']
        if identities != 'all':
            identities = tuple(part.strip() for part in identities.split(',') if part.strip())

        try:
            lo, hi = parse_pair(options['primes'], '--primes')
            config = SweepConfig(
                prime_lo=lo,
                prime_hi=hi,
                identities=identities,
                m_max=options['m_max'] if options['m_max'] is not None else get_setting('DEFAULT_M_MAX'),
                workers=options['workers'] if options['workers'] is not None else get_setting('DEFAULT_WORKERS'),
                format=options['format'],
                out=options['out'],
            )
            report = run(config)
        except DomainError as error:
            raise CommandError(str(error), returncode=2)

        try:
            emit(report, config.format, path=config.out, stream=self.stdout)
        except OSError as error:
            raise CommandError(f"Could not write the report: {error}", returncode=2)

        failures = sum(1 for record in report.records if record.status == 'fail')
        if failures:
            raise CommandError(f"{failures} verification record(s) failed", returncode=1)
