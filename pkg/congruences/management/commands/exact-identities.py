"""
Check the exact Bernoulli and harmonic identities over the rationals.

Output follows the verify command's formats; exits 1 on any failure.
"""

from django.core.management.base import BaseCommand, CommandError

from congruences.conf import get_setting
from congruences.exceptions import DomainError
from congruences.reporting import emit
from congruences.verifier import FORMATS, run_exact_suite


class Command(BaseCommand):
    help = 'Run the exact (non-modular) Bernoulli and harmonic identity suites'
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('--m-max', type=int, default=None, help='Largest m or n to check')
        parser.add_argument('--format', choices=FORMATS, default='text')
        parser.add_argument('--out', default=None)

    def handle(self, *args, **options):
        m_max = options['m_max'] if options['m_max'] is not None else get_setting('EXACT_SUITE_M_MAX')
        try:
            report = run_exact_suite(m_max)
        except DomainError as error:
            raise CommandError(str(error), returncode=2)

        try:
            emit(report, options['format'], path=options['out'], stream=self.stdout)
        except OSError as error:
            raise CommandError(f"Could not write the report: {error}", returncode=2)

        if report.failed:
            raise CommandError("Exact identity suite reported failures", returncode=1)
