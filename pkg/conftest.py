"""Configure Django before the tests import the management commands."""

import os

import django


def pytest_configure():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'harmonic_congruences.settings')
    django.setup()
