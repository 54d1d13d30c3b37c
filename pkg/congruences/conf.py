"""
Configuration access for the congruence library.

Values come from the HARMONIC_VERIFIER dict in the Django settings when a
settings module is configured or named by DJANGO_SETTINGS_MODULE, and from
DEFAULTS otherwise, so the library can be imported and tested without a
Django project.
"""

import os
from typing import Any, Dict

DEFAULTS: Dict[str, Any] = {
    'BINOMIAL_CACHE_ROWS': 256,
    'BERNOULLI_MAX_INDEX': 256,
    'RING_PRIME_CAP': 10_000,
    'PRIME_RANGE_CAP': 1_000_000,
    'EXACT_ORACLE_MAX_PRIME': 97,
    'DEFAULT_M_MAX': 12,
    'DEFAULT_WORKERS': 1,
    'EXACT_SUITE_M_MAX': 41,
    'VSC_MAX_INDEX': 60,
}


def get_setting(name: str) -> Any:
    """
    Look up a verifier setting.

    Args:
        name: Key of the HARMONIC_VERIFIER settings dict

    Returns:
        The configured value, or the built-in default

    Raises:
        KeyError: If the name is not a known setting
    """
    if name not in DEFAULTS:
        raise KeyError(f"Unknown verifier setting: {name}")

    from django.conf import settings

    # fresh worker processes have not touched settings yet
    if settings.configured or os.environ.get('DJANGO_SETTINGS_MODULE'):
        overrides = getattr(settings, 'HARMONIC_VERIFIER', {})
        if name in overrides:
            return overrides[name]
    return DEFAULTS[name]
