"""
Django settings for the harmonic congruences project.

The project has no HTTP surface; Django hosts the configuration, the
logging setup and the management commands that drive the verifier.
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = 'django-insecure-harmonic-congruences-dev-key'

DEBUG = False

# Application definition
INSTALLED_APPS = [
    'congruences',
]

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# Verifier settings; keys missing here fall back to congruences.conf.DEFAULTS
HARMONIC_VERIFIER = {
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

# Logging goes to stderr; reports are written to stdout or --out
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'congruences': {
            'handlers': ['console'],
            'level': os.environ.get('HARMONIC_VERIFIER_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    },
}
