"""
Django settings for the partrank project.

Only the pieces the management commands need are configured: installed apps,
the DRF renderer, logging and the monoids tunables. Every value can be
overridden from the environment or a .env file through python-decouple.
"""

from pathlib import Path
from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# No sessions or signing happen here; the key only satisfies Django's startup checks.
SECRET_KEY = config('SECRET_KEY', default='partrank-insecure-local-key')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',

    # Third party apps
    'rest_framework',

    # Local apps
    'monoids',
]

# Nothing is persisted; Django falls back to its dummy backend.
DATABASES = {}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Django REST Framework (serializers and the JSON renderer only)
REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'COERCE_DECIMAL_TO_STRING': False,
}

# Logging
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '{asctime} {levelname} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'monoids': {
            'handlers': ['console'],
            'level': config('MONOIDS_LOG_LEVEL', default='WARNING'),
            'propagate': False,
        },
    },
}

# Monoid computations
MONOIDS = {
    'CLOSURE_RETAIN_CAP': config('MONOIDS_CLOSURE_RETAIN_CAP', default=2 ** 20, cast=int),
    'CLOSURE_BATCH': config('MONOIDS_CLOSURE_BATCH', default=65536, cast=int),
    'DENSE_SEEN_LIMIT': config('MONOIDS_DENSE_SEEN_LIMIT', default=2 ** 25, cast=int),
    'SEARCH_MAX_ORDER': config('MONOIDS_SEARCH_MAX_ORDER', default=150, cast=int),
    'SEARCH_MAX_CLOSURES': config('MONOIDS_SEARCH_MAX_CLOSURES', default=2_000_000, cast=int),
    'WREATH_ATTEMPTS': config('MONOIDS_WREATH_ATTEMPTS', default=2000, cast=int),
    'SEED': config('MONOIDS_SEED', default=0, cast=int),
}
