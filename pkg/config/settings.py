"""
Django settings for the schubert_lab project.

The project has no web surface: Django provides configuration, caching,
management commands and the test runner for the algebra apps.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.0/ref/settings/
"""
import os
from pathlib import Path

import environ


env = environ.Env()
# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent
environ.Env.read_env(os.path.join(BASE_DIR, '.env'))

SECRET_KEY = env('SECRET_KEY', default='schubert-lab-local-key')

DEBUG = env.bool('DEBUG', default=False)

ALLOWED_HOSTS = env.list('ALLOWED_HOSTS', default=[])


# Application definition

INSTALLED_APPS = [
    'weyl_app',
    'poly_app',
    'nilhecke_app',
    'schubert_app',
    'gkm_app',
    'convolution_app',
    'cli_app',
] + env.list('INSTALLED_APPS', default=[])

CACHES = {
    'default': {
        'BACKEND': env.str('CACHE_BACKEND', default='django.core.cache.backends.locmem.LocMemCache'),
        'LOCATION': env.str('CACHE_LOCATION', default='schubert-lab'),
    }
}

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {'format': '%(levelname)s %(name)s: %(message)s'},
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'root': {
        'handlers': ['stderr'],
        'level': env.str('LOG_LEVEL', default='WARNING'),
    },
}

# Computation limits
WEYL_ENUMERATION_BOUND = env.int('WEYL_ENUMERATION_BOUND', default=50_000)
REDUCED_WORDS_CAP = env.int('REDUCED_WORDS_CAP', default=10 ** 6)
RANK_CAPS = {
    'A': env.int('RANK_CAP_A', default=5),
    'B': env.int('RANK_CAP_B', default=3),
    'C': env.int('RANK_CAP_C', default=3),
    'D': env.int('RANK_CAP_D', default=4),
}
SCHUBERT_SWEEP_MAX_N = env.int('SCHUBERT_SWEEP_MAX_N', default=4)
GKM_COPRODUCT_MAX_ORDER = env.int('GKM_COPRODUCT_MAX_ORDER', default=48)
CONVOLUTION_MAX_N = 3

# Sweeps
DEFAULT_PARALLELISM = env.int('SCHUBERT_PARALLELISM', default=1)
DEFAULT_SEED = env.int('SCHUBERT_SEED', default=42)
RANDOM_SAMPLES = env.int('RANDOM_SAMPLES', default=100)

TABLE_CACHE_TIMEOUT = env.int('TABLE_CACHE_TIMEOUT', default=24 * 60 * 60)

GOLDEN_DIR = env.str('GOLDEN_DIR', default=os.path.join(BASE_DIR, 'goldens'))

CELERY_BROKER_URL = env.str('CELERY_BROKER_URL', default='redis://localhost:6379')
CELERY_RESULT_BACKEND = env.str('CELERY_RESULT_BACKEND', default='redis://localhost:6379')
CELERY_TASK_ALWAYS_EAGER = env.bool('CELERY_TASK_ALWAYS_EAGER', default=True)
CELERY_ACCEPT_CONTENT = ['application/json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = 'UTC'
