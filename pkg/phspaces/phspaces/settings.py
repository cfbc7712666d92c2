"""
Django settings for the phspaces project.

Every tunable is read from the environment (a ``.env`` file next to
manage.py is loaded first) and falls back to a default suitable for local
use.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv()

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    'DJANGO_SECRET_KEY', 'django-insecure-phspaces-local-development-key'
)

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.environ.get('DJANGO_DEBUG', 'false').lower() in ('1', 'true', 'yes')

ALLOWED_HOSTS = os.environ.get('DJANGO_ALLOWED_HOSTS', 'localhost,127.0.0.1,testserver').split(',')


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'ph_curves',
    'rest_framework',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'phspaces.urls'

WSGI_APPLICATION = 'phspaces.wsgi.application'


# Database
# No models are defined; SQLite only satisfies the test runner.

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.environ.get('DB_NAME', BASE_DIR / 'db.sqlite3'),
    }
}


# REST API

REST_FRAMEWORK = {
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [],
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_RENDERER_CLASSES': ['rest_framework.renderers.JSONRenderer'],
    'DEFAULT_PARSER_CLASSES': ['rest_framework.parsers.JSONParser'],
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# PH curve computations

# Fractional digits of decimal output (--digits without a value, sampling)
PH_DECIMAL_DIGITS = int(os.environ.get('PH_DECIMAL_DIGITS', '6'))

# Extra N beyond the theoretical maximum when sweeping for M0
PH_M0_SWEEP_LIMIT = int(os.environ.get('PH_M0_SWEEP_LIMIT', '8'))

# Largest multiplicity for which `verify` runs the dense nullspace cross-check
PH_DENSE_ORACLE_MAX_N = int(os.environ.get('PH_DENSE_ORACLE_MAX_N', '6'))

PH_LOG_LEVEL = os.environ.get('PH_LOG_LEVEL', 'INFO').upper()


# Logging

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
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
        'ph_curves': {
            'handlers': ['console'],
            'level': PH_LOG_LEVEL,
            'propagate': False,
        },
    },
}
