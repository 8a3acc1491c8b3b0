"""
Django settings for the assrkit project.

assrkit is a command-line toolkit; Django hosts the management commands,
configuration and logging. There is no URLconf and no HTTP entry point.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Only used by Django internals; nothing here is signed or served.
SECRET_KEY = os.getenv(
    "DJANGO_SECRET_KEY", "django-insecure-assrkit-local-only-k2v9#x1m!q7z"
)

DEBUG = os.getenv("DJANGO_DEBUG", "False") == "True"

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "rest_framework",
    "matrices",
]

# No models and no database.
DATABASES = {}

USE_TZ = True
TIME_ZONE = "UTC"


# Toolkit configuration
ASSRKIT = {
    # Largest order accepted by the minor-enumerating classifiers.
    "MAX_ORDER": int(os.getenv("ASSRKIT_MAX_ORDER", "10")),
    # Permutation search used as the reducibility oracle.
    "BRUTE_FORCE_MAX_ORDER": 7,
    # Above this order inverses use exact elimination instead of the adjugate.
    "ADJUGATE_MAX_ORDER": 8,
    # Significant digits when rendering exact results as decimals.
    "DIGITS": int(os.getenv("ASSRKIT_DIGITS", "5")),
    "SEED": int(os.getenv("ASSRKIT_SEED", "0")),
    "TRIALS": int(os.getenv("ASSRKIT_TRIALS", "50")),
    # Magnitude bound for random integer entries.
    "ENTRY_RANGE": int(os.getenv("ASSRKIT_ENTRY_RANGE", "9")),
}


# Logging goes to stderr so that JSON reports on stdout stay deterministic.
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {
            "format": "{levelname} {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "formatter": "simple",
        },
    },
    "loggers": {
        "matrices": {
            "handlers": ["console"],
            "level": os.getenv("ASSRKIT_LOG_LEVEL", "WARNING"),
            "propagate": False,
        },
    },
}
