"""
Django settings for the boolsearch project.

The project has no web surface: it is driven through management commands
(analyze, search, meta, campaign) and keeps an optional audit trail of runs in
sqlite.
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get("BOOLSEARCH_SECRET_KEY", "boolsearch-local-only")

DEBUG = os.environ.get("BOOLSEARCH_DEBUG", "") == "1"

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    "boolfun",
    "swarm",
    "tuning",
]


# Database

DATABASES = {
    "default": {
        "ENGINE": "django.db.backends.sqlite3",
        "NAME": BASE_DIR / "db.sqlite3",
    }
}


# Internationalization

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"


# Logging: records go to stderr so reports written to stdout stay clean

LOG_LEVEL = os.environ.get("BOOLSEARCH_LOG_LEVEL", "INFO").upper()

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "plain": {
            "format": "%(asctime)s %(levelname)s %(name)s: %(message)s",
        },
    },
    "handlers": {
        "stderr": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "plain",
        },
    },
    "loggers": {
        "boolfun": {"handlers": ["stderr"], "level": LOG_LEVEL, "propagate": False},
        "swarm": {"handlers": ["stderr"], "level": LOG_LEVEL, "propagate": False},
        "tuning": {"handlers": ["stderr"], "level": LOG_LEVEL, "propagate": False},
    },
}


# Search defaults

BOOLSEARCH = {
    "HC_BUDGET": 50,
    # velocity parameters evolved by the CGA meta-optimizer at n=7
    "PSO_PARAMS": {
        "fit1": {"w": 0.5067, "phi": 2.8751, "psi": 1.3587, "v_max": 3.5008},
        "fit2": {"w": 0.7614, "phi": 2.0073, "psi": 2.0273, "v_max": 2.7183},
        "fit3": {"w": 0.2828, "phi": 2.1824, "psi": 0.8951, "v_max": 4.2639},
    },
    "SWARM_SIZE": 200,
    "ITERATIONS": 400,
    "RUNS": 100,
    "LUS": {"beta": 0.33, "tau": 0.001, "initial_range": 5.0},
    "CGA": {"population": 20, "generations": 100, "crossover_prob": 0.95, "mutation_prob": 0.05},
    "META_SPEC": {"n": 7, "particles": 50, "iterations": 100, "runs": 30},
    "META_RUNS": 6,
    "WORKERS": int(os.environ.get("BOOLSEARCH_WORKERS", "1")),
    "OUTPUT_FORMAT": "json",
    "ANALYZE_ORDERS": {"k_max": 2, "l_max": 1},
    "RUN_SLOW_TESTS": os.environ.get("BOOLSEARCH_SLOW_TESTS", "") == "1",
}
