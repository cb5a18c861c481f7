"""
Django settings of the wittsum project.

Only the management commands are used: no database, no URL configuration.
For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
import os

SITE_NAME = "WITTSUM"

BASE_DIR = os.path.abspath(
    os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, os.pardir)
)

# path of the log files
WITTSUM_LOG_DIRECTORY = os.environ.get("WITTSUM_LOG_DIRECTORY", os.path.join(BASE_DIR, "logs"))
FILE_LOGGING_LOCATION = os.path.join(WITTSUM_LOG_DIRECTORY, "%s.log" % SITE_NAME)

# SECURITY WARNING: nothing is served, the key only silences the checks
SECRET_KEY = "wittsum-command-line-only"

DEBUG = False

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = (
    "wittsum",
)

DATABASES = {}

USE_TZ = True

# Witt vectors longer than this are refused
WITTSUM_MAX_WITT_LENGTH = 4

# Largest number of points or polynomials enumerated by a single call
WITTSUM_ENUMERATION_CAP = 10 ** 7

# Teichmuller lifts iterate x -> x^q at most this many times the Witt length
WITTSUM_TEICHMULLER_ITERATIONS_FACTOR = 2

# Absolute slack of every |S| <= bound comparison
WITTSUM_BOUND_SLACK = 1e-9

# Relative tolerance of |alpha| = q^{1/2} on the inverse roots of L-polynomials
WITTSUM_ROOT_TOLERANCE = 1e-6

# Cap of the Laurent expansions at the points of elliptic curves
WITTSUM_LAURENT_MAX_PRECISION = 2 ** 16

# Processes summing over points, 1 sums in the calling process
WITTSUM_WORKERS = int(os.environ.get("WITTSUM_WORKERS", 1))

# Seed of the random families when --seed is not given
WITTSUM_DEFAULT_SEED = 0

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "*** [%(levelname)s] %(asctime)s %(module)s %(process)d %(message)s"
        },
        "simple": {"format": "[%(levelname)s] %(message)s"},
    },
    "handlers": {
        "file": {
            "level": "DEBUG",
            "class": "logging.FileHandler",
            "filename": FILE_LOGGING_LOCATION,
            "formatter": "verbose",
        },
        "console": {
            "level": "WARNING",
            "class": "logging.StreamHandler",
            "formatter": "simple",
        },
    },
    "loggers": {
        "wittsum.rings": {
            "handlers": ["file"],
            "level": "INFO",
            "propagate": True,
        },
        "wittsum.curves": {
            "handlers": ["file"],
            "level": "INFO",
            "propagate": True,
        },
        "wittsum.asw": {
            "handlers": ["file"],
            "level": "DEBUG",
            "propagate": True,
        },
        "wittsum.sums": {
            "handlers": ["file", "console"],
            "level": "INFO",
            "propagate": True,
        },
        "wittsum.management": {
            "handlers": ["console"],
            "level": "WARNING",
            "propagate": True,
        },
    },
}

LANGUAGE_CODE = "en-us"

TIME_ZONE = "UTC"
