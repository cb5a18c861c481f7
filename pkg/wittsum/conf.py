"""Access to the ``WITTSUM_*`` settings with their defaults.

The library can be used outside of ``manage.py``: when Django settings are not
configured the defaults below apply.
"""

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from .exceptions import ResourceCapError

DEFAULTS = {
    "WITTSUM_MAX_WITT_LENGTH": 4,
    "WITTSUM_ENUMERATION_CAP": 10 ** 7,
    "WITTSUM_TEICHMULLER_ITERATIONS_FACTOR": 2,
    "WITTSUM_BOUND_SLACK": 1e-9,
    "WITTSUM_ROOT_TOLERANCE": 1e-6,
    "WITTSUM_LAURENT_MAX_PRECISION": 2 ** 16,
    "WITTSUM_WORKERS": 1,
    "WITTSUM_DEFAULT_SEED": 0,
}


def setting(name):
    """Returns the value of the setting ``name``, or its default"""
    default = DEFAULTS[name]
    try:
        return getattr(settings, name, default)
    except ImproperlyConfigured:
        return default


def check_enumeration(what, size):
    """Raises :class:`ResourceCapError` if ``size`` exceeds the enumeration cap"""
    cap = setting("WITTSUM_ENUMERATION_CAP")
    if size > cap:
        raise ResourceCapError(what, size, cap)
