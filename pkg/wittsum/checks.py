"""System checks of the ``WITTSUM_*`` settings, run by every management command."""

import numbers

from django.core.checks import Error, register

from .conf import setting


def _positive_int(name, minimum=1):
    value = setting(name)
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        return "%s should be an integer >= %d, got %r" % (name, minimum, value)
    return None


def _nonnegative_real(name):
    value = setting(name)
    if isinstance(value, bool) or not isinstance(value, numbers.Real) or value < 0:
        return "%s should be a nonnegative number, got %r" % (name, value)
    return None


CHECKS = (
    ("wittsum.E001", lambda: _positive_int("WITTSUM_MAX_WITT_LENGTH")),
    ("wittsum.E002", lambda: _positive_int("WITTSUM_ENUMERATION_CAP")),
    ("wittsum.E003", lambda: _nonnegative_real("WITTSUM_BOUND_SLACK") or _nonnegative_real("WITTSUM_ROOT_TOLERANCE")),
    ("wittsum.E004", lambda: _positive_int("WITTSUM_WORKERS")),
    ("wittsum.E005", lambda: _positive_int("WITTSUM_LAURENT_MAX_PRECISION", 2)
        or _positive_int("WITTSUM_TEICHMULLER_ITERATIONS_FACTOR")),
)


@register()
def check_settings(app_configs, **kwargs):
    errors = []
    for check_id, check in CHECKS:
        message = check()
        if message:
            errors.append(Error(message, hint="see wittsum.conf.DEFAULTS", id=check_id))
    return errors
