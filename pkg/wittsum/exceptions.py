"""Exceptions raised by the wittsum library.

The management commands translate them into process exit codes, see
:mod:`wittsum.management.base`.
"""


class WittSumError(Exception):
    """Base class of every error raised by the library"""

    def __init__(self, msg):
        super().__init__(msg)


class ParameterError(WittSumError):
    """Malformed or mismatched parameters"""


class ExpressionSyntaxError(ParameterError):
    """The input grammar rejected a string"""

    def __init__(self, text, reason):
        super().__init__("cannot parse '%s': %s" % (text, reason))
        self.text = text
        self.reason = reason


class ResourceCapError(WittSumError):
    """An enumeration would exceed the configured cap"""

    def __init__(self, what, size, cap):
        super().__init__("%s has %d elements, above the enumeration cap %d" % (what, size, cap))
        self.size = size
        self.cap = cap


class DegenerateVectorError(WittSumError):
    """A mathematical precondition does not hold"""


class PoleEvaluationError(DegenerateVectorError):
    """A function was evaluated at one of its poles"""


class UnsupportedPlaceError(DegenerateVectorError):
    """The requested place kind is outside the supported scope"""


class PrecisionExhaustedError(WittSumError):
    """Laurent working precision reached its cap"""

    def __init__(self, place, precision):
        super().__init__("precision exhausted at %s (working precision %d)" % (place, precision))
        self.place = place
        self.precision = precision


class InternalConsistencyError(WittSumError):
    """An invariant guaranteed by the theory failed: this is a bug"""
