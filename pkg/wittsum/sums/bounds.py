"""Upper bounds for the exponential sums and the reports comparing them with measured sums."""

import collections
import logging
import math

from ..asw.conductor import conductor, require_nondegenerate
from ..conf import setting
from ..exceptions import DegenerateVectorError, ParameterError

# logger for this file
logger = logging.getLogger(__name__)


def _ceil_div(a, b):
    return -((-a) // b)


def divisor_d_degree(g, p):
    """Degree ``2g - 2 + ceil((2g - 1)/p)`` of the auxiliary divisor ``D``"""
    return 2 * g - 2 + _ceil_div(2 * g - 1, p)


def bound_kumar(p, l, m, degrees):
    """``(max_i p^{l-1-i} deg f_i - 1) p^{m/2}`` for ``f = f_0 + p f_1 + ...``.

    ``degrees`` lists ``deg f_i``, with ``-1`` for a zero component.
    """
    if len(degrees) > l:
        raise ParameterError("%d component degrees for Witt length %d" % (len(degrees), l))
    if all(d <= 0 for d in degrees):
        raise DegenerateVectorError("every component is constant")
    weighted = max(p ** (l - 1 - i) * d for i, d in enumerate(degrees) if d >= 0)
    return (weighted - 1) * math.sqrt(p ** m)


def bound_kumar_for(f):
    """:func:`bound_kumar` for a polynomial over a Galois ring, degrees read off its Teichmuller expansion"""
    ring = f.ring
    degrees = [component.degree for component in ring.teichmuller_expansion(f)]
    return bound_kumar(ring.p, ring.l, ring.m, degrees)


def bound_thm31(f, d=1, g_K=None):
    """``(2(g - 1) + sum (rp_P + 1) deg P) q^{d/2}`` for a nondegenerate Witt function"""
    require_nondegenerate(f)
    field = f.ring
    g_K = field.genus if g_K is None else g_K
    return (2 * (g_K - 1) + conductor(f).degree) * math.sqrt(field.field.q ** d)


class PoleData(collections.namedtuple("PoleData", ["degree", "orders", "v", "v0"])):
    """A pole place: its degree, the pole orders ``n_j`` of the components, ``v`` and ``v0``"""

    __slots__ = ()

    def __new__(cls, degree, orders, v=0, v0=0):
        return super(PoleData, cls).__new__(cls, degree, tuple(orders), v, v0)


class BoundInputs(object):
    """Parameters of the closed form bounds over a curve of genus ``g``.

    ``divisor`` tells whether the multiplicities ``v`` describe a divisor ``D``
    of degree :func:`divisor_d_degree`, which is then checked.
    """

    def __init__(self, p, l, m, g, poles, divisor=False):
        self.p, self.l, self.m, self.g = p, l, m, g
        self.poles = [pole if isinstance(pole, PoleData) else PoleData(*pole) for pole in poles]
        self.divisor = divisor
        self.validate()

    def validate(self):
        if min(self.p, self.l, self.m) < 1 or self.g < 0:
            raise ParameterError("p, l, m must be positive and g nonnegative")
        for pole in self.poles:
            if pole.degree < 1:
                raise ParameterError("pole places have positive degree")
            if min(pole.orders + (pole.v, pole.v0), default=0) < 0:
                raise ParameterError("pole orders and multiplicities are nonnegative")
            if len(pole.orders) not in (1, self.l):
                raise ParameterError("expected 1 or %d pole orders per place, got %d" % (self.l, len(pole.orders)))
        if self.divisor:
            total = sum(pole.v * pole.degree for pole in self.poles)
            expected = divisor_d_degree(self.g, self.p)
            if total != expected:
                raise ParameterError("the divisor D has degree %d instead of %d" % (total, expected))

    def orders(self, pole):
        """The ``l`` component pole orders of ``pole``, a single order applying to every component"""
        if len(pole.orders) == 1:
            return pole.orders * self.l
        return pole.orders

    @property
    def sqrt_q(self):
        return math.sqrt(self.p ** self.m)

    def as_dict(self):
        return {
            "p": self.p, "l": self.l, "m": self.m, "g": self.g,
            "poles": [pole._asdict() for pole in self.poles],
        }


def _local_term(n, v, v0, p, length):
    return max(p ** (length - 1) * (n + 1 + v), p ** (length - 2) * (n + 1 + v0 + 2 * v))


def pole_order_estimate(n, v, v0, p, l):
    """Estimate of the reduced pole order of ``Gamma(s)`` of a function with a pole of order ``n``"""
    if l < 2:
        return n
    if n > 0:
        return _local_term(n, v, v0, p, l)
    return max(p ** (l - 1) * v, p ** (l - 2) * (v0 + 2 * v))


def local_exponents(inputs):
    """The ``A_i`` of every pole place"""
    p, l = inputs.p, inputs.l
    exponents = []
    for pole in inputs.poles:
        orders = inputs.orders(pole)
        terms = [_local_term(orders[j], pole.v, pole.v0, p, l - j) for j in range(l - 1)]
        exponents.append(max(terms + [orders[l - 1]]))
    return exponents


def thm51_coefficient(inputs):
    """``sum (A_i + 1) deg P_i + 2g - 2``"""
    total = sum((a + 1) * pole.degree for a, pole in zip(local_exponents(inputs), inputs.poles))
    return total + 2 * inputs.g - 2


def bound_thm51(inputs):
    return thm51_coefficient(inputs) * inputs.sqrt_q


def _single_orders(inputs):
    return [max(pole.orders) for pole in inputs.poles]


def cor52_coefficient(inputs):
    """``B_f`` for Witt vectors of length 2"""
    if inputs.l != 2:
        raise DegenerateVectorError("the length 2 bound needs l = 2, not %d" % inputs.l)
    p, g = inputs.p, inputs.g
    total = sum((p * (n + 1) + 1) * pole.degree for n, pole in zip(_single_orders(inputs), inputs.poles))
    return total + (2 * g - 2) * (p + 1) + p * _ceil_div(2 * g - 1, p)


def bound_cor52(inputs):
    return cor52_coefficient(inputs) * inputs.sqrt_q


def cor53_coefficient(inputs):
    """``B_f`` for lifted canonical or complete intersection curves, odd ``p``"""
    if inputs.p == 2:
        raise DegenerateVectorError("this bound needs an odd characteristic")
    p, g = inputs.p, inputs.g
    r = p ** (inputs.l - 1)
    total = sum((r * (n + 1) + 1) * pole.degree for n, pole in zip(_single_orders(inputs), inputs.poles))
    return total + (2 * g - 2) * (r + 1) + r * _ceil_div(2 * g - 1, p)


def bound_cor53(inputs):
    return cor53_coefficient(inputs) * inputs.sqrt_q


class BoundReport(object):
    """One instance of a sweep.

    ``passed`` holds when every named check holds, and, when a ``primary``
    bound is given, when ``measured <= bound + slack``.
    """

    def __init__(self, instance, measured, bounds=None, primary=None, exact=None, checks=None, details=None):
        self.instance = instance
        self.measured = measured
        self.bounds = dict(bounds or {})
        self.primary = primary
        self.exact = exact
        self.checks = dict(checks or {})
        self.details = dict(details or {})
        self.ratio = None
        if primary is not None:
            bound = self.bounds[primary]
            slack = setting("WITTSUM_BOUND_SLACK")
            if bound > 0:
                self.ratio = measured / bound
            self.checks["bound"] = measured <= bound + slack
        self.passed = all(self.checks.values())

    @property
    def bound(self):
        return self.bounds.get(self.primary)

    def as_dict(self):
        result = {
            "instance": self.instance,
            "measured": self.measured,
            "bounds": self.bounds,
            "ratio": self.ratio,
            "checks": self.checks,
            "pass": self.passed,
        }
        if self.exact is not None:
            result["exact"] = self.exact.coefficient_list()
        result.update(self.details)
        return result

    def as_row(self):
        """``instance, |S|, bound, ratio`` for CSV output"""
        return [self.instance, self.measured, self.bound, self.ratio]

    def __repr__(self):
        return "BoundReport(%s, |S|=%s, bound=%s, pass=%s)" % (self.instance, self.measured, self.bound, self.passed)
