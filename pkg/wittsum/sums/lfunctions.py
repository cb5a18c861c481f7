"""L-polynomials of Artin-Schreier-Witt characters from their point sums."""

import logging

import numpy

from ..asw.conductor import conductor, require_nondegenerate
from ..conf import setting
from ..exceptions import ParameterError
from ..rings.cyclotomic import CyclotomicRational
from .charsums import sum_witt

# logger for this file
logger = logging.getLogger(__name__)


class LFunctionResult(object):
    """Coefficients of ``L(T)`` up to ``T^N`` and the checks run on them"""

    def __init__(self, coefficients, claimed_degree, power_sums, conductor, q):
        self.coefficients = coefficients
        self.claimed_degree = claimed_degree
        self.power_sums = power_sums
        self.conductor = conductor
        self.q = q
        self.residuals = coefficients[claimed_degree + 1:]
        self.degree_ok = all(c.is_zero() for c in self.residuals)
        self.root_moduli = inverse_root_moduli(coefficients[:claimed_degree + 1])
        expected = q ** 0.5
        tolerance = setting("WITTSUM_ROOT_TOLERANCE")
        self.rh_ok = all(abs(modulus - expected) <= tolerance * expected for modulus in self.root_moduli)

    @property
    def degree(self):
        """Degree of the truncated polynomial"""
        nonzero = [n for n, c in enumerate(self.coefficients) if not c.is_zero()]
        return nonzero[-1]

    def as_dict(self):
        return {
            "coefficients": [c.coefficient_list() for c in self.coefficients],
            "polynomial": [str(c) for c in self.coefficients],
            "claimed_degree": self.claimed_degree,
            "degree": self.degree,
            "degree_ok": self.degree_ok,
            "residuals": [str(c) for c in self.residuals],
            "root_moduli": self.root_moduli,
            "expected_modulus": self.q ** 0.5,
            "rh_ok": self.rh_ok,
            "conductor": self.conductor.as_dict(),
        }

    def __repr__(self):
        return "LFunctionResult(%s)" % " + ".join(
            "(%s)T^%d" % (c, n) for n, c in enumerate(self.coefficients) if not c.is_zero()
        )


def coefficients_from_power_sums(power_sums, p, l):
    """Newton recursion ``n c_n = sum_{d=1}^{n} S_d c_{n-d}``, exact over Q(zeta)"""
    coefficients = [CyclotomicRational.one(p, l)]
    for n in range(1, len(power_sums) + 1):
        total = CyclotomicRational.zero(p, l)
        for d in range(1, n + 1):
            total = total + power_sums[d - 1] * coefficients[n - d]
        coefficients.append(total / n)
    return [c.to_integer() for c in coefficients]


def power_sums_from_coefficients(coefficients, n):
    """The ``S_1, ..., S_n`` of ``T L'(T) / L(T)``, inverse of the Newton recursion"""
    power_sums = []
    for k in range(1, n + 1):
        total = coefficients[k] * k if k < len(coefficients) else coefficients[0] * 0
        for d in range(1, min(k, len(coefficients))):
            total = total - power_sums[k - d - 1] * coefficients[d]
        power_sums.append(total)
    return power_sums


def inverse_root_moduli(coefficients):
    """Moduli of the inverse roots of ``sum c_n T^n``, sorted"""
    if len(coefficients) < 2:
        return []
    # roots of T^D L(1/T) are the inverse roots of L
    values = numpy.array([complex(c.to_clongdouble()) for c in coefficients], dtype=numpy.complex128)
    return sorted(float(r) for r in numpy.abs(numpy.roots(values)))


def l_function(f, n=None, b=None):
    """``L(T)`` of the character attached to the nondegenerate Witt function ``f``.

    ``n`` point sums are computed, at least two beyond the expected degree
    ``deg D + 2g - 2`` so that the vanishing of the tail is witnessed.
    """
    require_nondegenerate(f)
    field = f.ring
    p, l = f.params
    cond = conductor(f)
    claimed = cond.degree + 2 * field.genus - 2
    if n is None:
        n = claimed + 2
    if n < claimed + 2:
        raise ParameterError("%d terms are not enough to witness a polynomial of degree %d" % (n, claimed))
    power_sums = [sum_witt(f, d, cond.support, b).value for d in range(1, n + 1)]
    coefficients = coefficients_from_power_sums(power_sums, p, l)
    result = LFunctionResult(coefficients, claimed, power_sums, cond, field.field.q)
    if not result.degree_ok:
        logger.warning("[lfunctions|l_function] %s: nonzero coefficients beyond degree %d", f, claimed)
    logger.debug("[lfunctions|l_function] %r", result)
    return result

