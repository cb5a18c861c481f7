"""Families of instances checked against the bounds, one :class:`BoundReport` each.

Every family returns a :class:`SweepResult`; violations are data, the caller
decides what to do with them.
"""

import logging
import math
import random

import numpy

from ..asw.conductor import conductor, is_nondegenerate, reduced_pole_order, witt_function
from ..asw.oracle import brute_force_reduced_pole_order
from ..conf import check_enumeration, setting
from ..curves.elliptic import ORIGIN
from ..curves.places import FinitePlace
from ..curves.projective_line import RationalFunction, get_rational_function_field
from ..exceptions import ParameterError
from ..rings.finite_fields import get_field
from ..rings.galois_rings import AdditiveCharacter, get_galois_ring
from ..rings.polynomials import Polynomial
from ..rings.witt import WittParams
from .bounds import BoundInputs, BoundReport, PoleData, bound_cor52, bound_thm31
from .charsums import sum_witt, theorem12_sides

# logger for this file
logger = logging.getLogger(__name__)


class SweepResult(object):
    """Reports of a family together with its summary"""

    def __init__(self, family, reports, skipped=0, parameters=None):
        self.family = family
        self.reports = reports
        self.skipped = skipped
        self.parameters = dict(parameters or {})

    @property
    def violations(self):
        return [report for report in self.reports if not report.passed]

    @property
    def max_ratio(self):
        ratios = [report.ratio for report in self.reports if report.ratio is not None]
        return max(ratios) if ratios else None

    @property
    def passed(self):
        return not self.violations

    def summary(self):
        return {
            "family": self.family,
            "parameters": self.parameters,
            "instances": len(self.reports),
            "skipped": self.skipped,
            "max_ratio": self.max_ratio,
            "violations": len(self.violations),
            "pass": self.passed,
        }

    def log_summary(self):
        summary = self.summary()
        logger.info(
            "[sweeps|%s] %d instances, %d skipped, max ratio %s",
            self.family, summary["instances"], self.skipped, summary["max_ratio"]
        )
        for report in self.violations:
            logger.warning("[sweeps|%s] violation: %r", self.family, report)


# polynomials over Galois rings


_ADD_TABLES = {}


def _add_table(ring):
    if ring not in _ADD_TABLES:
        elements = list(ring.elements())
        _ADD_TABLES[ring] = numpy.array(
            [[ring.index(ring.add(x, y)) for y in elements] for x in elements], dtype=numpy.int64
        )
    return _ADD_TABLES[ring]


def _component_table(ring, add, degree, scale, teichmuller):
    """Values at the Teichmuller points of every ``scale * sum_{k<=degree} [a_k] X^k``.

    Rows are indexed by the coefficients ``a_0, ..., a_degree`` read as base ``q``
    digits, ``a_degree`` being the least significant one. Returns the table of
    ring element indices and the degree of each row (``-1`` for zero).
    """
    field = ring.field
    q = field.q
    points = list(field.elements())
    values = numpy.full((1, q), ring.index(ring.zero), dtype=numpy.int64)
    degrees = numpy.full(1, -1, dtype=numpy.int64)
    for k in range(degree + 1):
        # [a][u]^k = [a u^k]
        term = numpy.array([
            [ring.index(ring.scale(scale, teichmuller[field.mul(a, field.pow(u, k))])) for u in points]
            for a in points
        ], dtype=numpy.int64)
        values = add[values[:, None, :], term[None, :, :]].reshape(-1, q)
        nonzero = numpy.arange(q) > 0
        degrees = numpy.where(nonzero[None, :], k, degrees[:, None]).reshape(-1)
    return values, degrees


def _label(index, sizes, degrees, q):
    parts = []
    for size, degree in reversed(list(zip(sizes, degrees))):
        index, row = divmod(index, size)
        parts.append([(row // q ** (degree - k)) % q for k in range(degree + 1)])
    return "|".join("[%s]" % ",".join(str(c) for c in part) for part in reversed(parts))


def kumar_sweep(p=2, l=2, m=3, degrees=(3, 1), b=None):
    """Every ``f = sum p^i f_i`` with Teichmuller coefficients and ``deg f_i <= degrees[i]``.

    Instances whose components are all constant are skipped. Labels list the
    residues of the coefficients of each ``f_i``, constant term first.
    """
    if len(degrees) > l:
        raise ParameterError("%d component degrees for Witt length %d" % (len(degrees), l))
    ring = get_galois_ring(p, l, m)
    q = ring.field.q
    sizes = [q ** (d + 1) for d in degrees]
    check_enumeration("polynomial family over %r" % ring, math.prod(sizes) * q)
    add = _add_table(ring)
    teichmuller = ring.teichmuller_set()
    character = AdditiveCharacter(ring, b)
    exponents = numpy.array([character.exponent(x) for x in ring.elements()], dtype=numpy.int64)

    values = None
    weighted = None
    largest = None
    for i, degree in enumerate(degrees):
        table, component_degrees = _component_table(ring, add, degree, p ** i, teichmuller)
        weights = numpy.where(component_degrees >= 0, p ** (l - 1 - i) * component_degrees, -1)
        if values is None:
            values, weighted, largest = table, weights, component_degrees
        else:
            values = add[values[:, None, :], table[None, :, :]].reshape(-1, q)
            weighted = numpy.maximum(weighted[:, None], weights[None, :]).reshape(-1)
            largest = numpy.maximum(largest[:, None], component_degrees[None, :]).reshape(-1)
    logger.debug("[sweeps|kumar] %d instances over %r", len(values), ring)

    order = p ** l
    angles = numpy.arange(order, dtype=numpy.longdouble) * (2 * numpy.pi / numpy.longdouble(order))
    roots = (numpy.cos(angles) + 1j * numpy.sin(angles)).astype(numpy.clongdouble)
    points = exponents[values]
    counts = numpy.stack([(points == e).sum(axis=1) for e in range(order)], axis=1)
    moduli = numpy.abs(numpy.sum(counts.astype(numpy.clongdouble) * roots[None, :], axis=1))
    bounds = (weighted - 1) * math.sqrt(q)

    reports = []
    skipped = 0
    for index in range(len(values)):
        if largest[index] <= 0:
            skipped += 1
            continue
        reports.append(BoundReport(
            _label(index, sizes, degrees, q), float(moduli[index]), {"kumar": float(bounds[index])}, "kumar"
        ))
    result = SweepResult("kumar", reports, skipped, {"p": p, "l": l, "m": m, "degrees": list(degrees)})
    result.log_summary()
    return result


# Witt functions on curves


def _sum_report(f, d, bounds, primary, checks=None):
    result = sum_witt(f, d)
    details = {"d": d, "sum": result.as_dict(), "conductor": conductor(f).as_dict()}
    return BoundReport(
        "%s d=%d" % (f, d), result.modulus, bounds, primary, result.value, checks, details
    )


def thm31_sweep(p=2, l=2, m=2, max_a=5, max_b=3, max_d=1):
    """The vectors ``(x^a, x^b, 0, ...)`` on P^1 with ``1 <= a <= max_a`` and ``0 <= b <= max_b``"""
    field = get_rational_function_field(get_field(p, m))
    params = WittParams(p, l)
    x = field.x
    reports = []
    skipped = 0
    for a in range(1, max_a + 1):
        for b in range(max_b + 1):
            coords = [x ** a] + ([x ** b] if l > 1 else []) + [0] * (l - 2)
            f = witt_function(field, params, coords)
            if not is_nondegenerate(f):
                skipped += 1
                continue
            for d in range(1, max_d + 1):
                reports.append(_sum_report(f, d, {"thm31": bound_thm31(f, d)}, "thm31"))
    result = SweepResult("thm31", reports, skipped, {"p": p, "l": l, "m": m, "max_a": max_a, "max_b": max_b})
    result.log_summary()
    return result


def _origin_pole_order(field, c):
    v = field.valuation(c, ORIGIN)
    return -v if v is not None and v < 0 else 0


def elliptic_functions(field, l):
    """Witt vectors with poles only at ``O``: ``f_0`` among ``x, y, x^2, x y`` and ``f_1`` among ``0, 1, x, y``"""
    params = WittParams(field.field.p, l)
    x, y = field.x, field.y
    firsts = [x, y, x * x, x * y]
    seconds = [field.from_int(0), field.from_int(1), x, y]
    for f0 in firsts:
        for f1 in (seconds if l > 1 else [None]):
            coords = [f0] + ([f1] if l > 1 else []) + [field.from_int(0)] * (l - 2)
            yield witt_function(field, params, coords)


def elliptic_sweep(field, l=2, max_rp=9, max_d=3):
    """Conductor bound at genus 1, with the length 2 closed form checked to dominate it"""
    p = field.field.p
    reports = []
    skipped = 0
    for f in elliptic_functions(field, l):
        if not is_nondegenerate(f):
            skipped += 1
            continue
        cond = conductor(f)
        if any(place != ORIGIN for place in cond.support) or reduced_pole_order(f, ORIGIN) > max_rp:
            skipped += 1
            continue
        orders = [_origin_pole_order(field, c) for c in f]
        for d in range(1, max_d + 1):
            bounds = {"thm31": bound_thm31(f, d)}
            checks = {}
            if l == 2:
                inputs = BoundInputs(p, l, field.field.m * d, field.genus, [PoleData(1, orders)])
                bounds["cor52"] = bound_cor52(inputs)
                checks["cor52_dominates"] = bounds["cor52"] >= bounds["thm31"]
            reports.append(_sum_report(f, d, bounds, "thm31", checks))
    result = SweepResult("elliptic", reports, skipped, {"curve": str(field.curve), "l": l, "max_rp": max_rp})
    result.log_summary()
    return result


# identities and oracles


def random_gr_polynomial(ring, degree, rng):
    return Polynomial(ring, [ring.element(rng.randrange(ring.size)) for _ in range(degree + 1)])


def theorem12_sweep(p=2, l=2, m=1, count=20, max_degree=4, seed=None):
    """Random polynomials over GR(p^l, m): Teichmuller sum against the affine point sum"""
    ring = get_galois_ring(p, l, m)
    rng = random.Random(setting("WITTSUM_DEFAULT_SEED") if seed is None else seed)
    reports = []
    for _ in range(count):
        f = random_gr_polynomial(ring, rng.randint(0, max_degree), rng)
        left, right = theorem12_sides(f)
        reports.append(BoundReport(
            str(f), left.modulus, exact=left.value, checks={"identity": left.value == right.value},
            details={"witt": str(right.value)}
        ))
    result = SweepResult("theorem12", reports, 0, {"p": p, "l": l, "m": m, "count": count})
    result.log_summary()
    return result


def random_principal_part(field, place_polynomial, max_pole, rng):
    """``sum_{k=0}^{max_pole} c_k pi^{-k}`` with random coefficients in the prime field"""
    p = field.field.p
    numerator = Polynomial(field.field, [rng.randrange(p) for _ in range(max_pole + 1)])
    return RationalFunction(numerator, place_polynomial ** max_pole)


def rp_oracle_sweep(count=50, max_pole=4, bound=8, seed=None):
    """Artin reduction at ``(x)`` on P^1 over F_2 against the exhaustive witness search"""
    field = get_rational_function_field(get_field(2, 1))
    params = WittParams(2, 2)
    pi = Polynomial.x(field.field)
    place = FinitePlace(pi)
    rng = random.Random(setting("WITTSUM_DEFAULT_SEED") if seed is None else seed)
    reports = []
    for _ in range(count):
        f = witt_function(field, params, [random_principal_part(field, pi, max_pole, rng) for _ in range(2)])
        rp = max(reduced_pole_order(f, place), 0)
        oracle = brute_force_reduced_pole_order(f, place, bound)
        reports.append(BoundReport(
            str(f), rp, checks={"agree": rp == oracle}, details={"rp": rp, "oracle": oracle}
        ))
    result = SweepResult("rp-oracle", reports, 0, {"count": count, "max_pole": max_pole, "bound": bound})
    result.log_summary()
    return result


FAMILIES = {
    "kumar": kumar_sweep,
    "thm31": thm31_sweep,
    "elliptic": elliptic_sweep,
    "theorem12": theorem12_sweep,
    "rp-oracle": rp_oracle_sweep,
}


def verify_sweep(family, **options):
    """Runs the named family with ``options``"""
    try:
        sweep = FAMILIES[family]
    except KeyError:
        raise ParameterError("unknown family %r, expected one of %s" % (family, ", ".join(sorted(FAMILIES))))
    return sweep(**options)
