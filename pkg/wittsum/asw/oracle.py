"""Exhaustive witness search for reduced pole orders of length 2 vectors on P^1.

Writing ``g = (g_0, g_1)``, ``f - wp(g) = (a_0, a_1 - (g_1^p - g_1))`` with
``a = f - wp(g_0, 0)``. For a fixed ``g_0`` the second coordinate is affine in
the coefficients of ``g_1`` over F_p, so the search over ``g_1`` runs on
principal parts with numpy.
"""

import functools
import itertools
import logging

import numpy

from ..conf import check_enumeration
from ..exceptions import ParameterError
from ..rings.witt import WittVector
from .conductor import wp

# logger for this file
logger = logging.getLogger(__name__)


def _principal_part(field, g, place, order):
    """Coefficients of ``t^{-1}, ..., t^{-order}`` of ``g`` at ``place``"""
    result = numpy.zeros(order, dtype=numpy.int64)
    if g.is_zero():
        return result
    v = field.valuation(g, place)
    if v >= 0:
        return result
    if -v > order:
        raise ParameterError("pole of order %d above the search window %d" % (-v, order))
    expansion = field.laurent_at(g, place, -v)
    for k, c in enumerate(expansion.coefficients):
        result[-(v + k) - 1] = c
    return result


def _pole_orders(rows):
    """Highest index with a nonzero entry, plus one, per row (0 for pole-free rows)"""
    nonzero = rows != 0
    reversed_index = numpy.argmax(nonzero[:, ::-1], axis=1)
    orders = rows.shape[1] - reversed_index
    return numpy.where(nonzero.any(axis=1), orders, 0)


@functools.lru_cache(maxsize=None)
def witness_table(field, params, place, bound):
    """The monomials ``h_k`` at ``place`` and ``wp(g_0, 0)`` for every ``g_0`` of the search"""
    p = params.p
    one = field.field.one
    monomials = tuple(field.monomial(place, k, one) for k in range(1, bound + 1))
    images = []
    for constant in range(p):
        for coefficients in itertools.product(range(p), repeat=bound):
            g0 = field.from_int(constant)
            for c, h in zip(coefficients, monomials):
                if c:
                    g0 = g0 + h * field.from_int(c)
            images.append(wp(WittVector.teichmuller(field, params, g0)))
    logger.debug("[oracle|table] %d witnesses at %s up to pole order %d", len(images), place, bound)
    return monomials, tuple(images)


def brute_force_reduced_pole_order(f, place, bound):
    """Minimum over witnesses ``g`` of ``max_i(-p^{1-i} v_P(f_i - wp(g)_i))``, clipped at 0.

    ``g_0`` ranges over ``c + sum_{k<=bound} c_k h_k`` and ``g_1`` over
    ``sum_{k<=bound} c_k h_k`` with ``c, c_k`` in F_p and ``h_k`` the monomial of
    valuation ``-k`` at ``place``.
    """
    field = f.ring
    p, l = f.params
    if l != 2:
        raise ParameterError("the witness search handles Witt vectors of length 2 only")
    if field.genus != 0 or place.degree != 1 or field.field.m != 1:
        raise ParameterError("the witness search runs at rational places of P^1 over a prime field")
    check_enumeration("witness pairs", p ** (2 * bound + 1))

    monomials, images = witness_table(field, f.params, place, bound)
    poles = max((-(field.valuation(c, place) or 0) for c in f if not field.is_zero(c)), default=0)
    window = p * p * bound + (p + 1) * max(poles, 0) + 1

    # principal parts of wp_0(h_k), the second coordinate is linear in g_1 over F_p
    shifts = numpy.array(
        [_principal_part(field, h ** p - h, place, window) for h in monomials], dtype=numpy.int64
    )
    combinations = numpy.array(list(itertools.product(range(p), repeat=bound)), dtype=numpy.int64)
    spans = (combinations @ shifts) % p

    best = None
    for image in images:
        v0 = field.valuation(f[0] - image[0], place)
        first = -p * v0 if v0 is not None and v0 < 0 else 0
        if best is not None and first >= best:
            continue
        a = f - image
        rows = (_principal_part(field, a[1], place, window)[None, :] - spans) % p
        second = int(_pole_orders(rows).min())
        score = max(first, second)
        if best is None or score < best:
            best = score
        if best == 0:
            break
    logger.debug("[oracle|search] %s at %s: minimum %d", f, place, best)
    return best
