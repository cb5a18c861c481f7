"""Exponential sums over Teichmuller sets and over the points of a curve.

Values are accumulated as counts of exponents of ``zeta_{p^l}`` and turned
into an exact :class:`CyclotomicInteger` at the end, which makes the merge of
partial sums computed by several worker processes order independent.
"""

import concurrent.futures
import logging

from ..asw.conductor import PointEvaluator, reductions, witt_function
from ..conf import check_enumeration, setting
from ..curves.projective_line import INFINITY, get_rational_function_field
from ..rings.cyclotomic import CyclotomicInteger
from ..rings.galois_rings import AdditiveCharacter, galois_ring_over
from ..rings.polynomials import Polynomial, PolynomialRing
from ..rings.witt import WittVector

# logger for this file
logger = logging.getLogger(__name__)


class CharSumResult(object):
    """An exact exponential sum with its bookkeeping"""

    def __init__(self, value, terms, excluded=(), d=1):
        self.value = value
        self.terms = terms
        self.excluded = sorted(excluded)
        self.d = d

    @property
    def modulus(self):
        return self.value.abs_complex()

    def as_dict(self):
        return {
            "coeffs": self.value.coefficient_list(),
            "value": str(self.value),
            "abs": self.modulus,
            "terms": self.terms,
            "d": self.d,
            "excluded": [str(place) for place in self.excluded],
        }

    def __repr__(self):
        return "CharSumResult(%s, |S|=%.6f, terms=%d)" % (self.value, self.modulus, self.terms)


def gamma_s(f):
    """Witt vector of polynomials attached to ``f`` in ``GR(p^l, m)[T]``.

    Each coefficient is replaced by its Witt vector and ``T`` by ``(T, 0, ...)``.
    The product ``w(c) (T^k, 0, ...)`` is ``(c_0 T^k, c_1 T^{pk}, c_2 T^{p^2 k}, ...)``
    since multiplying by a Teichmuller vector scales the ``i``-th coordinate by
    its ``p^i``-th power.
    """
    ring = f.ring
    field = ring.field
    target = PolynomialRing(field)
    result = WittVector.zero(target, ring.params)
    for k, c in enumerate(f.coeffs):
        if ring.is_zero(c):
            continue
        coords = [Polynomial.monomial(field, a, k * ring.p ** i) for i, a in enumerate(ring.witt_digits(c))]
        result = result + WittVector(target, ring.params, coords)
    return result


def gamma_s_function(f):
    """:func:`gamma_s` as a Witt function on the projective line"""
    vector = gamma_s(f)
    return witt_function(get_rational_function_field(f.ring.field), vector.params, vector.coords)


def sum_teichmuller(f, b=None):
    """``sum_{x in T} psi_b(f(x))`` over the Teichmuller set of the coefficient ring of ``f``"""
    ring = f.ring
    character = AdditiveCharacter(ring, b)
    counts = [0] * ring.characteristic
    for t in ring.teichmuller_set():
        counts[character.exponent(f(t))] += 1
    value = CyclotomicInteger.from_exponent_counts(ring.p, ring.l, counts)
    return CharSumResult(value, ring.field.q)


def _character(f, d, b):
    character = AdditiveCharacter(galois_ring_over(f.ring.field, f.params.l), b)
    return character if d == 1 else character.extended(d)


def _accumulate(f, d, b, exclusions, forms, points):
    """Exponent counts of ``psi(f(P))`` over ``points``, and the number of terms"""
    evaluator = PointEvaluator(f, d, exclusions, forms)
    character = _character(f, d, b)
    ring = character.ring
    counts = [0] * ring.characteristic
    terms = 0
    for point in points:
        if evaluator.is_excluded(point):
            continue
        counts[character.exponent(ring.from_digits(evaluator.values(point)))] += 1
        terms += 1
    return counts, terms


def sum_witt(f, d=1, exclusions=None, b=None):
    """``sum psi_b(Tr f(P))`` over the points ``P`` of ``C(F_{q^d})`` outside ``exclusions``.

    ``exclusions`` defaults to the pole support of ``f``. Points outside the
    chart, or where a coordinate has a pole which disappears after Artin
    reduction, are evaluated on the reduced representative.
    """
    field = f.ring
    p, l = f.params
    forms = {}
    if exclusions is None:
        forms = reductions(f)
        exclusions = [place for place, form in forms.items() if form.rp > 0]
    ext = field.extension(d)
    check_enumeration("points of %s over %r" % (field.name, ext), ext.q + 1)
    points = field.points_over_extension(d)

    workers = setting("WITTSUM_WORKERS")
    if workers > 1 and len(points) >= 2 * workers:
        chunks = [points[k::workers] for k in range(workers)]
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_accumulate, f, d, b, exclusions, forms, chunk) for chunk in chunks]
            partials = [future.result() for future in futures]
    else:
        partials = [_accumulate(f, d, b, exclusions, forms, points)]

    counts = [sum(column) for column in zip(*(partial[0] for partial in partials))]
    terms = sum(partial[1] for partial in partials)
    value = CyclotomicInteger.from_exponent_counts(p, l, counts)
    logger.debug("[charsums|sum_witt] %s over %r: %s (%d terms)", f, ext, value, terms)
    return CharSumResult(value, terms, exclusions, d)


def theorem12_sides(f, b=None):
    """The Teichmuller sum of ``f`` and the point sum of :func:`gamma_s_function` over the affine line"""
    left = sum_teichmuller(f, b)
    right = sum_witt(gamma_s_function(f), 1, exclusions=[INFINITY], b=b)
    return left, right


def theorem12_check(f, b=None):
    """Whether the Teichmuller sum of ``f`` equals the affine point sum of its Witt vector"""
    left, right = theorem12_sides(f, b)
    if left.value != right.value:
        logger.warning("[charsums|theorem12] %s: %s != %s", f, left.value, right.value)
        return False
    return True
