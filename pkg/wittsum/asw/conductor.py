"""Artin-Schreier-Witt layer over the supported function fields.

A Witt function is a :class:`WittVector` whose coefficient ring is a function
field descriptor (:class:`RationalFunctionField` or
:class:`EllipticFunctionField`). Function field descriptors provide
``valuation``, ``leading_coefficient``, ``residue_field``, ``monomial``,
``value_at`` and ``pole_places`` for every supported place.
"""

import logging

from ..exceptions import DegenerateVectorError, InternalConsistencyError, ParameterError, PoleEvaluationError
from ..rings.cyclotomic import CyclotomicInteger
from ..rings.finite_fields import get_embedding
from ..rings.galois_rings import AdditiveCharacter, galois_ring_over
from ..rings.witt import WittParams, WittVector

# logger for this file
logger = logging.getLogger(__name__)


def witt_function(field, params, coords):
    """Builds a Witt function, coordinates coerced into ``field``"""
    return WittVector(field, params, [field.coerce(c) for c in coords])


def wp(f):
    """The Artin-Schreier-Witt operator ``F - Id``"""
    return f.frobenius() - f


def extend_constants(f, d):
    """``f`` in the constant field extension of degree ``d``"""
    source = f.ring
    target = source.constant_extension(d)
    return WittVector(target, f.params, [source.base_change(c, target) for c in f])


class ReducedForm(object):
    """Result of the Artin reduction of ``original`` at ``place``.

    ``original = reduced + wp(witness)`` and every coordinate of ``reduced``
    has a valuation at ``local_place`` which is nonnegative or prime to ``p``.
    When the field has no local expansions at ``place``, ``reduced`` and
    ``witness`` live over its residue field and ``local_place`` is the
    rational place above ``place`` there.
    """

    def __init__(self, original, reduced, witness, place, valuations, local_place=None):
        self.original = original
        self.reduced = reduced
        self.witness = witness
        self.place = place
        self.local_place = place if local_place is None else local_place
        self.valuations = valuations
        self._rp = None

    @property
    def rp(self):
        if self._rp is None:
            self._rp = _reduced_pole_order(self)
        return self._rp

    @property
    def extended(self):
        return self.local_place is not self.place

    def residue_values(self):
        """The value ``r(P)`` of the pole-free reduced vector, in the residue field of the place"""
        field = self.reduced.ring
        return [field.value_at(c, self.local_place) for c in self.reduced]

    def __repr__(self):
        return "ReducedForm(%s at %s, rp=%d)" % (self.reduced, self.place, self.rp)


def artin_reduce_at(f, place):
    """Reduces ``f`` modulo ``wp W_l(K)`` at ``place``.

    At index ``i``, while the valuation of the coordinate is ``-p s`` with
    ``s >= 1``, subtracts ``wp(V^i (h, 0, ...))`` where ``h`` has valuation
    ``-s`` and leading coefficient the ``p``-th root of the leading coefficient
    of the coordinate.
    """
    if f.ring.expands_at(place):
        return _reduce(f, place)
    _, local_place = f.ring.rational_place(place)
    form = _reduce(extend_constants(f, place.degree), local_place)
    return ReducedForm(f, form.reduced, form.witness, place, form.valuations, local_place)


def _reduce(f, place):
    field = f.ring
    p, l = f.params
    residue = field.residue_field(place)
    reduced = f
    witness = WittVector.zero(field, f.params)
    for i in range(l):
        while True:
            v = field.valuation(reduced[i], place)
            if v is None or v >= 0 or v % p:
                break
            s = -v // p
            c = residue.pth_root(field.leading_coefficient(reduced[i], place))
            h = WittVector.teichmuller(field, f.params, field.monomial(place, s, c)).verschiebung(i)
            reduced = reduced - wp(h)
            witness = witness + h
            logger.debug("[conductor|reduce] %s: coordinate %d had valuation %d", place, i, v)
    valuations = [field.valuation(c, place) for c in reduced]
    return ReducedForm(f, reduced, witness, place, valuations)


def _reduced_pole_order(form):
    p, l = form.reduced.params
    orders = [-(p ** (l - 1 - i)) * v for i, v in enumerate(form.valuations) if v is not None and v < 0]
    if orders:
        return max(orders)
    # pole-free: rp is -1 exactly when r(P) lies in wp W_l(k(P)), i.e. has zero trace
    values = form.residue_values()
    residue = form.reduced.ring.residue_field(form.local_place)
    ring = galois_ring_over(residue, l)
    return -1 if ring.absolute_trace(ring.from_digits(values)) == 0 else 0


def reduced_pole_order(f, place):
    """``rp_P(f)``, an integer ``>= -1``"""
    return artin_reduce_at(f, place).rp


def witt_valuation(f, place):
    """``V_P(f) = min_i p^{l-1-i} v_P(f_i)``, ``None`` for the zero vector"""
    p, l = f.params
    field = f.ring
    values = [
        p ** (l - 1 - i) * v
        for i, v in enumerate(field.valuation(c, place) for c in f)
        if v is not None
    ]
    return min(values) if values else None


def candidate_places(f):
    """Union of the pole places of the coordinates, sorted"""
    field = f.ring
    places = set()
    for c in f:
        if not field.is_zero(c):
            places.update(field.pole_places(c))
    return sorted(places)


class Conductor(object):
    """The divisor ``sum (rp_P + 1) P`` over the pole support"""

    def __init__(self, entries):
        self.entries = dict(sorted(entries.items()))

    @property
    def degree(self):
        return sum(multiplicity * place.degree for place, multiplicity in self.entries.items())

    @property
    def support(self):
        return list(self.entries)

    def as_dict(self):
        return {
            str(place): {"degree": place.degree, "rp": multiplicity - 1}
            for place, multiplicity in self.entries.items()
        }

    def __repr__(self):
        return "Conductor(%s, degree=%d)" % (
            ", ".join("%s: %d" % (place, m) for place, m in self.entries.items()), self.degree
        )


def reductions(f):
    """Artin reductions at every candidate place, by place"""
    return {place: artin_reduce_at(f, place) for place in candidate_places(f)}


def pole_support(f):
    """``P(f)``: candidate places with ``rp > 0``"""
    return [place for place, form in reductions(f).items() if form.rp > 0]


def conductor(f):
    entries = {place: form.rp + 1 for place, form in reductions(f).items() if form.rp > 0}
    result = Conductor(entries)
    logger.debug("[conductor|conductor] %s: %r", f, result)
    return result


def first_coordinate(f):
    """``(f_0)`` as a Witt function of length 1"""
    return WittVector(f.ring, WittParams(f.params.p, 1), [f[0]])


def is_nondegenerate(f):
    """Whether ``f_0`` is outside ``k + wp_0 K``.

    A pole of ``f_0`` with positive reduced pole order makes the cover
    ramified, hence nondegenerate. Otherwise ``f_0`` is unramified everywhere:
    on P^1 this forces ``f_0`` into ``k + wp_0 K``; on genus 1 the character sum
    of ``f_0`` over the rational points vanishes exactly when the unramified
    cover is geometric.
    """
    field = f.ring
    first = first_coordinate(f)
    if field.is_zero(f[0]):
        return False
    forms = reductions(first)
    if any(form.rp > 0 for form in forms.values()):
        return True
    if field.genus == 0:
        return False
    evaluator = PointEvaluator(first, 1, exclusions=(), forms=forms)
    ring = galois_ring_over(field.field, 1)
    character = AdditiveCharacter(ring)
    counts = [0] * ring.p
    for point in field.points_over_extension(1):
        counts[character.exponent(ring.from_digits(evaluator.values(point)))] += 1
    return CyclotomicInteger.from_exponent_counts(ring.p, 1, counts).is_zero()


def require_nondegenerate(f):
    if not is_nondegenerate(f):
        raise DegenerateVectorError("%s is degenerate: its first coordinate lies in k + wp(K)" % (f,))


def genus_of_cover(f, g_K=None):
    """Genus of ``K(wp^{-1} f)`` from the conductors of the multiples ``n f``"""
    require_nondegenerate(f)
    field = f.ring
    g_K = field.genus if g_K is None else g_K
    p, l = f.params
    degree = p ** l
    total = 2 * degree * (g_K - 1)
    degrees = []
    for n in range(1, degree):
        d = conductor(f.times_int(n)).degree
        degrees.append(d)
        total += d
    if total % 2 or total < -2:
        raise InternalConsistencyError("2(g_L - 1) = %d is not an admissible value" % total)
    genus = total // 2 + 1
    logger.debug("[conductor|genus] %s: conductor degrees %s, genus %d", f, degrees, genus)
    return genus, degrees


def _finite_valuations(f, place):
    field = f.ring
    return [field.valuation(c, place) for c in f]


def check_sum_valuations(f, g, place):
    """Valuation inequality for the coordinates of ``f + g``"""
    p = f.params.p
    a, b = _finite_valuations(f, place), _finite_valuations(g, place)
    h = _finite_valuations(f + g, place)
    for i, value in enumerate(h):
        if value is None:
            continue
        bounds = [p ** (i - k) * v for k in range(i + 1) for v in (a[k], b[k]) if v is not None]
        if bounds and value < min(bounds):
            return False
    return True


def check_product_valuations(f, g, place):
    """Valuation identity and inequalities for the coordinates of ``f g``"""
    p, l = f.params
    a, b = _finite_valuations(f, place), _finite_valuations(g, place)
    h = _finite_valuations(f * g, place)
    if a[0] is not None and b[0] is not None and h[0] != a[0] + b[0]:
        return False
    for i in range(1, l):
        if h[i] is None:
            continue
        bounds = [
            p ** (i - j) * a[j] + p ** (i - k) * b[k]
            for j in range(i + 1) for k in range(i + 1)
            if 0 < j + k <= i and a[j] is not None and b[k] is not None
        ]
        if bounds and h[i] < min(bounds):
            return False
    return True


class PointEvaluator(object):
    """Values of a Witt function at the geometric points of ``C(F_{q^d})``.

    Points of the chart where every coordinate is regular are evaluated
    directly. At the other points the Artin-reduced representative at the
    underlying place is evaluated; places listed in ``exclusions`` and places
    with positive reduced pole order have no value.
    """

    def __init__(self, f, d, exclusions=None, forms=None):
        self.f = f
        self.d = d
        field = f.ring
        self.field = field
        self.ext = field.extension(d)
        self.embed = get_embedding(field.field, self.ext)
        self.forms = dict(forms) if forms is not None else {}
        self.exclusions = set(exclusions) if exclusions is not None else set()
        self._excluded = set()
        for place in self.exclusions:
            self._excluded.update(field.points_of_place(place, d))
        self._evaluators = [field.point_evaluator(c, d) for c in f]
        self._places = {}
        self._extended = {}

    def _form(self, place):
        if place not in self.forms:
            self.forms[place] = artin_reduce_at(self.f, place)
        return self.forms[place]

    def place_of(self, point):
        if point not in self._places:
            self._places[point] = self.field.place_of_point(point, self.d)
        return self._places[point]

    def is_excluded(self, point):
        return point in self._excluded

    def is_chart_point(self, point):
        return isinstance(point, (int, tuple))

    def direct_values(self, point):
        """Chart evaluation, :class:`PoleEvaluationError` at a pole of a coordinate"""
        return [evaluate(point) for evaluate in self._evaluators]

    def values(self, point):
        """The Witt vector value at ``point`` as a list of F_{q^d} elements"""
        if self.is_chart_point(point):
            try:
                return self.direct_values(point)
            except PoleEvaluationError:
                pass
        place = self.place_of(point)
        form = self._form(place)
        if form.rp > 0:
            raise PoleEvaluationError("%s has reduced pole order %d at %s" % (self.f, form.rp, place))
        if form.extended:
            return self._extended_values(point, place)
        if place.degree == 1:
            return [self.embed(value) for value in form.residue_values()]
        if not self.is_chart_point(point):
            raise ParameterError("the point %s should be affine" % (point,))
        return [self.field.point_evaluator(c, self.d)(point) for c in form.reduced]

    def _extended_values(self, point, place):
        """Residue of the reduction at the rational place of ``point`` over the residue field of ``place``"""
        if place not in self._extended:
            self._extended[place] = extend_constants(self.f, place.degree)
        extended = self._extended[place]
        target = extended.ring
        embedding = get_embedding(target.field, self.ext)
        local = target.place_of_point(tuple(embedding.preimage(c) for c in point), 1)
        return [embedding(value) for value in _reduce(extended, local).residue_values()]
