"""Witt vectors of finite length over a coefficient ring.

The ring structure of ``W_l(A)`` is carried by the universal polynomials
``S_i`` (sum), ``M_i`` (product) and ``N_i`` (negation), computed once per
``(p, l)`` by the ghost recursion over the integers and reduced modulo ``p``.
"""

import collections
import functools
import logging

import sympy
from sympy.polys.domains import ZZ
from sympy.polys.rings import ring as polynomial_ring

from ..conf import setting
from ..exceptions import InternalConsistencyError, ParameterError

# logger for this file
logger = logging.getLogger(__name__)


class WittParams(collections.namedtuple("WittParams", ["p", "l"])):
    """The prime ``p`` and the length ``l`` of ``W_l``"""

    __slots__ = ()

    def __new__(cls, p, l):
        p, l = int(p), int(l)
        if not sympy.isprime(p):
            raise ParameterError("%d is not a prime" % p)
        ceiling = setting("WITTSUM_MAX_WITT_LENGTH")
        if not 1 <= l <= ceiling:
            raise ParameterError("Witt length %d outside of 1..%d" % (l, ceiling))
        return super().__new__(cls, p, l)


class UniversalWittPolys(object):
    """The polynomials ``S_i``, ``M_i``, ``N_i`` for ``0 <= i < l``.

    ``sums``, ``products`` and ``negations`` are the integer polynomials (sympy
    ring elements in ``X_0..X_{l-1}, Y_0..Y_{l-1}``). The ``*_terms`` lists hold
    the same polynomials as ``(exponents, coefficient)`` pairs, once with integer
    coefficients and once with coefficients reduced modulo ``p`` (zero terms
    dropped).
    """

    def __init__(self, params, gens, sums, products, negations):
        self.params = params
        self.gens = gens
        self.sums = sums
        self.products = products
        self.negations = negations

        p = params.p
        self.integer_terms = {
            "add": [_terms(s) for s in sums],
            "mul": [_terms(m) for m in products],
            "neg": [_terms(n) for n in negations],
        }
        self.reduced_terms = {
            kind: [[(e, c % p) for e, c in terms if c % p] for terms in table]
            for kind, table in self.integer_terms.items()
        }

    def terms(self, kind, i, characteristic):
        if characteristic == 0:
            return self.integer_terms[kind][i]
        return self.reduced_terms[kind][i]


def _terms(poly):
    return sorted((tuple(monom), int(c)) for monom, c in poly.items())


def _exact_div(poly, divisor, R):
    quotient = {}
    for monom, c in poly.items():
        q, r = divmod(int(c), divisor)
        if r:
            raise InternalConsistencyError("ghost recursion: coefficient %d not divisible by %d" % (c, divisor))
        quotient[monom] = q
    return R.from_dict(quotient)


@functools.lru_cache(maxsize=None)
def compute_universal_polys(params):
    """Universal Witt polynomials of ``W_l`` for the prime ``p``, cached per params"""
    p, l = params
    names = ["X%d" % i for i in range(l)] + ["Y%d" % i for i in range(l)]
    R, *gens = polynomial_ring(names, ZZ)
    xs, ys = gens[:l], gens[l:]

    def ghost(values, n):
        return sum((p ** j * values[j] ** (p ** (n - j)) for j in range(n + 1)), R.zero)

    def lower_terms(polys, n):
        return sum((p ** j * polys[j] ** (p ** (n - j)) for j in range(n)), R.zero)

    sums, products, negations = [], [], []
    for n in range(l):
        sums.append(_exact_div(ghost(xs, n) + ghost(ys, n) - lower_terms(sums, n), p ** n, R))
        products.append(_exact_div(ghost(xs, n) * ghost(ys, n) - lower_terms(products, n), p ** n, R))
        negations.append(_exact_div(-ghost(xs, n) - lower_terms(negations, n), p ** n, R))

    logger.debug(
        "[witt|universal] p=%d l=%d: %s terms in S, %s terms in M",
        p, l, [len(s) for s in sums], [len(m) for m in products]
    )
    return UniversalWittPolys(params, gens, sums, products, negations)


def _evaluate(ring, terms, values):
    """Evaluates a term list at ``values`` (coordinates of X then of Y)"""
    powers = {}
    total = ring.zero
    for exponents, c in terms:
        term = None
        for k, e in enumerate(exponents):
            if e == 0:
                continue
            key = (k, e)
            if key not in powers:
                powers[key] = ring.pow(values[k], e)
            factor = powers[key]
            if ring.is_zero(factor):
                term = ring.zero
                break
            term = factor if term is None else ring.mul(term, factor)
        if term is None:
            term = ring.one
        elif ring.is_zero(term):
            continue
        if c != 1:
            term = ring.mul(ring.from_int(c), term)
        total = ring.add(total, term)
    return total


class WittVector(object):
    """Element ``(a_0, ..., a_{l-1})`` of ``W_l(ring)``"""

    __slots__ = ("ring", "params", "coords")

    def __init__(self, ring, params, coords):
        coords = tuple(coords)
        if len(coords) != params.l:
            raise ParameterError("expected %d coordinates, got %d" % (params.l, len(coords)))
        for c in coords:
            if not ring.contains(c):
                raise ParameterError("coordinate %r does not belong to %r" % (c, ring))
        self.ring = ring
        self.params = params
        self.coords = coords

    @classmethod
    def zero(cls, ring, params):
        return cls(ring, params, [ring.zero] * params.l)

    @classmethod
    def one(cls, ring, params):
        return cls.teichmuller(ring, params, ring.one)

    @classmethod
    def teichmuller(cls, ring, params, a):
        """The multiplicative representative ``(a, 0, ..., 0)``"""
        return cls(ring, params, [a] + [ring.zero] * (params.l - 1))

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def _check(self, other):
        if not isinstance(other, WittVector):
            raise ParameterError("cannot combine a Witt vector with %r" % (other,))
        if other.params != self.params:
            raise ParameterError("Witt vectors with parameters %s and %s" % (self.params, other.params))
        if other.ring != self.ring:
            raise ParameterError("Witt vectors over %r and %r" % (self.ring, other.ring))

    def _apply(self, kind, other):
        polys = compute_universal_polys(self.params)
        values = self.coords + (other.coords if other is not None else self.coords)
        characteristic = self.ring.characteristic
        return WittVector(
            self.ring,
            self.params,
            [_evaluate(self.ring, polys.terms(kind, i, characteristic), values) for i in range(self.params.l)]
        )

    def __add__(self, other):
        self._check(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        return self._apply("add", other)

    def __neg__(self):
        return self._apply("neg", None)

    def __sub__(self, other):
        self._check(other)
        if other.is_zero():
            return self
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        return self._apply("mul", other)

    def __eq__(self, other):
        if not isinstance(other, WittVector):
            return NotImplemented
        return self._key() == other._key()

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._key())

    def _key(self):
        return (self.params, self.ring, self.coords)

    def is_zero(self):
        return all(self.ring.is_zero(c) for c in self.coords)

    def verschiebung(self, k=1):
        """``V^k``: shifts ``k`` zeros in"""
        l = self.params.l
        if not 0 <= k <= l:
            raise ParameterError("Verschiebung power %d outside of 0..%d" % (k, l))
        return WittVector(self.ring, self.params, [self.ring.zero] * k + list(self.coords[:l - k]))

    def frobenius(self):
        """``F``: p-th power of every coordinate"""
        p = self.params.p
        return WittVector(self.ring, self.params, [self.ring.pow(c, p) for c in self.coords])

    def times_int(self, n):
        """The Z-module action ``n * self``"""
        if n < 0:
            return (-self).times_int(-n)
        result = WittVector.zero(self.ring, self.params)
        base = self
        while n:
            if n & 1:
                result = result + base
            n >>= 1
            if n:
                base = base + base
        return result

    def ghost_components(self):
        """``w_i = sum_{j<=i} p^j a_j^{p^{i-j}}``, integer coefficient rings only"""
        if self.ring.characteristic != 0:
            raise ParameterError("ghost components need a characteristic 0 ring, not %r" % self.ring)
        p = self.params.p
        return tuple(
            sum(p ** j * self.coords[j] ** (p ** (i - j)) for j in range(i + 1))
            for i in range(self.params.l)
        )

    def map_coefficients(self, fn, ring):
        """Base change along the ring map ``fn`` into ``ring``"""
        return WittVector(ring, self.params, [fn(c) for c in self.coords])

    def __repr__(self):
        return "WittVector(%s)" % ", ".join(repr(c) for c in self.coords)

    def __str__(self):
        fmt = getattr(self.ring, "format", str)
        return "(%s)" % ",".join(fmt(c) for c in self.coords)
