"""Input grammar of the command line.

* ring parameters ``p,l,m``;
* functions over ``x`` (and ``y`` on elliptic curves), the generator of
  F_q being ``g``;
* Witt vectors ``(f_0, ..., f_{l-1})``;
* polynomials over Galois rings in ``T``, coefficients being integers mapped
  modulo ``p^l``, the generator ``g`` of the ring or digit lists ``[c_0,c_1,...]``;
* curves ``P1`` or ``E:a1,a2,a3,a4,a6``.

Expressions are read with sympy and evaluated with the arithmetic of the
target ring, any other construct raises :class:`ExpressionSyntaxError`.
"""

import logging
import re

import sympy
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from ..curves.elliptic import EllipticCurveModel, get_elliptic_function_field
from ..curves.projective_line import get_rational_function_field
from ..exceptions import ExpressionSyntaxError, ParameterError
from ..rings.finite_fields import get_field
from ..rings.polynomials import Polynomial, PolynomialRing
from ..rings.witt import WittParams, WittVector

# logger for this file
logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (convert_xor,)

_DIGIT_LIST = re.compile(r"\[([^\[\]]*)\]")
_CURVE = re.compile(r"^\s*[Ee]\s*[:(]\s*([^)]*?)\s*\)?\s*$")


def parse_ring(text):
    """``"p,l,m"`` to a tuple of integers"""
    try:
        p, l, m = [int(part) for part in text.split(",")]
    except ValueError:
        raise ExpressionSyntaxError(text, "expected three integers p,l,m")
    WittParams(p, l)
    if m < 1:
        raise ParameterError("the residue degree m must be positive, got %d" % m)
    return p, l, m


def parse_int_list(text):
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ExpressionSyntaxError(text, "expected comma separated integers")


def _parse(text, names):
    local = {name: sympy.Symbol(name) for name in names}
    try:
        return parse_expr(text, local_dict=local, transformations=TRANSFORMATIONS)
    except Exception as error:
        raise ExpressionSyntaxError(text, str(error) or type(error).__name__)


def _evaluate(expr, text, ring, symbols, inverse):
    """Evaluates the sympy expression ``expr`` in ``ring``"""
    def walk(node):
        if node.is_Symbol:
            try:
                return symbols[node.name]
            except KeyError:
                raise ExpressionSyntaxError(text, "unknown name %r" % node.name)
        if node.is_Integer:
            return ring.from_int(int(node))
        if node.is_Rational:
            return ring.mul(ring.from_int(int(node.p)), inverse(ring.from_int(int(node.q))))
        if node.is_Add or node.is_Mul:
            combine = ring.add if node.is_Add else ring.mul
            values = [walk(arg) for arg in node.args]
            result = values[0]
            for value in values[1:]:
                result = combine(result, value)
            return result
        if node.is_Pow:
            base, exponent = node.args
            if not exponent.is_Integer:
                raise ExpressionSyntaxError(text, "non integral exponent %s" % exponent)
            n = int(exponent)
            value = walk(base)
            if n < 0:
                value, n = inverse(value), -n
            return ring.pow(value, n)
        raise ExpressionSyntaxError(text, "unsupported construct %s" % node)

    return walk(expr)


def _field_inverse(field):
    def inverse(a):
        if field.is_zero(a):
            raise ParameterError("division by zero in %r" % field)
        return field.inv(a)
    return inverse


def parse_field_element(text, field):
    """An element of F_q written with integers and the generator ``g``"""
    expr = _parse(text, ["g"])
    return _evaluate(expr, text, field, {"g": field.gen}, _field_inverse(field))


def _function_inverse(a):
    if a.is_zero():
        raise ParameterError("division by the zero function")
    return a.inverse()


def _function_symbols(descriptor):
    symbols = {"x": descriptor.x, "g": descriptor.constant(descriptor.field.gen)}
    if descriptor.genus == 1:
        symbols["y"] = descriptor.y
    return symbols


def parse_function(text, descriptor):
    """A function of the curve ``descriptor``, written in ``x`` (and ``y``)"""
    symbols = _function_symbols(descriptor)
    expr = _parse(text, list(symbols))
    return _evaluate(expr, text, descriptor, symbols, _function_inverse)


def _components(text):
    stripped = text.strip()
    if not (stripped.startswith("(") and stripped.endswith(")")):
        raise ExpressionSyntaxError(text, "a Witt vector is written (f_0, ..., f_{l-1})")
    depth = 0
    parts, current = [], []
    for char in stripped[1:-1]:
        if char == "," and depth == 0:
            parts.append("".join(current))
            current = []
            continue
        depth += {"(": 1, "[": 1, ")": -1, "]": -1}.get(char, 0)
        current.append(char)
    parts.append("".join(current))
    if any(not part.strip() for part in parts):
        raise ExpressionSyntaxError(text, "empty coordinate")
    return [part.strip() for part in parts]


def parse_witt_function(text, descriptor, l):
    """A Witt vector of functions of ``descriptor`` with ``l`` coordinates"""
    parts = _components(text)
    if len(parts) != l:
        raise ParameterError("expected %d coordinates in %s, got %d" % (l, text, len(parts)))
    params = WittParams(descriptor.field.p, l)
    return WittVector(descriptor, params, [parse_function(part, descriptor) for part in parts])


def parse_witt_vector(text, ring, params):
    """A Witt vector over a finite field or over the integers (``ring`` is then ``INTEGERS``)"""
    parts = _components(text)
    if len(parts) != params.l:
        raise ParameterError("expected %d coordinates in %s, got %d" % (params.l, text, len(parts)))
    if hasattr(ring, "gen"):
        coords = [parse_field_element(part, ring) for part in parts]
    else:
        coords = []
        for part in parts:
            expr = _parse(part, [])
            if not expr.is_Integer:
                raise ExpressionSyntaxError(part, "expected an integer")
            coords.append(int(expr))
    return WittVector(ring, params, coords)


def parse_gr_polynomial(text, ring):
    """A polynomial in ``T`` over the Galois ring ``ring``"""
    symbols = {"T": Polynomial.x(ring), "g": Polynomial.constant(ring, ring.gen)}
    n = ring.characteristic

    def digit_list(match):
        name = "c%d" % len(symbols)
        digits = parse_int_list(match.group(1))
        if len(digits) > ring.m:
            raise ExpressionSyntaxError(text, "digit list longer than %d" % ring.m)
        digits += [0] * (ring.m - len(digits))
        symbols[name] = Polynomial.constant(ring, ring.from_coefficients([c % n for c in digits]))
        return name

    expression = _DIGIT_LIST.sub(digit_list, text)
    expr = _parse(expression, list(symbols))

    def inverse(a):
        if not a.is_constant() or ring.reduce(a.coefficient(0)) == 0:
            raise ParameterError("only units of %r can divide" % ring)
        unit_order = ring.p ** ((ring.l - 1) * ring.m) * (ring.field.q - 1)
        return Polynomial.constant(ring, ring.pow(a.coefficient(0), unit_order - 1))

    return _evaluate(expr, text, PolynomialRing(ring), symbols, inverse)


def parse_field_name(text, p):
    """``f<q>`` to the field with ``q`` elements, ``z`` to ``None`` (the integers)"""
    text = text.strip().lower()
    if text == "z":
        return None
    match = re.match(r"^f(\d+)$", text)
    if not match:
        raise ExpressionSyntaxError(text, "expected f<q> or z")
    q = int(match.group(1))
    m = 1
    power = p
    while power < q:
        power *= p
        m += 1
    if power != q:
        raise ParameterError("%d is not a power of %d" % (q, p))
    return get_field(p, m)


def parse_curve(text, field):
    """``P1`` or ``E:a1,a2,a3,a4,a6`` over ``field``"""
    if text is None or text.strip().upper() in ("", "P1"):
        return get_rational_function_field(field)
    match = _CURVE.match(text)
    if not match:
        raise ExpressionSyntaxError(text, "expected P1 or E:a1,a2,a3,a4,a6")
    coefficients = [parse_field_element(part, field) for part in match.group(1).split(",")]
    if len(coefficients) != 5:
        raise ExpressionSyntaxError(text, "a Weierstrass model has 5 coefficients")
    return get_elliptic_function_field(EllipticCurveModel(field, *coefficients))

