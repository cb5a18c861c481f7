"""Places of the supported function fields.

Places are hashable values ordered by ``sort_key``: degree first, then kind,
then the defining data, which makes every report deterministic.
"""


class Place(object):
    """A closed point of a curve over the base field"""

    kind_order = 0

    @property
    def degree(self):
        raise NotImplementedError

    def sort_key(self):
        return (self.degree, self.kind_order, self._data_key())

    def _data_key(self):
        return ()

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __eq__(self, other):
        return type(self) is type(other) and self._data_key() == other._data_key()

    def __hash__(self):
        return hash((type(self).__name__, self._data_key()))

    def __repr__(self):
        return "%s(%s)" % (type(self).__name__, self)


class FinitePlace(Place):
    """The place of P^1 given by a monic irreducible polynomial"""

    def __init__(self, polynomial):
        self.polynomial = polynomial

    @property
    def degree(self):
        return self.polynomial.degree

    def _data_key(self):
        return self.polynomial.sort_key()

    def __str__(self):
        return "(%s)" % self.polynomial


class InfinitePlace(Place):
    """The place at infinity of P^1, local parameter ``1/x``"""

    kind_order = 1

    @property
    def degree(self):
        return 1

    def __str__(self):
        return "inf"


class OriginPlace(Place):
    """The point at infinity ``O`` of a Weierstrass model, local parameter ``x/y``"""

    kind_order = 0

    @property
    def degree(self):
        return 1

    def __str__(self):
        return "O"


class AffinePlace(Place):
    """Frobenius orbit of affine points of a Weierstrass model.

    ``points`` holds the orbit as coordinate pairs in the field ``field`` of
    degree ``deg`` over the base field, starting with the smallest point.
    """

    kind_order = 1

    def __init__(self, points, field):
        self.points = tuple(sorted(points))
        self.field = field

    @property
    def degree(self):
        return len(self.points)

    @property
    def point(self):
        return self.points[0]

    def _data_key(self):
        return (self.field.m, self.points)

    def __str__(self):
        if self.degree == 1:
            return "(%d,%d)" % self.point
        return "{%s}" % ",".join("(%d,%d)" % point for point in self.points)
