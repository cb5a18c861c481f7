"""Coefficient rings of Witt vectors.

A coefficient ring is a descriptor object exposing the ring operations on its
elements. Elements themselves are opaque to the Witt arithmetic: finite field
elements are plain integers, polynomials and functions are objects with
operator overloads. Every ring provides

* ``characteristic``, ``zero`` and ``one``
* ``add``, ``sub``, ``neg``, ``mul``, ``pow`` and ``from_int``
* ``is_zero`` and ``equal``
"""


class CoefficientRing(object):
    """Base class of coefficient ring descriptors"""

    characteristic = 0

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def pow(self, a, n):
        """Square and multiply, ``n >= 0``"""
        result = self.one
        base = a
        while n > 0:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def is_zero(self, a):
        return self.equal(a, self.zero)

    def equal(self, a, b):
        return a == b

    def contains(self, a):
        """Loose membership test used by the Witt vector constructors"""
        return True


class OperatorRing(CoefficientRing):
    """Coefficient ring whose elements carry their own operators"""

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def pow(self, a, n):
        return a ** n

    def is_zero(self, a):
        return a.is_zero()


class IntegerRing(CoefficientRing):
    """The integers, characteristic 0.

    Only used as the ghost-component oracle of the Witt arithmetic.
    """

    characteristic = 0

    def from_int(self, n):
        return int(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def pow(self, a, n):
        return a ** n

    def contains(self, a):
        return isinstance(a, int)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("Z")

    def __repr__(self):
        return "IntegerRing()"


INTEGERS = IntegerRing()
