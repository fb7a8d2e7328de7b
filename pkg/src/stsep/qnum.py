"""Numbers of the form a + b*sqrt(d) with rational a, b, d.

Circle intersections produce coordinates in a quadratic extension of the
rationals.  Every predicate we need is a polynomial in such coordinates with a
single radicand, so sign evaluation stays exact.
"""
from fractions import Fraction
from math import isqrt


def _rational_sqrt(q: Fraction):
    """Exact square root of q if it is a rational square, else None."""
    if q < 0:
        return None
    n, m = q.numerator, q.denominator
    rn, rm = isqrt(n), isqrt(m)
    if rn * rn == n and rm * rm == m:
        return Fraction(rn, rm)
    return None


def _sign(x) -> int:
    return (x > 0) - (x < 0)


class QNum:
    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=0):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = Fraction(d)
        if self.d < 0:
            raise ValueError("negative radicand")

    @staticmethod
    def make(a, b, d):
        """Build a + b*sqrt(d), collapsing to a Fraction when possible."""
        a, b, d = Fraction(a), Fraction(b), Fraction(d)
        if b == 0 or d == 0:
            return a
        r = _rational_sqrt(d)
        if r is not None:
            return a + b * r
        return QNum(a, b, d)

    @staticmethod
    def sqrt(d):
        return QNum.make(0, 1, d)

    def _coerce(self, other):
        if isinstance(other, QNum):
            if other.d != self.d:
                raise ValueError("mixed radicands")
            return other.a, other.b
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QNum.make(self.a + o[0], self.b + o[1], self.d)

    __radd__ = __add__

    def __neg__(self):
        return QNum.make(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QNum.make(self.a - o[0], self.b - o[1], self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QNum.make(o[0] - self.a, o[1] - self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a2, b2 = o
        return QNum.make(self.a * a2 + self.b * b2 * self.d,
                         self.a * b2 + self.b * a2, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QNum):
            if other.d != self.d:
                raise ValueError("mixed radicands")
            # multiply by the conjugate
            den = other.a * other.a - other.b * other.b * other.d
            num = self * QNum.make(other.a, -other.b, other.d)
            return num * Fraction(1) / den
        other = Fraction(other)
        return QNum.make(self.a / other, self.b / other, self.d)

    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 d
        diff = self.a * self.a - self.b * self.b * self.d
        return sa * _sign(diff)

    def __eq__(self, other):
        if isinstance(other, (QNum, int, Fraction)):
            return sign(self - other) == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __lt__(self, other):
        return sign(self - other) < 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * float(self.d) ** 0.5

    def __repr__(self):
        return f"QNum({self.a}, {self.b}, {self.d})"


def sign(x) -> int:
    """Exact sign of a Fraction, int or QNum."""
    if isinstance(x, QNum):
        return x.sign()
    return _sign(x)
