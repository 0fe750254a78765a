"""Exact Gaussian rationals ``a + b*i`` with ``a, b`` in Q."""

from fractions import Fraction

try:  # GMP rationals are an order of magnitude faster than Fraction
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

_QTYPE = type(_Q(0))
RATIONAL = (int, Fraction, _QTYPE)


def _frac(x):
    if type(x) is _QTYPE:
        return x
    return _Q(x)


def format_fraction(q):
    """Render a rational as ``p`` or ``p/q``, never as a decimal."""
    if q.denominator == 1:
        return str(int(q.numerator))
    return f"{int(q.numerator)}/{int(q.denominator)}"


class Scalar:
    """An element of Q(i). Treated as immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @staticmethod
    def coerce(x):
        if type(x) is Scalar:
            return x
        if isinstance(x, RATIONAL):
            return Scalar(x)
        if isinstance(x, complex):
            raise TypeError("floating-point complex values are not exact")
        if isinstance(x, str):
            from .parsing import parse_scalar

            return parse_scalar(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Scalar")

    # arithmetic --------------------------------------------------------

    def __add__(self, other):
        if type(other) is not Scalar:
            if isinstance(other, RATIONAL):
                return Scalar(self.re + other, self.im)
            return NotImplemented
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not Scalar:
            if isinstance(other, RATIONAL):
                return Scalar(self.re - other, self.im)
            return NotImplemented
        return Scalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        if isinstance(other, RATIONAL):
            return Scalar(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if type(other) is not Scalar:
            if isinstance(other, RATIONAL):
                return Scalar(self.re * other, self.im * other)
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return Scalar(a * c)
            return Scalar(a * c, a * d)
        if not d:
            return Scalar(a * c, b * c)
        return Scalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ZeroDivisionError("Scalar division by zero")
            return Scalar(1 / a)
        n = a * a + b * b
        return Scalar(a / n, -b / n)

    def __truediv__(self, other):
        if type(other) is not Scalar:
            if isinstance(other, RATIONAL):
                if not other:
                    raise ZeroDivisionError("Scalar division by zero")
                return Scalar(self.re / other, self.im / other)
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if isinstance(other, RATIONAL):
            return self.inverse() * other
        return NotImplemented

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        return Scalar(self.re, -self.im)

    # comparison --------------------------------------------------------

    def __eq__(self, other):
        if type(other) is Scalar:
            return self.re == other.re and self.im == other.im
        if isinstance(other, RATIONAL):
            return not self.im and self.re == other
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self):
        return not self.im

    def sort_key(self):
        return (self.re, self.im)

    # display -----------------------------------------------------------

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if not self.im:
            return format_fraction(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = format_fraction(self.im) + "*i"
        if not self.re:
            return imag
        sep = "" if imag.startswith("-") else "+"
        return format_fraction(self.re) + sep + imag

    def needs_parens(self):
        """True when the printed form is a sum and must be bracketed as a factor."""
        return bool(self.re) and bool(self.im)


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def scalar(x):
    return Scalar.coerce(x)
