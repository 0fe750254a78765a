"""Sparse multivariate polynomials over Q(i).

A polynomial is a map from exponent tuples to nonzero ``Scalar`` coefficients.
Homogeneous rings keep the homogenizing variable *last*, so that graded
reverse lexicographic order treats it as the smallest variable.
"""

from math import comb

from .scalar import ONE, ZERO, Scalar


class DegreeError(ValueError):
    pass


def grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def lex_key(e):
    return tuple(e)


ORDERS = {"grevlex": grevlex_key, "lex": lex_key}


def order_key(order):
    try:
        return ORDERS[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}") from None


class Ring:
    """Variable names plus an affine/homogeneous flag.

    In a homogeneous ring the last name is the homogenizing variable.
    """

    __slots__ = ("names", "homogeneous")

    def __init__(self, names, homogeneous=False):
        self.names = tuple(names)
        self.homogeneous = homogeneous
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @property
    def nvars(self):
        return len(self.names)

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.names == other.names
            and self.homogeneous == other.homogeneous
        )

    def __hash__(self):
        return hash((self.names, self.homogeneous))

    def __repr__(self):
        kind = "homogeneous" if self.homogeneous else "affine"
        return f"Ring({', '.join(self.names)}; {kind})"

    def zero(self):
        return Poly(self, {})

    def one(self):
        return Poly(self, {(0,) * self.nvars: ONE})

    def const(self, c):
        c = Scalar.coerce(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, j):
        e = [0] * self.nvars
        e[j] = 1
        return Poly(self, {tuple(e): ONE})

    def gens(self):
        return [self.var(j) for j in range(self.nvars)]

    def monomial(self, exps, coeff=ONE):
        coeff = Scalar.coerce(coeff)
        return Poly(self, {tuple(exps): coeff} if coeff else {})

    def homogenized(self, name=None):
        """The homogeneous ring over these affine names plus one extra variable."""
        if self.homogeneous:
            raise ValueError("ring is already homogeneous")
        if name is None:
            name = "z0"
            k = 0
            while name in self.names:
                k += 1
                name = "z0" + "_" * k
        return Ring(self.names + (name,), homogeneous=True)

    def dehomogenized(self):
        if not self.homogeneous:
            raise ValueError("ring is not homogeneous")
        return Ring(self.names[:-1])


def monomials_of_degree(nvars, k):
    """All exponent tuples of total degree exactly ``k``."""
    if nvars == 0:
        if k == 0:
            yield ()
        return
    if nvars == 1:
        yield (k,)
        return
    for first in range(k, -1, -1):
        for rest in monomials_of_degree(nvars - 1, k - first):
            yield (first,) + rest


def monomials_up_to(nvars, d, order="grevlex"):
    """All exponent tuples of total degree <= d, ascending in ``order``."""
    out = []
    for k in range(d + 1):
        out.extend(monomials_of_degree(nvars, k))
    out.sort(key=order_key(order))
    return out


def format_monomial(names, e):
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


class Poly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms=None):
        self.ring = ring
        if terms:
            self.terms = {e: c for e, c in terms.items() if c}
        else:
            self.terms = {}

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    # structure ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.ring.nvars, ZERO)

    def coeff(self, e):
        return self.terms.get(tuple(e), ZERO)

    def leading(self, order="grevlex"):
        """(exponents, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        key = order_key(order)
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def sorted_terms(self, order="grevlex", descending=True):
        return sorted(self.terms.items(), key=lambda t: order_key(order)(t[0]), reverse=descending)

    def monic(self, order="grevlex"):
        if not self.terms:
            return self
        _, c = self.leading(order)
        return self * c.inverse()

    def variables_used(self):
        used = set()
        for e in self.terms:
            for j, k in enumerate(e):
                if k:
                    used.add(j)
        return used

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Poly._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = Scalar.coerce(c)
        if not c:
            return Poly._raw(self.ring, {})
        return Poly._raw(self.ring, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def mul_term(self, exps, coeff=ONE):
        coeff = Scalar.coerce(coeff)
        if not coeff:
            return Poly._raw(self.ring, {})
        return Poly._raw(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): c * coeff for e, c in self.terms.items()},
        )

    def __truediv__(self, c):
        if isinstance(c, Poly):
            if not c.is_constant() or c.is_zero():
                raise ZeroDivisionError("division only by nonzero constants")
            c = c.constant_value()
        return self.scale(Scalar.coerce(c).inverse())

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def evaluate(self, point):
        point = [Scalar.coerce(x) for x in point]
        total = ZERO
        for e, c in self.terms.items():
            t = c
            for x, k in zip(point, e):
                if k:
                    t = t * x**k
            total = total + t
        return total

    def derivative(self, j):
        terms = {}
        for e, c in self.terms.items():
            if e[j]:
                f = list(e)
                f[j] -= 1
                terms[tuple(f)] = c * e[j]
        return Poly._raw(self.ring, terms)

    # display ------------------------------------------------------------

    def format(self, order="grevlex"):
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms(order):
            mono = format_monomial(self.ring.names, e)
            neg = False
            if c.is_real() and c.re < 0:
                neg, c = True, -c
            elif not c.re and c.im < 0:
                neg, c = True, -c
            if mono == "1":
                body = f"({c})" if c.needs_parens() else str(c)
            elif c == 1:
                body = mono
            else:
                cs = f"({c})" if c.needs_parens() else str(c)
                body = f"{cs}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({self.format()})"


def homogenize(p, d, hring=None):
    """The degree-d form ``z0^d * p(z1/z0, ..., zn/z0)``."""
    if p.ring.homogeneous:
        raise ValueError("homogenize expects an affine polynomial")
    if d < p.degree():
        raise DegreeError(f"cannot {d}-homogenize a polynomial of degree {p.degree()}")
    if hring is None:
        hring = p.ring.homogenized()
    terms = {e + (d - sum(e),): c for e, c in p.terms.items()}
    return Poly._raw(hring, terms)


def dehomogenize(P, ring=None):
    """Set the homogenizing variable to 1."""
    if not P.ring.homogeneous:
        raise ValueError("dehomogenize expects a homogeneous-ring polynomial")
    if ring is None:
        ring = P.ring.dehomogenized()
    terms = {}
    for e, c in P.terms.items():
        a = e[:-1]
        s = terms.get(a)
        terms[a] = c if s is None else s + c
    return Poly(ring, terms)


def monomial_taylor(e, point, alpha):
    """Taylor coefficient of the monomial ``x^e`` at ``point`` for multi-index ``alpha``."""
    t = ONE
    for k, a, x in zip(e, alpha, point):
        if a > k:
            return ZERO
        if k - a:
            if not x:
                return ZERO
            t = t * (x ** (k - a)) * comb(k, a)
        # k == a contributes factor 1
    return t


def taylor_coefficient(p, point, alpha):
    """``(d^alpha p)(point) / alpha!``: the coefficient of ``(x - point)^alpha``."""
    point = [Scalar.coerce(x) for x in point]
    if len(point) != p.ring.nvars or len(alpha) != p.ring.nvars:
        raise ValueError("point/multi-index length must match the number of variables")
    total = ZERO
    for e, c in p.terms.items():
        t = monomial_taylor(e, point, alpha)
        if t:
            total = total + c * t
    return total


def shift_expansion(p, point):
    """Coefficients of ``p`` in powers of ``(x - point)``, as a dict alpha -> Scalar."""
    point = [Scalar.coerce(x) for x in point]
    out = {}
    for e, c in p.terms.items():
        ranges = [range(k + 1) for k in e]
        for alpha in _product(ranges):
            t = monomial_taylor(e, point, alpha)
            if t:
                s = out.get(alpha)
                out[alpha] = c * t if s is None else s + c * t
    return {a: c for a, c in out.items() if c}


def _product(ranges):
    from itertools import product

    return product(*ranges)
