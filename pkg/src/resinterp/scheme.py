"""Zero-dimensional subschemes of affine space with their cached algebraic data."""

from functools import cached_property
from itertools import product

from .ideal import (
    ContainmentError,
    Ideal,
    QuotientBasis,
    SeparatedCI,
    UnfactoredError,
    ZeroDimensionalError,
    annihilator_generators,
    colon_in_degree,
    enclosing_ci,
    homogenized_generators,
    ideal_from_functionals,
    ideal_of_points,
)
from .matrix import Echelon, Matrix
from .poly import monomial_taylor
from .scalar import ONE, ZERO, Scalar


def _colex_key(point):
    return tuple(c.sort_key() for c in reversed(point))


def roots_from_candidates(f, j, candidates):
    """Factor the univariate member ``f`` (in variable j) over the given candidate roots.

    Returns ``[(root, multiplicity), ...]`` or None if the candidates do not
    account for the full degree.
    """
    n = f.ring.nvars
    d = f.degree()
    coeffs = [f.coeff(tuple(k if i == j else 0 for i in range(n))) for k in range(d + 1)]
    roots = []
    for c in sorted(set(candidates), key=lambda s: s.sort_key()):
        m = 0
        while len(coeffs) > 1:
            # synthetic division by (x - c)
            q = [ZERO] * (len(coeffs) - 1)
            acc = ZERO
            for k in range(len(coeffs) - 1, 0, -1):
                acc = coeffs[k] + acc * c
                q[k - 1] = acc
            rem = coeffs[0] + acc * c
            if rem:
                break
            coeffs = q
            m += 1
        if m:
            roots.append((c, m))
    if len(coeffs) != 1:
        return None
    return roots


class Subscheme:
    """A finite scheme ``X`` in affine n-space given by its ideal.

    Holds the Gröbner data of the ideal, the quotient basis, the enclosing
    separated complete intersection ``J`` and, lazily per degree, the
    homogeneous colon spaces ``(J^h : I^h)_e / J^h_e``.
    """

    def __init__(self, ideal, ci=None, gens=None, points=None, factor=True):
        self.ideal = ideal
        self.ring = ideal.ring
        self.gens = list(gens) if gens is not None else list(ideal.gens)
        self._points = [tuple(Scalar.coerce(x) for x in p) for p in points] if points else None
        self._colon = {}
        self._base = {}
        if ideal.is_unit():
            self.empty = True
            self._ci = None
            return
        self.empty = False
        if not ideal.is_zero_dimensional():
            raise ZeroDimensionalError("ideal is not zero-dimensional")
        if ci is None:
            ci = enclosing_ci(ideal)
            if self._points and ci.roots is None:
                rs = []
                for j, f in enumerate(ci.polys):
                    r = roots_from_candidates(f, j, [p[j] for p in self._points])
                    if r is None:
                        break
                    rs.append(r)
                else:
                    ci.set_roots(rs)
        else:
            for f in ci.polys:
                if not ideal.contains(f):
                    raise ContainmentError("J not contained in I")
        if factor and ci.roots is None:
            try:
                ci.factor()
            except ImportError:
                pass
        self._ci = ci

    # constructors ------------------------------------------------------------

    @classmethod
    def from_generators(cls, gens, order="grevlex", ci=None, factor=True):
        return cls(Ideal(gens, order), ci=ci, gens=gens, factor=factor)

    @classmethod
    def from_points(cls, ring, points, order="grevlex"):
        pts = []
        for p in points:
            p = tuple(Scalar.coerce(x) for x in p)
            if p not in pts:
                pts.append(p)
        return cls(ideal_of_points(ring, pts, order), points=pts)

    @classmethod
    def from_functionals(cls, ring, functionals, order="grevlex"):
        """Scheme cut out by Taylor-coefficient functionals ``(point, alpha)``."""
        functionals = [(tuple(Scalar.coerce(x) for x in p), tuple(a)) for p, a in functionals]
        I = ideal_from_functionals(ring, functionals, order)
        X = cls(I, factor=False)
        if not X.empty:
            ci = X.ci
            rs = []
            for j, f in enumerate(ci.polys):
                r = roots_from_candidates(f, j, [p[j] for p, _ in functionals])
                rs.append(r)
            ci.set_roots(rs)
        return X

    @classmethod
    def from_nodes(cls, ring, nodes):
        """Univariate scheme defined by ``prod (x - p_j)`` over the node list."""
        if ring.nvars != 1:
            raise ValueError("node lists define univariate schemes")
        f = ring.one()
        mult = {}
        for p in nodes:
            p = Scalar.coerce(p)
            f = f * (ring.var(0) - p)
            mult[p] = mult.get(p, 0) + 1
        ci = SeparatedCI([f], roots=[sorted(mult.items(), key=lambda t: t[0].sort_key())])
        return cls(Ideal([f]), ci=ci, gens=[f])

    # basic data --------------------------------------------------------------

    @property
    def n(self):
        return self.ring.nvars

    @cached_property
    def basis(self):
        return QuotientBasis(self.ideal)

    @property
    def length(self):
        return len(self.basis)

    @property
    def ci(self):
        if self.empty:
            raise ValueError("the empty scheme has no enclosing complete intersection")
        return self._ci

    @property
    def hring(self):
        return self.ci.hring

    @cached_property
    def hgens(self):
        return homogenized_generators(self.gens, self.hring)

    def coordinates(self, p):
        return self.ideal.coordinates(p)

    def is_reduced(self):
        """True when X is a reduced set of points (requires root data)."""
        if self.empty:
            return True
        if self.ci.roots is None:
            raise UnfactoredError("root data unavailable for the enclosing complete intersection")
        return self.ci.is_reduced()

    @property
    def points(self):
        """The points of a reduced X (user order when given, else colex)."""
        if self._points is not None:
            return list(self._points)
        if self.empty:
            return []
        if not self.is_reduced():
            raise ValueError("X is not reduced; it is not determined by point values")
        pts = []
        for p in product(*[[r for r, _ in rs] for rs in self.ci.roots]):
            if all(not g.evaluate(p) for g in self.ideal.basis):
                pts.append(tuple(p))
        pts.sort(key=_colex_key)
        self._points = pts
        return list(pts)

    def support(self):
        """Distinct points of the underlying reduced set (requires root data)."""
        if self.empty:
            return []
        if self.ci.roots is None:
            raise UnfactoredError("root data unavailable for the enclosing complete intersection")
        out = []
        for p in product(*[[r for r, _ in rs] for rs in self.ci.roots]):
            # p lies on X iff every element of I vanishes there
            if all(not g.evaluate(p) for g in self.ideal.basis):
                out.append(tuple(p))
        out.sort(key=_colex_key)
        return out

    # colon data --------------------------------------------------------------

    @cached_property
    def annihilator_generators(self):
        return annihilator_generators(self.ci, self.ideal)

    def colon(self, e):
        """Canonical basis of the degree-e colon space modulo ``J^h``."""
        if e < 0:
            return []
        got = self._colon.get(e)
        if got is None:
            got = colon_in_degree(self.ci, self.annihilator_generators, e)
            self._colon[e] = got
        return got

    def colon_basis(self, e_max=None):
        if e_max is None:
            e_max = self.ci.total_degree - self.n - 1
        return {e: self.colon(e) for e in range(e_max + 1)}

    @cached_property
    def e_min(self):
        """Least degree carrying a nonzero colon class."""
        e = 0
        while not self.colon(e):
            e += 1
        return e

    def base_functional(self, v):
        """Coordinates ``Res_J(v_affine * s_k)`` over the standard monomials ``s_k``."""
        key = id(v)
        got = self._base.get(key)
        if got is not None:
            return got[1]
        ci = self.ci
        vec = []
        for s in self.basis:
            total = ZERO
            for e, c in v.affine.terms.items():
                w = ci.residue_weight(tuple(a + b for a, b in zip(e, s)))
                if w:
                    total = total + c * w
            vec.append(total)
        self._base[key] = (v, vec)
        return vec

    def colon_rank(self, e):
        ech = Echelon(self.length)
        for v in self.colon(e):
            ech.add(self.base_functional(v))
        return len(ech)

    def __repr__(self):
        if self.empty:
            return "Subscheme(empty)"
        return f"Subscheme(n={self.n}, length={self.length}, ideal={self.ideal})"


class ConversionError(ValueError):
    """A value/jet description does not match the scheme."""


class FunctionOnX:
    """An element of the quotient algebra of X.

    Exactly one of: a polynomial representative; point values (reduced X);
    jets, i.e. derivative values ``{(point, alpha): d^alpha g(point)}``.
    """

    def __init__(self, representative=None, values=None, jets=None):
        given = [x is not None for x in (representative, values, jets)]
        if sum(given) != 1:
            raise ValueError("give exactly one of representative, values, jets")
        self.representative = representative
        self.values = values
        self.jets = jets

    @classmethod
    def from_poly(cls, p):
        return cls(representative=p)

    @classmethod
    def from_values(cls, values):
        """``values`` maps points to values (or is a list aligned with ``X.points``)."""
        return cls(values=values)

    @classmethod
    def from_jets(cls, jets):
        return cls(jets=jets)

    def coordinates(self, X):
        if self.representative is not None:
            return X.coordinates(self.representative)
        if X.empty:
            return []
        if self.values is not None:
            vals = self.values
            if not isinstance(vals, dict):
                pts = X.points
                if len(pts) != len(vals):
                    raise ConversionError(f"expected {len(pts)} values, got {len(vals)}")
                vals = dict(zip(pts, vals))
            items = [((tuple(Scalar.coerce(x) for x in p), (0,) * X.n), v) for p, v in vals.items()]
        else:
            items = []
            for (p, alpha), v in self.jets.items():
                if isinstance(alpha, int):
                    alpha = (alpha,)
                items.append(((tuple(Scalar.coerce(x) for x in p), tuple(alpha)), v))
        return _solve_dual(X, items)


def _factorial(alpha):
    from math import factorial

    out = 1
    for a in alpha:
        out *= factorial(a)
    return out


def _solve_dual(X, items):
    if len(items) != X.length:
        raise ConversionError(
            f"{len(items)} values/jets given but X has length {X.length}"
        )
    rows, rhs = [], []
    for (p, alpha), v in items:
        if len(p) != X.n:
            raise ConversionError(f"point {p} has wrong dimension")
        f = _factorial(alpha)
        rows.append([monomial_taylor(s, p, alpha) * f for s in X.basis])
        rhs.append(Scalar.coerce(v))
    M = Matrix(rows, X.length)
    if M.rank() != X.length:
        raise ConversionError("value/jet data does not determine a function on X")
    return M.solve(rhs)


def point_value_functional(X, coords):
    """Rewrite a coordinate functional as weights on the values at ``X.points``."""
    pts = X.points
    V = Matrix([[s_val for s_val in (_mono_at(s, p) for s in X.basis)] for p in pts], X.length)
    mu = V.transpose().solve(list(coords))
    if mu is None:
        raise ConversionError("functional is not expressible in point values")
    return mu


def _mono_at(e, p):
    t = ONE
    for k, x in zip(e, p):
        if k:
            t = t * x**k
    return t
