"""Residue functionals and the moment conditions for interpolation.

All functionals are normalized by ``(2 pi i)^n``, so they live over Q(i).
A one-variable residue of ``g / f`` becomes a finite combination of Taylor
coefficients of ``g`` at the roots of ``f``; for a separated complete
intersection the multivariate residue is the tensor product of these.
"""

from dataclasses import dataclass
from math import comb

from .ideal import UnfactoredError
from .matrix import Echelon, dot
from .poly import Poly, format_monomial, monomials_of_degree, shift_expansion, taylor_coefficient
from .scalar import ONE, ZERO, Scalar


def _point_key(point):
    return tuple(c.sort_key() for c in reversed(point))


class PointFunctional:
    """``p -> sum coeff * taylor_coefficient(p, point, alpha)`` over finitely many terms."""

    def __init__(self, terms):
        merged = {}
        for point, alpha, c in terms:
            k = (tuple(Scalar.coerce(x) for x in point), tuple(alpha))
            merged[k] = merged.get(k, ZERO) + Scalar.coerce(c)
        items = [(p, a, c) for (p, a), c in merged.items() if c]
        items.sort(key=lambda t: (_point_key(t[0]), sum(t[1]), t[1]))
        self.terms = tuple(items)

    def __call__(self, p):
        total = ZERO
        for point, alpha, c in self.terms:
            t = taylor_coefficient(p, point, alpha)
            if t:
                total = total + c * t
        return total

    def __eq__(self, other):
        return isinstance(other, PointFunctional) and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        return PointFunctional(self.terms + other.terms)

    def scale(self, c):
        c = Scalar.coerce(c)
        return PointFunctional((p, a, x * c) for p, a, x in self.terms)

    def __neg__(self):
        return self.scale(-1)

    def support(self):
        out = []
        for p, _, _ in self.terms:
            if p not in out:
                out.append(p)
        return out

    def is_evaluation_only(self):
        return all(not any(a) for _, a, _ in self.terms)

    def __repr__(self):
        return f"PointFunctional({list(self.terms)})"


def _merge_roots(factors):
    merged = {}
    for r, m in factors:
        r = Scalar.coerce(r)
        if m < 1:
            raise ValueError("multiplicities must be >= 1")
        merged[r] = merged.get(r, 0) + m
    return sorted(merged.items(), key=lambda t: t[0].sort_key())


def _inverse_power_series(c, m, order):
    """Coefficients of ``(c + t)^(-m)`` in t up to ``t^order``."""
    ci = c.inverse()
    base = ci**m
    out = []
    cpow = ONE
    for b in range(order + 1):
        coef = base * cpow * comb(m + b - 1, b)
        out.append(-coef if b % 2 else coef)
        cpow = cpow * ci
    return out


def _series_mul(a, b, order):
    out = [ZERO] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: order + 1 - i]):
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def univariate_residue(factors, leading_coefficient=ONE):
    """Sum of residues of ``g / f`` for ``f = lc * prod (x - p_j)^m_j``.

    Returned as a one-variable PointFunctional acting on ``g``; repeated roots
    are merged first.
    """
    roots = _merge_roots(factors)
    lc_inv = Scalar.coerce(leading_coefficient).inverse()
    terms = []
    for j, (p, m) in enumerate(roots):
        series = [ONE] + [ZERO] * (m - 1)
        for k, (q, mk) in enumerate(roots):
            if k != j:
                series = _series_mul(series, _inverse_power_series(p - q, mk, m - 1), m - 1)
        for a in range(m):
            c = series[m - 1 - a]
            if c:
                terms.append(((p,), (a,), c * lc_inv))
    return PointFunctional(terms)


def tensor_ch(ci):
    """Root-based residue functional of a separated complete intersection."""
    if ci.roots is None:
        raise UnfactoredError("unfactored member: root data is required")
    acc = [((), (), ONE)]
    for j, rs in enumerate(ci.roots):
        uni = univariate_residue(rs, ci.leading_coefficients[j])
        acc = [
            (p + q, a + b, c * d)
            for p, a, c in acc
            for q, b, d in uni.terms
        ]
    return PointFunctional(acc)


def global_residue(g, ci):
    """Root-free residue: top coefficient of the remainder of ``g`` modulo ``J``.

    Precisely the coefficient of ``x_1^(d_1-1)...x_n^(d_n-1)`` in the normal
    form of ``g``, divided by the product of leading coefficients.
    """
    total = ZERO
    for e, c in g.terms.items():
        w = ci.residue_weight(e)
        if w:
            total = total + c * w
    return total


@dataclass(frozen=True, eq=False)
class MomentFunctional:
    """One moment condition ``g -> Res_J(v * h * g)`` at target degree ``d``.

    ``coords`` are its values on the standard monomials of X, so that for
    ``g`` with coordinates ``c`` the condition reads ``dot(coords, c) = 0``.
    """

    v: object  # ColonElement
    ell: int
    h: tuple  # exponents in the homogeneous ring (homogenizing variable last)
    d: int
    coords: tuple
    multiplier: Poly  # affine v * h
    ci: object

    @property
    def v_degree(self):
        return self.v.degree

    def h_poly(self):
        return self.v.form.ring.monomial(self.h)

    def h_label(self):
        return format_monomial(self.v.form.ring.names, self.h)

    def __call__(self, g):
        """Evaluate on a polynomial representative (root-free)."""
        return global_residue(self.multiplier * g, self.ci)

    def on_coordinates(self, c):
        return dot(self.coords, c)


def section_monomials(hring, k):
    """Monomials of degree k in the homogeneous ring, homogenizing variable first."""
    n = hring.nvars - 1
    mons = list(monomials_of_degree(hring.nvars, k))
    mons.sort(key=lambda e: (e[n],) + e[:n], reverse=True)
    return mons


def _shifted(X, v, a, memo):
    """Coordinates of ``g -> Res_J(v * x^a * g)`` via multiplication matrices."""
    got = memo.get(a)
    if got is not None:
        return got
    if not any(a):
        vec = X.base_functional(v)
    else:
        j = next(i for i, x in enumerate(a) if x)
        prev = list(a)
        prev[j] -= 1
        lam = _shifted(X, v, tuple(prev), memo)
        M = X.ideal.multiplication_matrices[j]
        n = len(lam)
        vec = []
        for k in range(n):
            s = ZERO
            for l in range(n):
                x = M.rows[l][k]
                if x and lam[l]:
                    s = s + x * lam[l]
            vec.append(s)
    memo[a] = vec
    return vec


def moment_functionals(X, d, exhaustive=False):
    """Independent moment conditions for interpolation at degree <= d.

    Candidates ``(v, h)`` are visited by increasing colon degree ``e``, colon
    basis order, then test section order; a candidate is kept when its
    coordinate vector is independent of those kept before.  Every product
    ``v * h`` is a colon element of the top degree ``sum(d_j) - n - 1 - d``,
    so the final rank is known up front and enumeration stops once reached
    (``exhaustive=True`` disables that shortcut).
    """
    if d < 0:
        raise ValueError("target degree must be non-negative")
    if X.empty:
        return []
    ci = X.ci
    n = X.n
    D = ci.total_degree
    top = D - n - 1 - d
    if top < 0:
        return []
    target = None if exhaustive else X.colon_rank(top)
    if target == 0:
        return []
    ech = Echelon(X.length)
    out = []
    hring = ci.hring
    for e in range(top + 1):
        k = top - e
        ell = D - e
        sections = section_monomials(hring, k)
        for v in X.colon(e):
            memo = {}
            for h in sections:
                vec = _shifted(X, v, h[:n], memo)
                if ech.add(vec):
                    mult = v.affine.mul_term(h[:n])
                    out.append(MomentFunctional(v, ell, h, d, tuple(vec), mult, ci))
                    if target is not None and len(out) == target:
                        return out
    return out


def expand_as_points(m, ci=None):
    """Point/derivative expansion of a moment functional (needs root data)."""
    ci = ci or m.ci
    base = tensor_ch(ci)
    w = m.multiplier
    shifts = {}
    terms = []
    for point, alpha, c in base.terms:
        sh = shifts.get(point)
        if sh is None:
            sh = shift_expansion(w, point)
            shifts[point] = sh
        for beta, wc in sh.items():
            if all(b <= a for a, b in zip(alpha, beta)):
                terms.append((point, tuple(a - b for a, b in zip(alpha, beta)), c * wc))
    return PointFunctional(terms)
