"""Gröbner bases and zero-dimensional ideal machinery.

Besides the usual Buchberger / normal form / standard monomial toolkit this
module builds the *separated complete intersection* ``J = (m_1(x_1), ...,
m_n(x_n))`` enclosing a zero-dimensional ideal ``I`` (each ``m_j`` the minimal
polynomial of ``x_j`` modulo ``I``) and computes the homogeneous colon spaces
``(J^h : I^h)_e`` modulo ``J^h``.
"""

import heapq
from fractions import Fraction
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .matrix import Matrix, SparseReducer, nullspace
from .poly import Poly, dehomogenize, format_monomial, homogenize, monomial_taylor, order_key
from .scalar import ONE, ZERO, Scalar


class ZeroDimensionalError(ValueError):
    """The ideal does not define a finite scheme."""


class ContainmentError(ValueError):
    """The enclosing complete intersection is not contained in the ideal."""


class UnfactoredError(ValueError):
    """Root data was required but a member could not be factored over Q(i)."""


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class _Reducer:
    """Division by a list of monic polynomials (term dicts) with known leads."""

    def __init__(self, key):
        self.key = key
        self.polys = []  # (lead exps, terms) with lead coefficient 1

    def add(self, lead, terms):
        self.polys.append((lead, terms))

    def remainder(self, terms):
        key = self.key
        p = dict(terms)
        r = {}
        while p:
            e = max(p, key=key)
            c = p[e]
            for lead, g in self.polys:
                if _divides(lead, e):
                    q = _sub(e, lead)
                    for ge, gc in g.items():
                        k = tuple(x + y for x, y in zip(ge, q))
                        s = p.get(k, ZERO) - c * gc
                        if s:
                            p[k] = s
                        else:
                            p.pop(k, None)
                    break
            else:
                r[e] = c
                del p[e]
        return r


def _monic_terms(terms, key):
    lead = max(terms, key=key)
    inv = terms[lead].inverse()
    return lead, {e: c * inv for e, c in terms.items()}


def _buchberger(gens, key):
    red = _Reducer(key)
    basis = []  # (lead, terms)
    pairs = []

    def push(terms):
        lead, terms = _monic_terms(terms, key)
        k = len(basis)
        basis.append((lead, terms))
        red.add(lead, terms)
        for i in range(k):
            pairs.append((i, k))

    for g in gens:
        r = red.remainder(g)
        if r:
            push(r)
    while pairs:
        best = min(range(len(pairs)), key=lambda t: key(_lcm(basis[pairs[t][0]][0], basis[pairs[t][1]][0])))
        i, j = pairs.pop(best)
        li, fi = basis[i]
        lj, fj = basis[j]
        lcm = _lcm(li, lj)
        if all(not (x and y) for x, y in zip(li, lj)):
            continue  # coprime leads
        # chain criterion: some k with lead dividing lcm whose pairs with i and j are done
        if any(
            k not in (i, j)
            and _divides(basis[k][0], lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        ui, uj = _sub(lcm, li), _sub(lcm, lj)
        s = {}
        for e, c in fi.items():
            s[tuple(x + y for x, y in zip(e, ui))] = c
        for e, c in fj.items():
            k = tuple(x + y for x, y in zip(e, uj))
            v = s.get(k, ZERO) - c
            if v:
                s[k] = v
            else:
                s.pop(k, None)
        r = red.remainder(s)
        if r:
            push(r)
    # minimalize and interreduce
    minimal = []
    for lead, terms in sorted(basis, key=lambda b: key(b[0])):
        if not any(_divides(l, lead) for l, _ in minimal):
            minimal.append((lead, terms))
    out = []
    for idx, (lead, terms) in enumerate(minimal):
        others = _Reducer(key)
        for j, (l2, t2) in enumerate(minimal):
            if j != idx:
                others.add(l2, t2)
        tail = dict(terms)
        del tail[lead]
        r = others.remainder(tail)
        r[lead] = ONE
        out.append((lead, r))
    out.sort(key=lambda b: key(b[0]))
    return out


class Ideal:
    """An ideal of an affine polynomial ring with a cached reduced Gröbner basis."""

    def __init__(self, gens, order="grevlex"):
        gens = list(gens)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        self.ring = gens[0].ring
        if self.ring.homogeneous:
            raise ValueError("Ideal expects affine generators")
        self.order = order
        self._key = order_key(order)
        seen = []
        for g in gens:
            if g.ring != self.ring:
                raise ValueError("generators live in different rings")
            if g and g not in seen:
                seen.append(g)
        if not seen:
            raise ValueError("an ideal needs at least one nonzero generator")
        self.gens = seen
        gb = _buchberger([g.terms for g in seen], self._key)
        self._install(gb)

    @classmethod
    def from_groebner(cls, ring, gb_terms, order="grevlex", gens=None):
        """Wrap an already reduced Gröbner basis (list of monic term dicts)."""
        self = cls.__new__(cls)
        self.ring = ring
        self.order = order
        self._key = order_key(order)
        key = self._key
        gb = sorted(((max(t, key=key), t) for t in gb_terms), key=lambda b: key(b[0]))
        self._install(gb)
        self.gens = list(gens) if gens is not None else list(self.basis)
        return self

    def _install(self, gb):
        self.basis = [Poly(self.ring, t) for _, t in gb]
        self.leads = [lead for lead, _ in gb]
        self._red = _Reducer(self._key)
        for lead, t in gb:
            self._red.add(lead, t)

    def __repr__(self):
        return f"Ideal({'; '.join(map(str, self.basis))})"

    @property
    def nvars(self):
        return self.ring.nvars

    def is_unit(self):
        return any(not any(l) for l in self.leads)

    def normal_form(self, p):
        return Poly(self.ring, self._red.remainder(p.terms))

    def contains(self, p):
        return not self._red.remainder(p.terms)

    def pure_power_bounds(self):
        """For each variable the least k with x_j^k a leading monomial (None if absent)."""
        bounds = []
        for j in range(self.nvars):
            ks = [l[j] for l in self.leads if all(x == 0 for i, x in enumerate(l) if i != j)]
            bounds.append(min(ks) if ks else None)
        return bounds

    def is_zero_dimensional(self):
        return all(b is not None for b in self.pure_power_bounds())

    @cached_property
    def standard_monomials(self):
        if self.is_unit():
            return []
        bounds = self.pure_power_bounds()
        if any(b is None for b in bounds):
            raise ZeroDimensionalError("ideal is not zero-dimensional")
        mons = [
            e for e in product(*(range(b) for b in bounds))
            if not any(_divides(l, e) for l in self.leads)
        ]
        mons.sort(key=self._key)
        return mons

    @cached_property
    def _std_index(self):
        return {e: k for k, e in enumerate(self.standard_monomials)}

    @property
    def dim(self):
        return len(self.standard_monomials)

    def coordinates(self, p):
        """Coefficient vector of ``normal_form(p)`` over the standard monomials."""
        idx = self._std_index
        vec = [ZERO] * len(idx)
        for e, c in self._red.remainder(p.terms).items():
            vec[idx[e]] = c
        return vec

    def from_coordinates(self, vec):
        return Poly(self.ring, {e: c for e, c in zip(self.standard_monomials, vec)})

    @cached_property
    def multiplication_matrices(self):
        """``M[j]`` with column k the coordinates of ``x_j * s_k``."""
        mats = []
        for j in range(self.nvars):
            cols = []
            for e in self.standard_monomials:
                f = list(e)
                f[j] += 1
                cols.append(self.coordinates(self.ring.monomial(f)))
            n = len(cols)
            mats.append(Matrix([[cols[k][l] for k in range(n)] for l in range(n)], n))
        return mats

    def minimal_polynomial(self, j):
        """Monic ``m(x_j)`` of least degree lying in the ideal."""
        if self.is_unit():
            return self.ring.one()
        self.standard_monomials  # raises when not zero-dimensional
        red = SparseReducer()
        x = self.ring.var(j)
        power = self.ring.one()
        k = 0
        while True:
            nf = self.normal_form(power)
            dep = red.insert(nf.terms, k)
            if dep is not None:
                terms = {}
                for kk, c in dep.items():
                    e = [0] * self.nvars
                    e[j] = kk
                    terms[tuple(e)] = c
                return Poly(self.ring, terms).monic()
            power = nf * x
            k += 1


class QuotientBasis:
    """Standard monomials of a zero-dimensional ideal: a basis of the quotient algebra."""

    def __init__(self, ideal):
        self.ring = ideal.ring
        self.monomials = list(ideal.standard_monomials)

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def __getitem__(self, k):
        return self.monomials[k]

    def labels(self):
        return [format_monomial(self.ring.names, e) for e in self.monomials]


def groebner_basis(gens, order="grevlex"):
    return Ideal(gens, order)


def normal_form(p, ideal):
    return ideal.normal_form(p)


def quotient_basis(ideal):
    if not ideal.is_unit() and not ideal.is_zero_dimensional():
        raise ZeroDimensionalError("ideal is not zero-dimensional")
    return QuotientBasis(ideal)


def minimal_polynomial(ideal, j):
    return ideal.minimal_polynomial(j)


# -- ideals from dual data ---------------------------------------------------


def ideal_from_functionals(ring, functionals, order="grevlex"):
    """Reduced Gröbner basis of the common kernel of Taylor-coefficient functionals.

    ``functionals`` is a list of ``(point, alpha)`` pairs; each acts as
    ``p -> taylor_coefficient(p, point, alpha)``.  The set must be closed under
    lowering ``alpha`` at each point so that the kernel is an ideal.
    (Buchberger-Möller.)
    """
    key = order_key(order)
    n = ring.nvars
    functionals = [(tuple(Scalar.coerce(x) for x in p), tuple(a)) for p, a in functionals]
    red = SparseReducer()
    leads, gb = [], []
    std = []
    heap = [(key((0,) * n), (0,) * n)]
    seen = {(0,) * n}
    while heap:
        _, t = heapq.heappop(heap)
        if any(_divides(l, t) for l in leads):
            continue
        vec = {}
        for idx, (p, a) in enumerate(functionals):
            v = monomial_taylor(t, p, a)
            if v:
                vec[idx] = v
        dep = red.insert(vec, t)
        if dep is not None:
            leads.append(t)
            gb.append(dict(dep))
            continue
        std.append(t)
        for j in range(n):
            u = list(t)
            u[j] += 1
            u = tuple(u)
            if u not in seen:
                seen.add(u)
                heapq.heappush(heap, (key(u), u))
    if not functionals:
        gb = [{(0,) * n: ONE}]
    return Ideal.from_groebner(ring, gb, order)


def ideal_of_points(ring, points, order="grevlex"):
    pts = []
    for p in points:
        p = tuple(Scalar.coerce(x) for x in p)
        if len(p) != ring.nvars:
            raise ValueError(f"point {p} has wrong dimension")
        if p not in pts:
            pts.append(p)
    return ideal_from_functionals(ring, [(p, (0,) * ring.nvars) for p in pts], order)


# -- separated complete intersections ------------------------------------------


def find_roots(coeffs):
    """Roots in Q(i) with multiplicities of the univariate polynomial sum c_k x^k.

    Returns None when the polynomial does not split into linear factors over Q(i).
    """
    import sympy

    x = sympy.Symbol("x")

    def to_sym(c):
        return sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(
            c.im.numerator, c.im.denominator
        )

    expr = sum(to_sym(c) * x**k for k, c in enumerate(coeffs) if c)
    _, factors = sympy.factor_list(sympy.expand(expr), x, gaussian=True)
    roots = []
    for base, mult in factors:
        poly = sympy.Poly(base, x)
        if poly.degree() == 0:
            continue
        if poly.degree() != 1:
            return None
        a, b = poly.all_coeffs()
        r = sympy.nsimplify(-b / a)
        re, im = sympy.re(r), sympy.im(r)
        if not (re.is_Rational and im.is_Rational):
            return None
        roots.append((Scalar(_to_fraction(re), _to_fraction(im)), int(mult)))
    roots.sort(key=lambda t: t[0].sort_key())
    return roots


def _to_fraction(q):
    return Fraction(int(q.p), int(q.q))


class SeparatedCI:
    """``(f_1(x_1), ..., f_n(x_n))`` with each ``f_j`` univariate in its own variable.

    ``roots``, when known, is a per-variable list of ``(root, multiplicity)``.
    Reductions use the monic versions; ``leading_coefficients`` keeps the
    original scaling for residue normalization.
    """

    def __init__(self, polys, roots=None):
        polys = list(polys)
        if not polys:
            raise ValueError("empty complete intersection")
        self.ring = polys[0].ring
        n = self.ring.nvars
        if len(polys) != n:
            raise ValueError("need exactly one univariate member per variable")
        self.polys = polys
        self.degrees = []
        self.leading_coefficients = []
        self._low = []  # monic member: x^d = -sum(low[i] x^i)
        for j, f in enumerate(polys):
            if f.ring != self.ring or f.variables_used() - {j}:
                raise ValueError(f"member {j} must involve only variable {self.ring.names[j]}")
            d = f.degree()
            if d < 1:
                raise ValueError(f"member {j} must have degree >= 1")
            lc = f.coeff(tuple(d if i == j else 0 for i in range(n)))
            coeffs = [f.coeff(tuple(k if i == j else 0 for i in range(n))) / lc for k in range(d)]
            self.degrees.append(d)
            self.leading_coefficients.append(lc)
            self._low.append(coeffs)
        self._rem = [[[ONE] + [ZERO] * (d - 1)] for d in self.degrees]
        self._nf_cache = {}
        self._hnf_cache = {}
        self.roots = None
        if roots is not None:
            self.set_roots(roots)

    @classmethod
    def from_univariate(cls, ring, coeff_lists, roots=None):
        polys = []
        for j, cs in enumerate(coeff_lists):
            terms = {}
            for k, c in enumerate(cs):
                e = [0] * ring.nvars
                e[j] = k
                terms[tuple(e)] = Scalar.coerce(c)
            polys.append(Poly(ring, terms))
        return cls(polys, roots)

    @classmethod
    def from_roots(cls, ring, roots):
        """Monic members ``prod (x_j - r)^m`` from per-variable root data."""
        polys = []
        for j, rs in enumerate(roots):
            f = ring.one()
            for r, m in rs:
                f = f * (ring.var(j) - Scalar.coerce(r)) ** m
            polys.append(f)
        return cls(polys, roots)

    def set_roots(self, roots):
        roots = [[(Scalar.coerce(r), int(m)) for r, m in rs] for rs in roots]
        for j, rs in enumerate(roots):
            merged = {}
            for r, m in rs:
                merged[r] = merged.get(r, 0) + m
            rs = sorted(merged.items(), key=lambda t: t[0].sort_key())
            roots[j] = rs
            f = self.ring.one()
            for r, m in rs:
                f = f * (self.ring.var(j) - r) ** m
            if f != self.polys[j].monic():
                raise ValueError(f"root data does not factor member {j}")
        self.roots = roots

    def factor(self):
        """Fill in root data via exact factorization over Q(i); True on success."""
        if self.roots is not None:
            return True
        roots = []
        for j, d in enumerate(self.degrees):
            rs = find_roots(self._low[j] + [ONE])
            if rs is None:
                return False
            roots.append(rs)
        self.set_roots(roots)
        return True

    @property
    def nvars(self):
        return self.ring.nvars

    @property
    def total_degree(self):
        return sum(self.degrees)

    @property
    def length(self):
        out = 1
        for d in self.degrees:
            out *= d
        return out

    def __repr__(self):
        return f"SeparatedCI({'; '.join(map(str, self.polys))})"

    def is_reduced(self):
        if self.roots is None:
            raise UnfactoredError("root data unavailable")
        return all(m == 1 for rs in self.roots for _, m in rs)

    def remainder_coeffs(self, j, a):
        """Coefficients (low to high) of ``x_j^a mod f_j``."""
        table = self._rem[j]
        low = self._low[j]
        while len(table) <= a:
            prev = table[-1]
            top = prev[-1]
            nxt = [ZERO] + prev[:-1]
            if top:
                nxt = [x - top * c for x, c in zip(nxt, low)]
            table.append(nxt)
        return table[a]

    def _monomial_nf(self, e):
        out = self._nf_cache.get(e)
        if out is not None:
            return out
        out = {(): ONE}
        for j, a in enumerate(e):
            rem = self.remainder_coeffs(j, a)
            nxt = {}
            for f, c in out.items():
                for i, r in enumerate(rem):
                    if r:
                        nxt[f + (i,)] = c * r
            out = nxt
        self._nf_cache[e] = out
        return out

    def normal_form(self, p):
        terms = {}
        for e, c in p.terms.items():
            for f, r in self._monomial_nf(e).items():
                s = terms.get(f)
                terms[f] = c * r if s is None else s + c * r
        return Poly(self.ring, terms)

    def contains(self, p):
        return self.normal_form(p).is_zero()

    def residue_weight(self, e):
        """Normalized global residue of the monomial ``x^e``."""
        w = ONE
        for j, a in enumerate(e):
            r = self.remainder_coeffs(j, a)[-1]
            if not r:
                return ZERO
            w = w * r
        return w * self._lc_inverse

    def dual_basis_element(self, alpha):
        """``Q`` with ``Res(x^beta * Q) = delta(alpha, beta) / prod(lc)`` for reduced ``beta``.

        Per variable this is the Horner-type polynomial
        ``q_a = sum_{k > a} c_k x^(k - a - 1)`` of the monic member.
        """
        out = {(): ONE}
        for j, a in enumerate(alpha):
            c = self._low[j] + [ONE]
            q = c[a + 1 :]
            nxt = {}
            for f, x in out.items():
                for k, y in enumerate(q):
                    if y:
                        nxt[f + (k,)] = x * y
            out = nxt
        return out

    @cached_property
    def _lc_inverse(self):
        p = ONE
        for c in self.leading_coefficients:
            p = p * c
        return p.inverse()

    # homogeneous side -------------------------------------------------------

    @cached_property
    def hring(self):
        return self.ring.homogenized()

    def homogenized(self, hring=None):
        hring = hring or self.hring
        return [homogenize(f, d, hring) for f, d in zip(self.polys, self.degrees)]

    def _hmonomial_nf(self, e):
        out = self._hnf_cache.get(e)
        if out is not None:
            return out
        n = self.nvars
        acc = {(): ONE}
        for j in range(n):
            a = e[j]
            rem = self.remainder_coeffs(j, a)
            nxt = {}
            for f, c in acc.items():
                for i, r in enumerate(rem):
                    if r:
                        # z_j^i z0^(a - i)
                        nxt[f + ((i, a - i),)] = c * r
            acc = nxt
        out = {}
        for f, c in acc.items():
            exps = tuple(i for i, _ in f)
            z0 = e[n] + sum(k for _, k in f)
            key = exps + (z0,)
            s = out.get(key)
            out[key] = c if s is None else s + c
        out = {k: v for k, v in out.items() if v}
        self._hnf_cache[e] = out
        return out

    def hnormal_form_terms(self, terms):
        out = {}
        for e, c in terms.items():
            for f, r in self._hmonomial_nf(e).items():
                s = out.get(f, ZERO) + c * r
                if s:
                    out[f] = s
                else:
                    out.pop(f, None)
        return out

    def hnormal_form(self, P):
        return Poly(P.ring, self.hnormal_form_terms(P.terms))

    def standard_forms(self, e):
        """Degree-e monomials of the homogeneous ring outside the leading ideal of J^h."""
        out = []
        for a in product(*(range(min(d, e + 1)) for d in self.degrees)):
            s = sum(a)
            if s <= e:
                out.append(tuple(a) + (e - s,))
        return out


def enclosing_ci(ideal, factor=False):
    """The complete intersection of minimal polynomials, contained in ``ideal``."""
    if ideal.is_unit():
        raise ValueError("the unit ideal has no enclosing complete intersection")
    ci = SeparatedCI([ideal.minimal_polynomial(j) for j in range(ideal.nvars)])
    if factor:
        ci.factor()
    return ci


@dataclass(frozen=True, eq=False)
class ColonElement:
    """Homogeneous ``v`` with ``v * G^h`` in ``J^h`` for every generator ``G``."""

    form: Poly
    degree: int
    affine: Poly

    def __str__(self):
        return self.form.format()


def homogenized_generators(gens, hring):
    return [homogenize(g, g.degree(), hring) for g in gens]


def annihilator_generators(ci, ideal):
    """Reduced representatives spanning ``(J : I) / J``, one per coordinate of ``A_X``.

    The residue pairing makes the quotient by ``J`` self-dual, so ``(J : I)/J``
    is the orthogonal complement of ``I``.  The element paired with the k-th
    coordinate functional of ``A_X`` is ``sum_alpha coord_k(NF_I(x^alpha)) Q_alpha``
    over the dual basis ``Q_alpha`` of the monomials reduced modulo ``J``.
    """
    L = ideal.dim
    out = [{} for _ in range(L)]
    for alpha in product(*(range(d) for d in ci.degrees)):
        coords = ideal.coordinates(ideal.ring.monomial(alpha))
        nz = [(k, c) for k, c in enumerate(coords) if c]
        if not nz:
            continue
        Q = ci.dual_basis_element(alpha)
        for k, c in nz:
            acc = out[k]
            for e, q in Q.items():
                acc[e] = acc.get(e, ZERO) + c * q
    return [{e: c for e, c in w.items() if c} for w in out]


def colon_in_degree(ci, generators, e):
    """Canonical basis of ``(J^h : I^h)_e`` modulo ``J^h``.

    ``generators`` come from :func:`annihilator_generators`.  A degree-e form
    modulo ``J^h`` is a reduced affine polynomial of degree <= e (``J^h`` is
    saturated in the homogenizing variable), so the space is the set of
    combinations of the generators with no terms above degree e.  The basis is
    in reduced echelon form for the descending graded reverse lexicographic
    order of the homogenized forms (leading coefficient 1).
    """
    if e < 0 or not generators:
        return []
    L = len(generators)
    high = sorted({m for w in generators for m in w if sum(m) > e})
    if high:
        null = nullspace([[w.get(m, ZERO) for w in generators] for m in high], L)
    else:
        null = [[ONE if i == k else ZERO for i in range(L)] for k in range(L)]
    if not null:
        return []
    polys = []
    for c in null:
        acc = {}
        for ck, w in zip(c, generators):
            if ck:
                for m, x in w.items():
                    acc[m] = acc.get(m, ZERO) + ck * x
        polys.append({m + (e - sum(m),): x for m, x in acc.items() if x})
    key = order_key("grevlex")
    cols = sorted({m for p in polys for m in p}, key=key, reverse=True)
    R, pivots = Matrix([[p.get(m, ZERO) for m in cols] for p in polys], len(cols)).rref()
    hring = ci.hring
    out = []
    for row in R.rows[: len(pivots)]:
        form = Poly(hring, {m: x for m, x in zip(cols, row)})
        out.append(ColonElement(form, e, dehomogenize(form)))
    return out


def colon_in_degree_direct(ci, hgens, e):
    """Canonical basis of ``(J^h : I^h)_e`` modulo ``J^h`` by a direct kernel solve.

    Unknowns range over standard forms of ``J^h`` in degree ``e``.  Slow when
    ``J`` is much longer than ``X``; kept as an independent cross-check of
    :func:`colon_in_degree`.
    """
    hring = ci.hring
    key = order_key("grevlex")
    unknowns = sorted(ci.standard_forms(e), key=key, reverse=True)
    if not unknowns:
        return []
    red = SparseReducer()
    deps = []
    for mu in unknowns:
        image = {}
        for i, G in enumerate(hgens):
            prod_terms = {}
            for g_e, g_c in G.terms.items():
                k = tuple(x + y for x, y in zip(mu, g_e))
                prod_terms[k] = prod_terms.get(k, ZERO) + g_c
            for f, c in ci.hnormal_form_terms(prod_terms).items():
                image[(i, f)] = c
        dep = red.insert(image, mu)
        if dep is not None:
            deps.append(dep)
    if not deps:
        return []
    col = {mu: k for k, mu in enumerate(unknowns)}
    rows = []
    for dep in deps:
        row = [ZERO] * len(unknowns)
        for mu, c in dep.items():
            row[col[mu]] = c
        rows.append(row)
    R, _ = Matrix(rows, len(unknowns)).rref()
    out = []
    for row in R.rows:
        form = Poly(hring, {mu: c for mu, c in zip(unknowns, row)})
        out.append(ColonElement(form, e, dehomogenize(form)))
    return out


def colon_basis(ideal, ci, e_max=None, gens=None):
    """Graded colon spaces ``{e: [ColonElement, ...]}`` for ``e = 0..e_max``.

    With ``gens`` given, the spaces are computed by the direct kernel solve
    against those generators instead of through residue duality.
    """
    for f in ci.polys:
        if not ideal.contains(f):
            raise ContainmentError("J not contained in I")
    if e_max is None:
        e_max = ci.total_degree - ci.nvars - 1
    if gens is not None:
        hgens = homogenized_generators(gens, ci.hring)
        return {e: colon_in_degree_direct(ci, hgens, e) for e in range(e_max + 1)}
    W = annihilator_generators(ci, ideal)
    return {e: colon_in_degree(ci, W, e) for e in range(e_max + 1)}
