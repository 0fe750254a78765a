"""Interpolation decisions on a finite scheme: existence, construction, degree."""

from dataclasses import dataclass, field

from .matrix import Matrix
from .poly import Poly, monomials_up_to
from .residue import MomentFunctional, moment_functionals
from .scheme import FunctionOnX, Subscheme
from .scalar import Scalar


def as_coordinates(X, g):
    """Coordinates of g in the quotient algebra; g may be a Poly, FunctionOnX or vector."""
    if isinstance(g, Poly):
        return X.coordinates(g)
    if isinstance(g, FunctionOnX):
        return g.coordinates(X)
    vec = [Scalar.coerce(x) for x in g]
    if len(vec) != X.length:
        raise ValueError(f"coordinate vector of length {len(vec)} for a scheme of length {X.length}")
    return vec


def violated_conditions(X, g, d):
    """``[(functional, value), ...]`` for every condition that g fails at degree d."""
    c = as_coordinates(X, g)
    out = []
    for m in moment_functionals(X, d):
        val = m.on_coordinates(c)
        if val:
            out.append((m, val))
    return out


def has_interpolant(X, g, d):
    return not violated_conditions(X, g, d)


def find_interpolant(X, g, d):
    """A polynomial of degree <= d interpolating g, or None.

    Unknowns are the coefficients of monomials of degree <= d in ascending
    order; free unknowns are set to zero, so lower monomials are preferred.
    """
    c = as_coordinates(X, g)
    mons = monomials_up_to(X.n, d, X.ideal.order)
    if X.empty:
        return X.ring.zero()
    cols = [X.coordinates(X.ring.monomial(e)) for e in mons]
    A = Matrix([[col[k] for col in cols] for k in range(X.length)], len(mons))
    x = A.solve(c)
    if x is None:
        return None
    return Poly(X.ring, {e: xi for e, xi in zip(mons, x)})


def condition_count(X, d):
    return len(moment_functionals(X, d))


def betti_bound(X):
    """``sum(d_j) - e_min - n``: no moment condition survives at this degree."""
    if X.empty:
        return 0
    return X.ci.total_degree - X.e_min - X.n


def interpolation_degree(X):
    """Least d such that every function on X has an interpolant of degree <= d."""
    if X.empty:
        return 0
    bound = betti_bound(X)
    for d in range(bound + 1):
        if condition_count(X, d) == 0:
            return d
    return bound


def degree_table(X, d_max=None):
    """``{d: number of independent conditions}`` for d up to the interpolation degree."""
    if d_max is None:
        d_max = interpolation_degree(X)
    return {d: condition_count(X, d) for d in range(d_max + 1)}


@dataclass
class InterpolationReport:
    d: int
    conditions: list
    satisfied: list
    interpolant: object = None
    degree_table: dict = field(default_factory=dict)

    @property
    def interpolable(self):
        return all(self.satisfied)


def interpolation_report(X, g, d, with_table=False):
    c = as_coordinates(X, g)
    conds = moment_functionals(X, d)
    sat = [not m.on_coordinates(c) for m in conds]
    G = find_interpolant(X, c, d) if all(sat) else None
    table = degree_table(X) if with_table else {}
    return InterpolationReport(d, conds, sat, G, table)


__all__ = [
    "FunctionOnX",
    "InterpolationReport",
    "MomentFunctional",
    "Subscheme",
    "as_coordinates",
    "betti_bound",
    "condition_count",
    "degree_table",
    "find_interpolant",
    "has_interpolant",
    "interpolation_degree",
    "interpolation_report",
    "violated_conditions",
]
