"""Brute-force ground truth by linear algebra on the evaluation map.

Nothing here touches residues or colon ideals: the image of polynomials of
degree <= d in the quotient algebra is computed directly from normal forms,
and its annihilator is a null space.
"""

from dataclasses import dataclass, field
from math import factorial

from .hermite import JetData, NodeList
from .matrix import Matrix, in_row_span, row_space
from .poly import monomials_up_to
from .residue import moment_functionals


def evaluation_matrix(X, d):
    """Rows: coordinates of the normal forms of all monomials of degree <= d."""
    mons = monomials_up_to(X.n, d, X.ideal.order)
    rows = [X.ideal.coordinates(X.ring.monomial(e)) for e in mons]
    return Matrix(rows, X.length)


def image_rank(X, d):
    if X.empty:
        return 0
    return evaluation_matrix(X, d).rank()


def is_in_image(X, g, d):
    from .interp import as_coordinates

    c = as_coordinates(X, g)
    if X.empty:
        return True
    M = evaluation_matrix(X, d)
    return in_row_span(M.rows, c, X.length)


def annihilator(X, d):
    """Canonical basis (reduced echelon rows) of the functionals killing the degree-d image."""
    if X.empty:
        return []
    null = evaluation_matrix(X, d).nullspace()
    return row_space(null, X.length)


@dataclass
class DegreeCheck:
    d: int
    conditions: int
    annihilator: int
    equal: bool
    witness: list = None


@dataclass
class TheoremReport:
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.equal for c in self.checks)

    def mismatches(self):
        return [c for c in self.checks if not c.equal]

    def lines(self):
        out = []
        for c in self.checks:
            status = "ok" if c.equal else "MISMATCH"
            out.append(f"d={c.d}: conditions={c.conditions} annihilator={c.annihilator} {status}")
            if c.witness is not None:
                out.append("  witness: (" + ", ".join(map(str, c.witness)) + ")")
        return out


def verify_theorem(X, d_max):
    """Compare the span of the moment conditions with the annihilator for d = 0..d_max."""
    report = TheoremReport()
    for d in range(d_max + 1):
        conds = [list(m.coords) for m in moment_functionals(X, d)]
        ann = annihilator(X, d)
        n = X.length
        equal = row_space(conds, n) == row_space(ann, n)
        witness = None
        if not equal:
            for v in conds:
                if not in_row_span(ann, v, n):
                    witness = v
                    break
            else:
                for v in ann:
                    if not in_row_span(conds, v, n):
                        witness = v
                        break
        report.checks.append(DegreeCheck(d, len(conds), len(ann), equal, witness))
    return report


def jet_system_consistent(g, nodes, d):
    """Direct solve: is there ``G`` of degree <= d with ``G^(k)(p) = g^(k)(p)`` for all jets?"""
    g = g if isinstance(g, JetData) else JetData(g)
    nodes = nodes if isinstance(nodes, NodeList) else NodeList(nodes)
    rows, rhs = [], []
    for p, m in nodes.multiplicity.items():
        for k in range(m):
            row = []
            for i in range(d + 1):
                # k-th derivative of x^i at p
                row.append(p ** (i - k) * (factorial(i) // factorial(i - k)) if i >= k else 0)
            rows.append(row)
            rhs.append(g.get(p, k))
    return Matrix(rows, d + 1).solve(rhs) is not None
