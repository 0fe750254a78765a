"""Univariate Lagrange/Hermite interpolation with divided differences.

Jets are derivative values ``g^(k)(p)``.  A repeated node ``p`` occurring
``m`` times requires the jets ``g(p), g'(p), ..., g^(m-1)(p)``.
"""

from math import comb, factorial

from .poly import Ring
from .scalar import ZERO, Scalar


class InsufficientJetsError(ValueError):
    pass


class NodeList:
    """Nodes ``p_0, ..., p_r`` with repetitions allowed."""

    def __init__(self, nodes):
        self.nodes = tuple(Scalar.coerce(p) for p in nodes)
        if not self.nodes:
            raise ValueError("need at least one node")
        self.multiplicity = {}
        for p in self.nodes:
            self.multiplicity[p] = self.multiplicity.get(p, 0) + 1

    @property
    def r(self):
        return len(self.nodes) - 1

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def distinct(self):
        """Distinct nodes in first-occurrence order."""
        return list(self.multiplicity)

    def defining_poly(self, ring=None):
        ring = ring or Ring(("z",))
        f = ring.one()
        for p in self.nodes:
            f = f * (ring.var(0) - p)
        return f


class JetData:
    """``{(p, k): g^(k)(p)}``."""

    def __init__(self, jets):
        self.jets = {(Scalar.coerce(p), int(k)): Scalar.coerce(v) for (p, k), v in jets.items()}

    @classmethod
    def from_poly(cls, g, nodes):
        nodes = nodes if isinstance(nodes, NodeList) else NodeList(nodes)
        jets = {}
        for p, m in nodes.multiplicity.items():
            q = g
            for k in range(m):
                jets[(p, k)] = q.evaluate([p])
                q = q.derivative(0)
        return cls(jets)

    @classmethod
    def from_values(cls, nodes, values):
        """Plain values at distinct nodes (Lagrange data)."""
        return cls({(p, 0): v for p, v in zip(nodes, values)})

    def get(self, p, k):
        try:
            return self.jets[(Scalar.coerce(p), k)]
        except KeyError:
            raise InsufficientJetsError(f"missing jet g^({k})({p})") from None

    def is_complete(self, nodes):
        return all((p, k) in self.jets for p, m in nodes.multiplicity.items() for k in range(m))

    def times(self, h, nodes):
        """Jets of ``g * h`` for a polynomial h, by Leibniz's rule."""
        out = {}
        for p, m in nodes.multiplicity.items():
            hd = []
            q = h
            for k in range(m):
                hd.append(q.evaluate([p]))
                q = q.derivative(0)
            for k in range(m):
                s = ZERO
                for i in range(k + 1):
                    s = s + self.get(p, i) * hd[k - i] * comb(k, i)
                out[(p, k)] = s
        return JetData(out)


def _as_nodes(nodes):
    return nodes if isinstance(nodes, NodeList) else NodeList(nodes)


def _as_jets(g):
    return g if isinstance(g, JetData) else JetData(g)


def divided_difference(g, nodes, k=None):
    """``g[p_0, ..., p_k]``; confluent blocks use ``g^(m)(p) / m!``."""
    g = _as_jets(g)
    nodes = _as_nodes(nodes)
    if k is None:
        k = nodes.r
    if not 0 <= k <= nodes.r:
        raise ValueError(f"k must lie in 0..{nodes.r}")
    # symmetric in its nodes: sort so equal nodes are adjacent
    pts = sorted(nodes.nodes[: k + 1], key=lambda s: s.sort_key())
    m = len(pts)
    table = [g.get(p, 0) for p in pts]
    for width in range(1, m):
        nxt = []
        for i in range(m - width):
            a, b = pts[i], pts[i + width]
            if a == b:
                nxt.append(g.get(a, width) / factorial(width))
            else:
                nxt.append((table[i + 1] - table[i]) / (b - a))
        table = nxt
    return table[0]


def newton_interpolant(g, nodes, ring=None):
    """``sum_k g[p_0..p_k] prod_{j<k} (x - p_j)``: the unique degree <= r interpolant."""
    g = _as_jets(g)
    nodes = _as_nodes(nodes)
    ring = ring or Ring(("z",))
    x = ring.var(0)
    out = ring.zero()
    basis = ring.one()
    for k, p in enumerate(nodes.nodes):
        out = out + basis * divided_difference(g, nodes, k)
        basis = basis * (x - p)
    return out


def hermite_conditions(g, nodes, d):
    """``[(k, (g * x^k)[p_0..p_r]) for k = 0..r-d-1]``."""
    g = _as_jets(g)
    nodes = _as_nodes(nodes)
    if d < 0:
        raise ValueError("target degree must be non-negative")
    if not g.is_complete(nodes):
        missing = [(p, k) for p, m in nodes.multiplicity.items() for k in range(m) if (p, k) not in g.jets]
        raise InsufficientJetsError(f"missing jets {missing}")
    ring = Ring(("z",))
    out = []
    for k in range(nodes.r - d):
        gk = g.times(ring.monomial((k,)), nodes) if k else g
        out.append((k, divided_difference(gk, nodes)))
    return out


def hermite_interpolable(g, nodes, d):
    return all(not v for _, v in hermite_conditions(g, nodes, d))
