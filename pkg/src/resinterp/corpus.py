"""Seeded random zero-dimensional schemes for property checks and selftest.

Four families are mixed: reduced point sets, fat points cut out by Taylor
functionals, separated complete intersections, and ideals generated by a
separated complete intersection plus a few random extra polynomials.
Coordinates are kept small so everything stays desk-sized.
"""

import random
from dataclasses import dataclass

from .ideal import SeparatedCI
from .poly import Poly, Ring, monomials_up_to
from .scalar import I, Scalar
from .scheme import Subscheme

COORDS = (0, 1, 2, -1)
COMPLEX_COORDS = (I, -I)
KINDS = ("points", "fat", "ci", "generators")


@dataclass
class Instance:
    kind: str
    X: Subscheme
    seed: int
    gens: list

    @property
    def n(self):
        return self.X.n

    def describe(self):
        return f"{self.kind}(n={self.n}, length={self.X.length}, seed={self.seed})"


def ring_for(n):
    return Ring(tuple(f"z{j + 1}" for j in range(n)))


def _coord(rng, complex_ok=True):
    if complex_ok and rng.random() < 0.1:
        return Scalar.coerce(rng.choice(COMPLEX_COORDS))
    return Scalar.coerce(rng.choice(COORDS))


def random_points(rng, n, count):
    pts = []
    tries = 0
    while len(pts) < count and tries < 200:
        tries += 1
        p = tuple(_coord(rng) for _ in range(n))
        if p not in pts:
            pts.append(p)
    return pts


def _lower_set(rng, n, size):
    """A random order ideal of multi-indices (closed under decreasing entries)."""
    out = [(0,) * n]
    while len(out) < size:
        grow = []
        for a in out:
            for j in range(n):
                b = a[:j] + (a[j] + 1,) + a[j + 1 :]
                if b in out or b in grow:
                    continue
                if all(b[:k] + (b[k] - 1,) + b[k + 1 :] in out for k in range(n) if b[k]):
                    grow.append(b)
        out.append(rng.choice(grow))
    return out


def random_poly(ring, rng, degree=2, terms=3, coeffs=(-2, -1, 1, 2)):
    mons = monomials_up_to(ring.nvars, degree)
    picks = rng.sample(mons, min(terms, len(mons)))
    return Poly(ring, {e: Scalar.coerce(rng.choice(coeffs)) for e in picks})


def random_ideal_element(X, rng, degree=2):
    """``sum_k q_k g_k`` with random multipliers over the Gröbner basis of X."""
    out = X.ring.zero()
    for g in X.ideal.basis:
        if rng.random() < 0.7:
            out = out + random_poly(X.ring, rng, degree, terms=2) * g
    return out


def _random_roots(rng, n, max_degree, max_length):
    while True:
        roots = []
        for _ in range(n):
            deg = rng.randint(1, max_degree)
            parts = {}
            for _ in range(deg):
                p = _coord(rng)
                parts[p] = parts.get(p, 0) + 1
            roots.append(sorted(parts.items(), key=lambda t: t[0].sort_key()))
        length = 1
        for rs in roots:
            length *= sum(m for _, m in rs)
        if length <= max_length:
            return roots


def make_points(rng, n, seed, max_length=8):
    ring = ring_for(n)
    pts = random_points(rng, n, rng.randint(1, max_length))
    X = Subscheme.from_points(ring, pts)
    return Instance("points", X, seed, list(X.ideal.basis))


def make_fat(rng, n, seed, max_length=10):
    ring = ring_for(n)
    funcs = []
    budget = rng.randint(2, max_length)
    for p in random_points(rng, n, rng.randint(1, 3)):
        if budget <= 0:
            break
        size = rng.randint(1, min(budget, 4))
        budget -= size
        funcs.extend((p, a) for a in _lower_set(rng, n, size))
    X = Subscheme.from_functionals(ring, funcs)
    return Instance("fat", X, seed, list(X.ideal.basis))


def make_ci(rng, n, seed, max_degree=3, max_length=12):
    ring = ring_for(n)
    ci = SeparatedCI.from_roots(ring, _random_roots(rng, n, max_degree, max_length))
    X = Subscheme.from_generators(list(ci.polys), ci=ci)
    return Instance("ci", X, seed, list(ci.polys))


def make_generators(rng, n, seed, max_degree=3, max_length=12):
    ring = ring_for(n)
    ci = SeparatedCI.from_roots(ring, _random_roots(rng, n, max_degree, max_length))
    gens = list(ci.polys)
    for _ in range(rng.randint(1, 2)):
        g = ring.one()
        # a product of linear forms through corpus points keeps roots rational
        for _ in range(rng.randint(1, 2)):
            j = rng.randrange(n)
            g = g * (ring.var(j) - rng.choice([r for r, _ in ci.roots[j]]))
            if n > 1 and rng.random() < 0.5:
                k = rng.randrange(n)
                g = g * (ring.var(k) - rng.choice([r for r, _ in ci.roots[k]]))
        gens.append(g)
    X = Subscheme.from_generators(gens)
    return Instance("generators", X, seed, gens)


MAKERS = {"points": make_points, "fat": make_fat, "ci": make_ci, "generators": make_generators}


def make_instance(seed, kind=None, n=None):
    rng = random.Random(seed)
    kind = kind or KINDS[seed % len(KINDS)]
    n = n or rng.choice((1, 2, 2, 3))
    return MAKERS[kind](rng, n, seed)


def corpus(count=100, seed=0, kinds=KINDS):
    """``count`` nonempty instances, cycling through the requested kinds."""
    out = []
    s = seed
    while len(out) < count:
        inst = make_instance(s, kinds[len(out) % len(kinds)])
        s += 1
        if not inst.X.empty:
            out.append(inst)
    return out


def random_hermite(rng, max_r=8, max_mult=4):
    """``(nodes, jets)`` with at most ``max_r + 1`` nodes; jets are random small rationals."""
    total = rng.randint(1, max_r + 1)
    nodes = []
    distinct = rng.sample(range(-3, 4), k=min(total, 7))
    while len(nodes) < total:
        p = rng.choice(distinct)
        if nodes.count(p) < max_mult:
            nodes.append(p)
    rng.shuffle(nodes)
    jets = {}
    for p in set(nodes):
        for k in range(nodes.count(p)):
            jets[(p, k)] = Scalar.coerce(rng.randint(-3, 3))
    return nodes, jets
