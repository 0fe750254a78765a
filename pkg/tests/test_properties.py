"""Randomized invariants driven by hypothesis over corpus seeds.

Each example builds a fresh instance from a seed, so shrinking reports the
smallest failing seed.
"""

import io
import random
import sys

from hypothesis import assume, given, settings
from hypothesis import strategies as st

from resinterp import (
    NodeList,
    Ring,
    Subscheme,
    annihilator,
    betti_bound,
    degree_table,
    divided_difference,
    evaluation_matrix,
    find_interpolant,
    has_interpolant,
    hermite_interpolable,
    interpolation_degree,
    is_in_image,
    jet_system_consistent,
    moment_functionals,
    newton_interpolant,
    normal_form,
    taylor_coefficient,
)
from resinterp.cli import main, read_conditions_json
from resinterp.corpus import make_instance, random_hermite, random_ideal_element, random_poly
from resinterp.hermite import JetData
from resinterp.matrix import in_row_span, row_space

seeds = st.integers(0, 10**6)
R1 = Ring(("z",))


def instance(seed):
    inst = make_instance(seed)
    assume(not inst.X.empty)
    return inst


@settings(max_examples=25)
@given(seeds)
def test_span_equivalence(seed):
    X = instance(seed).X
    for d in range(betti_bound(X) + 2):
        conds = [list(m.coords) for m in moment_functionals(X, d)]
        assert row_space(conds, X.length) == row_space(annihilator(X, d), X.length)


@settings(max_examples=25)
@given(seeds)
def test_representative_independence_and_duality(seed):
    X = instance(seed).X
    rng = random.Random(seed)
    g = random_poly(X.ring, rng, 3, 5)
    for d in range(betti_bound(X) + 1):
        for m in moment_functionals(X, d):
            for _ in range(3):
                q = random_ideal_element(X, rng)
                assert m(q) == 0
                assert m(g + q) == m(g)


@settings(max_examples=25)
@given(seeds)
def test_conditions_only_shrink(seed):
    X = instance(seed).X
    prev = None
    for d in range(betti_bound(X) + 2):
        rows = [list(m.coords) for m in moment_functionals(X, d)]
        if prev is not None:
            assert all(in_row_span(prev, r, X.length) for r in rows)
        prev = rows


@settings(max_examples=25)
@given(seeds)
def test_colon_elements_are_well_defined(seed):
    inst = instance(seed)
    X = inst.X
    rng = random.Random(seed)
    ci = X.ci
    for e, vs in X.colon_basis().items():
        for v in vs:
            for q in inst.gens:
                r = random_poly(X.ring, rng, 2, 3)
                assert ci.normal_form(v.affine * q * r).is_zero()


@settings(max_examples=25)
@given(seeds, st.integers(0, 10**6))
def test_interpolation_matches_oracle(seed, gseed):
    X = instance(seed).X
    rng = random.Random(gseed)
    g = X.coordinates(random_poly(X.ring, rng, 4, 6))
    bound = betti_bound(X)
    seen = False
    for d in range(bound + 3):
        ok = has_interpolant(X, g, d)
        assert ok == is_in_image(X, g, d)
        assert ok or not seen
        seen = ok
        G = find_interpolant(X, g, d)
        assert (G is not None) == ok
        if ok:
            assert G.degree() <= d and X.coordinates(G) == g


@settings(max_examples=25)
@given(seeds)
def test_degree_table_and_bound(seed):
    inst = instance(seed)
    X = inst.X
    bound = betti_bound(X)
    deg = interpolation_degree(X)
    assert deg <= bound
    if inst.kind == "ci":
        assert deg == sum(X.ci.degrees) - X.n
    counts = list(degree_table(X, bound + 1).values())
    assert counts == sorted(counts, reverse=True)
    assert counts.index(0) == deg


@settings(max_examples=25)
@given(seeds)
def test_rank_nullity_and_shrinking_annihilator(seed):
    X = instance(seed).X
    prev = None
    for d in range(betti_bound(X) + 2):
        ann = annihilator(X, d)
        assert len(ann) + evaluation_matrix(X, d).rank() == X.length
        if prev is not None:
            assert all(in_row_span(prev, f, X.length) for f in ann)
        prev = ann


@given(seeds)
def test_newton_interpolant(seed):
    rng = random.Random(seed)
    nodes, jets = random_hermite(rng)
    G = newton_interpolant(jets, nodes)
    assert G.degree() <= len(nodes) - 1
    fact = [1, 1, 2, 6, 24]
    for (p, k), v in jets.items():
        assert taylor_coefficient(G, (p,), (k,)) * fact[k] == v
    shuffled = nodes[:]
    rng.shuffle(shuffled)
    assert newton_interpolant(jets, shuffled) == G


@given(seeds)
def test_hermite_criterion(seed):
    rng = random.Random(seed)
    nodes, jets = random_hermite(rng)
    X = Subscheme.from_nodes(R1, nodes)
    nl = NodeList(nodes)
    for d in range(len(nodes) + 1):
        assert hermite_interpolable(jets, nodes, d) == jet_system_consistent(jets, nodes, d)
        rows = [
            [divided_difference(JetData.from_poly(R1.monomial((s[0] + k,)), nl), nl) for s in X.basis]
            for k in range(nl.r - d)
        ]
        engine = [list(m.coords) for m in moment_functionals(X, d)]
        assert row_space(rows, X.length) == row_space(engine, X.length)


@settings(max_examples=25)
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=1, max_size=7, unique=True),
       st.integers(0, 3))
def test_json_round_trip(points, d):
    text = "points: " + "; ".join(f"({a},{b})" for a, b in points) + f"\nd: {d}\n"
    old, sys.stdin = sys.stdin, io.StringIO(text)
    out = io.StringIO()
    try:
        assert main(["conditions", "-", "--json"], out, io.StringIO()) == 0
    finally:
        sys.stdin = old
    X = Subscheme.from_points(Ring(("z1", "z2")), points)
    assert read_conditions_json(out.getvalue()) == [list(m.coords) for m in moment_functionals(X, d)]


@given(seeds)
def test_normal_form_respects_congruence(seed):
    X = instance(seed).X
    rng = random.Random(seed)
    p = random_poly(X.ring, rng, 3, 4)
    q = p + random_ideal_element(X, rng)
    assert normal_form(p, X.ideal) == normal_form(q, X.ideal)
    assert normal_form(normal_form(p, X.ideal), X.ideal) == normal_form(p, X.ideal)
