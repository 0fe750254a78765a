import random

import pytest

from resinterp import (
    ConversionError,
    FunctionOnX,
    Ring,
    Subscheme,
    betti_bound,
    degree_table,
    find_interpolant,
    has_interpolant,
    interpolation_degree,
    interpolation_report,
    is_in_image,
    parse_poly,
)
from resinterp.corpus import corpus, random_poly
from resinterp.interp import violated_conditions

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]
EX2 = [(0, 0), (1, 0), (0, 1), (0, 2)]


def values(X, pts, vals):
    return FunctionOnX.from_values(dict(zip(pts, vals)))


def test_has_interpolant_square(square):
    assert has_interpolant(square, values(square, SQUARE, (0, 1, 1, 2)), 1)
    g = values(square, SQUARE, (0, 1, 1, 3))
    assert not has_interpolant(square, g, 1)
    assert has_interpolant(square, g, 2)


def test_has_interpolant_collinear(ex2):
    assert has_interpolant(ex2, values(ex2, EX2, (0, 5, 1, 2)), 1)


def test_find_interpolant_examples(square, R2):
    assert find_interpolant(square, values(square, SQUARE, (0, 1, 1, 2)), 1) == parse_poly("z1 + z2", R2)
    assert find_interpolant(square, values(square, SQUARE, (0, 1, 1, 3)), 1) is None
    assert find_interpolant(square, values(square, SQUARE, (0, 1, 1, 3)), 2) == parse_poly(
        "z1 + z2 + z1*z2", R2
    )
    R1 = Ring(("z",))
    X = Subscheme.from_generators([parse_poly("z*(z-1)", R1)])
    assert find_interpolant(X, FunctionOnX.from_values({(0,): 1, (1,): 1}), 0) == R1.one()


def test_interpolation_degree_examples(square, ex2, R2):
    assert interpolation_degree(square) == 2
    assert interpolation_degree(ex2) == 2
    assert interpolation_degree(Subscheme.from_points(R2, [(3, -1)])) == 0


def test_betti_bound_examples(square, ex2):
    assert betti_bound(square) == 4 - 0 - 2
    assert betti_bound(ex2) == 5 - 1 - 2
    R1 = Ring(("z",))
    for r in range(0, 5):
        X = Subscheme.from_nodes(R1, list(range(r + 1)))
        assert betti_bound(X) == r == interpolation_degree(X)


def test_degree_table_collinear(ex2):
    assert degree_table(ex2) == {0: 3, 1: 1, 2: 0}


def test_point_values_need_reduced_scheme(R2):
    X = Subscheme.from_generators([parse_poly("z1^2", R2), parse_poly("z2", R2)])
    with pytest.raises(ConversionError):
        has_interpolant(X, FunctionOnX.from_values({(0, 0): 1}), 0)


def test_jets_on_fat_point(R2):
    X = Subscheme.from_generators([parse_poly("z1^2", R2), parse_poly("z2", R2)])
    g = FunctionOnX.from_jets({((0, 0), (0, 0)): 2, ((0, 0), (1, 0)): 3})
    assert find_interpolant(X, g, 1) == parse_poly("3*z1 + 2", R2)
    assert not has_interpolant(X, g, 0)


def test_empty_scheme(R2):
    X = Subscheme.from_generators([parse_poly("z1", R2), parse_poly("z1 - 1", R2)])
    assert X.empty
    assert interpolation_degree(X) == 0 and betti_bound(X) == 0
    assert has_interpolant(X, random_poly(R2, random.Random(0)), 0)


def test_report(square):
    g = values(square, SQUARE, (0, 1, 1, 3))
    rep = interpolation_report(square, g, 1, with_table=True)
    assert not rep.interpolable and rep.interpolant is None
    assert rep.degree_table == {0: 3, 1: 1, 2: 0}
    rep = interpolation_report(square, g, 2)
    assert rep.interpolable and rep.interpolant.degree() <= 2


def test_violated_conditions(square):
    ((m, val),) = violated_conditions(square, values(square, SQUARE, (0, 1, 1, 3)), 1)
    assert val == 1


CORPUS = corpus(40, seed=2000)


@pytest.mark.parametrize("inst", CORPUS, ids=lambda i: i.describe())
def test_interpolation_agrees_with_oracle(inst):
    X = inst.X
    rng = random.Random(inst.seed)
    bound = betti_bound(X)
    for _ in range(3):
        g = random_poly(X.ring, rng, bound + 2, 6)
        c = X.coordinates(g)
        prev = False
        for d in range(bound + 3):
            ok = has_interpolant(X, c, d)
            assert ok == is_in_image(X, c, d)
            assert ok or not prev  # monotone in d
            prev = ok
            G = find_interpolant(X, c, d)
            assert (G is not None) == ok
            if G is not None:
                assert G.degree() <= d
                assert X.coordinates(G) == c


@pytest.mark.parametrize("inst", CORPUS, ids=lambda i: i.describe())
def test_degree_table_monotone(inst):
    X = inst.X
    deg = interpolation_degree(X)
    table = degree_table(X, betti_bound(X) + 1)
    counts = list(table.values())
    assert counts == sorted(counts, reverse=True)
    assert [d for d, k in table.items() if k == 0][0] == deg
    assert deg <= betti_bound(X)
