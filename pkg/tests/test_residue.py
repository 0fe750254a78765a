import random
from fractions import Fraction

import pytest

from resinterp import (
    PointFunctional,
    Ring,
    Scalar,
    SeparatedCI,
    Subscheme,
    annihilator,
    expand_as_points,
    global_residue,
    moment_functionals,
    parse_poly,
    tensor_ch,
    univariate_residue,
)
from resinterp.corpus import corpus, random_ideal_element, random_poly
from resinterp.matrix import in_row_span, row_space, row_span_equal
from resinterp.poly import monomials_up_to

R1 = Ring(("z",))
R2 = Ring(("z1", "z2"))
half = Scalar(Fraction(1, 2))


def P(text, ring=R2):
    return parse_poly(text, ring)


def as_table(pf):
    return {(tuple(map(str, p)), a): c for p, a, c in pf.terms}


def test_univariate_simple_pole_is_evaluation():
    f = univariate_residue([(3, 1)])
    assert f(P("z^2 + 1", R1)) == 10


def test_univariate_double_pole_is_derivative():
    f = univariate_residue([(0, 2)])
    assert f.terms == (((Scalar(0),), (1,), Scalar(1)),)
    assert f(P("5 + 7*z + z^3", R1)) == 7


def test_univariate_partial_fractions():
    f = univariate_residue([(0, 1), (1, 1)])
    assert f(P("z", R1)) == 1
    assert f(P("1", R1)) == 0


def test_univariate_merges_repeated_roots():
    assert univariate_residue([(2, 1), (2, 1)]) == univariate_residue([(2, 2)])


def test_tensor_ch_square():
    ci = SeparatedCI.from_roots(R2, [[(0, 1), (1, 1)], [(0, 1), (1, 1)]])
    assert as_table(tensor_ch(ci)) == {
        (("0", "0"), (0, 0)): 1,
        (("1", "0"), (0, 0)): -1,
        (("0", "1"), (0, 0)): -1,
        (("1", "1"), (0, 0)): 1,
    }


def test_tensor_ch_collinear():
    # 1/(z1(z1-1)) = -1/z1 + 1/(z1-1); 1/(z2(z2-1)(z2-2)) has weights 1/2, -1, 1/2
    ci = SeparatedCI.from_roots(R2, [[(0, 1), (1, 1)], [(0, 1), (1, 1), (2, 1)]])
    table = as_table(tensor_ch(ci))
    w2 = {"0": half, "1": Scalar(-1), "2": half}
    for x1, s in (("0", -1), ("1", 1)):
        for x2, w in w2.items():
            assert table[((x1, x2), (0, 0))] == w * s


def test_tensor_ch_unfactored():
    from resinterp import UnfactoredError

    with pytest.raises(UnfactoredError):
        tensor_ch(SeparatedCI([P("z1^2 - 2"), P("z2")]))


def test_global_residue_examples():
    assert global_residue(P("z^3", R1), SeparatedCI([P("z^4", R1)])) == 1
    assert global_residue(P("z", R1), SeparatedCI([P("z*(z-1)", R1)])) == 1
    sq = SeparatedCI([P("z1*(z1-1)"), P("z2*(z2-1)")])
    assert global_residue(R2.one(), sq) == 0


def test_global_residue_leading_coefficient():
    assert global_residue(P("z", R1), SeparatedCI([P("2*z^2 - 2*z", R1)])) == half


def test_square_condition(square):
    (m,) = moment_functionals(square, 1)
    assert as_table(expand_as_points(m)) == {
        (("0", "0"), (0, 0)): 1,
        (("1", "0"), (0, 0)): -1,
        (("0", "1"), (0, 0)): -1,
        (("1", "1"), (0, 0)): 1,
    }
    assert moment_functionals(square, 2) == []


def test_collinear_condition_and_twist(ex2):
    (m,) = moment_functionals(ex2, 1)
    assert (m.v_degree, m.ell, sum(m.h)) == (1, 4, 0)
    assert as_table(expand_as_points(m)) == {
        (("0", "0"), (0, 0)): half,
        (("0", "1"), (0, 0)): -1,
        (("0", "2"), (0, 0)): half,
    }


def test_collinear_constant_interpolants(ex2):
    conds = moment_functionals(ex2, 0)
    pts = ex2.points
    # g(0,0) = g(1,0) = g(0,1) = g(0,2): differences of point values
    target = []
    for k in range(1, 4):
        f = PointFunctional([(pts[0], (0, 0), 1), (pts[k], (0, 0), -1)])
        target.append([f(ex2.ring.monomial(s)) for s in ex2.basis])
    assert row_span_equal([list(m.coords) for m in conds], target, 4)
    assert sorted({m.ell for m in conds}) == [3, 4]


def test_collinear_third_twist_functional(ex2):
    """The degree-2 colon class (z2-z0)(z2-2z0) acts as -g(0,0) + g(1,0)."""
    conds = moment_functionals(ex2, 0)
    (m3,) = [m for m in conds if m.ell == 3]
    assert str(m3.v) == "z2^2 - 3*z2*z0 + 2*z0^2"
    assert as_table(expand_as_points(m3)) == {(("0", "0"), (0, 0)): -1, (("1", "0"), (0, 0)): 1}


CORPUS = corpus(40, seed=1000)


@pytest.mark.parametrize("inst", CORPUS, ids=lambda i: i.describe())
def test_moment_functional_invariants(inst):
    X = inst.X
    rng = random.Random(inst.seed)
    D = X.ci.total_degree
    for d in range(0, max(D - X.n, 0) + 1):
        conds = moment_functionals(X, d)
        for m in conds:
            assert m.ell == D - m.v_degree
            assert sum(m.h) == m.ell - d - X.n - 1
            # root-free action equals coordinates; representative independence
            g = random_poly(X.ring, rng, 3, 4)
            q = random_ideal_element(X, rng)
            c = X.coordinates(g)
            assert m(g) == m.on_coordinates(c) == m(g + q)
            # vanishes on every monomial of degree <= d
            for e in monomials_up_to(X.n, d):
                assert m(X.ring.monomial(e)) == 0


@pytest.mark.parametrize("inst", CORPUS, ids=lambda i: i.describe())
def test_conditions_shrink_as_degree_grows(inst):
    X = inst.X
    prev = None
    for d in range(0, X.ci.total_degree - X.n + 1):
        rows = [list(m.coords) for m in moment_functionals(X, d)]
        if prev is not None:
            assert all(in_row_span(prev, r, X.length) for r in rows)
        prev = rows


@pytest.mark.parametrize("inst", CORPUS, ids=lambda i: i.describe())
def test_exhaustive_enumeration_has_same_span(inst):
    X = inst.X
    for d in range(0, 2):
        fast = [list(m.coords) for m in moment_functionals(X, d)]
        full = [list(m.coords) for m in moment_functionals(X, d, exhaustive=True)]
        assert fast == full[: len(fast)]
        assert row_span_equal(fast, full, X.length)


@pytest.mark.parametrize("inst", [i for i in CORPUS if i.X.ci.roots is not None][:20],
                         ids=lambda i: i.describe())
def test_point_expansion_agrees_with_root_free_action(inst):
    X = inst.X
    for m in moment_functionals(X, 0):
        pf = expand_as_points(m)
        for s in X.basis:
            assert pf(X.ring.monomial(s)) == m(X.ring.monomial(s))


@pytest.mark.parametrize("inst", [i for i in CORPUS if i.n == 2][:10], ids=lambda i: i.describe())
def test_variable_permutation_preserves_condition_span(inst):
    """Swapping coordinates gives the same conditions, read on swapped data."""
    X = inst.X
    swap = lambda p: p.__class__(X.ring, {e[::-1]: c for e, c in p.terms.items()})
    Y = Subscheme.from_generators([swap(g) for g in inst.gens])
    for d in range(0, 3):
        # compare through the oracle-free evaluation on monomials of X
        rows_x = [[m(X.ring.monomial(s)) for s in X.basis] for m in moment_functionals(X, d)]
        rows_y = [[m(swap(X.ring.monomial(s))) for s in X.basis] for m in moment_functionals(Y, d)]
        assert row_span_equal(rows_x, rows_y, X.length)


def test_user_supplied_ci_gives_same_span(ex2):
    """A larger enclosing complete intersection presents the same conditions."""
    ci = SeparatedCI([P("z1^2*(z1-1)*(z1-3)"), P("z2*(z2-1)*(z2-2)*(z2+1)")])
    Y = Subscheme(ex2.ideal, ci=ci, gens=ex2.gens)
    for d in range(0, 5):
        a = [list(m.coords) for m in moment_functionals(ex2, d)]
        b = [list(m.coords) for m in moment_functionals(Y, d)]
        assert row_span_equal(a, b, 4)
        assert row_space(b, 4) == row_space(annihilator(ex2, d), 4)
