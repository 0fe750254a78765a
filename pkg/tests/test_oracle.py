import pytest

from resinterp import annihilator, evaluation_matrix, is_in_image, verify_theorem
from resinterp.corpus import corpus
from resinterp.matrix import in_row_span
from resinterp.scheme import point_value_functional


def test_is_in_image_square(square):
    from resinterp import FunctionOnX

    pts = [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert is_in_image(square, FunctionOnX.from_values(dict(zip(pts, (0, 1, 1, 2)))), 1)
    assert not is_in_image(square, FunctionOnX.from_values(dict(zip(pts, (0, 1, 1, 3)))), 1)
    assert is_in_image(square, FunctionOnX.from_values(dict(zip(pts, (7, -1, 2, 3)))), 2)


def _point_weights(X, d):
    (f,) = annihilator(X, d)
    return point_value_functional(X, f)


def proportional(a, b):
    k = next(i for i, x in enumerate(b) if x)
    r = a[k] / b[k]
    return all(x == r * y for x, y in zip(a, b))


def test_annihilator_examples(square, ex2):
    assert proportional(_point_weights(square, 1), [1, -1, -1, 1])
    assert proportional(_point_weights(ex2, 1), [1, 0, -2, 1])
    assert annihilator(square, 2) == [] and annihilator(ex2, 3) == []


def test_verify_theorem_small_cases(square, ex2):
    assert verify_theorem(square, 3).ok
    assert verify_theorem(ex2, 3).ok


@pytest.mark.parametrize("inst", corpus(30, seed=3000), ids=lambda i: i.describe())
def test_rank_nullity_and_monotonicity(inst):
    X = inst.X
    prev = None
    for d in range(0, X.ci.total_degree - X.n + 1):
        E = evaluation_matrix(X, d)
        ann = annihilator(X, d)
        assert len(ann) == X.length - E.rank()
        for f in ann:
            assert all(x == 0 for x in E.apply(f))
        if prev is not None:
            assert all(in_row_span(prev, f, X.length) for f in ann)
        prev = ann


def test_mismatch_is_reported(square):
    """A deliberately wrong condition list surfaces as a witness."""
    from resinterp import oracle

    report = oracle.TheoremReport([oracle.DegreeCheck(1, 0, 1, False, [1, 0, 0, 0])])
    assert not report.ok and report.mismatches()
    assert "MISMATCH" in report.lines()[0]
