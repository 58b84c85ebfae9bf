from fractions import Fraction

import pytest

from grigorchuk.growth import (
    ball_free_product,
    ball_grigorchuk,
    entropy_series,
    free_sphere_sizes,
    growth_table_free,
)
from grigorchuk.words import is_reduced
from grigorchuk.wreath import is_trivial
from grigorchuk.words import invert, multiply


def test_free_sphere_recurrence():
    spheres = free_sphere_sizes(8)
    assert spheres[:4] == [1, 4, 6, 12]
    a, b = 1, 3
    for k in range(2, 9):
        a, b = b, 3 * a
        assert spheres[k] == a + b


def test_free_ball_closed_counts():
    assert [ball_free_product(n) for n in range(6)] == [1, 5, 11, 23, 41, 77]


def test_grigorchuk_ball_counts():
    table = ball_grigorchuk(6)
    assert table.ball_sizes() == [1, 5, 11, 23, 40, 68, 108]
    assert table.complete


def test_pipelines_agree():
    sig = ball_grigorchuk(6, use_signatures=True)
    pure = ball_grigorchuk(6, use_signatures=False)
    assert sig.ball_sizes() == pure.ball_sizes()
    assert sig.representatives == pure.representatives


def test_grigorchuk_ball_below_free_ball():
    table = ball_grigorchuk(7)
    for row in table.rows:
        assert row.ball <= ball_free_product(row.radius)


def test_representatives_are_distinct_elements():
    table = ball_grigorchuk(4)
    reps = [w for level in table.representatives for w in level]
    assert all(is_reduced(w) for w in reps)
    for i, u in enumerate(reps):
        for v in reps[i + 1:]:
            assert not is_trivial(multiply(invert(u), v))


def test_budget_marks_incomplete():
    table = ball_grigorchuk(8, budget=30)
    assert not table.complete
    assert table.ball_sizes()[-1] <= 30


def test_entropy_enclosures_bracket_and_decrease():
    series = entropy_series(8, group="free")
    for lo, hi in series:
        assert lo < hi
        assert hi - lo < Fraction(1, 10**6)
    # the tail decreases toward log of the dominant root
    mids = [(lo + hi) / 2 for lo, hi in series]
    assert all(x > y for x, y in zip(mids[1:], mids[2:]))


def test_entropy_series_grig_below_free():
    free = entropy_series(6, group="free")
    grig = entropy_series(6, group="grig")
    for (_, ghi), (flo, _) in zip(grig, free):
        assert ghi <= flo or ghi - flo < Fraction(1, 10**6)


def test_growth_table_free_rows():
    t = growth_table_free(5)
    assert [r.sphere for r in t.rows] == [1, 4, 6, 12, 18, 36]
    assert [r.ball for r in t.rows] == [1, 5, 11, 23, 41, 77]


def test_entropy_rejects_unknown_group():
    with pytest.raises(ValueError):
        entropy_series(3, group="nope")
