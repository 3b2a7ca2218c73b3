import pytest
from hypothesis import given
from hypothesis import strategies as st

from gridfp.lattice import (
    Direction,
    GridSpec,
    format_direction,
    format_point,
    iter_grid,
    lex_cmp,
    linf_dist,
    parse_direction,
    parse_point,
    step,
    unit_delta,
)

points = st.integers(min_value=-50, max_value=50)


def pt(dim):
    return st.tuples(*([points] * dim))


class TestLexCmp:
    def test_examples(self):
        assert lex_cmp((1, 2), (1, 3)) == -1
        assert lex_cmp((2, 1), (1, 9)) == 1
        assert lex_cmp((4, 4), (4, 4)) == 0

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            lex_cmp((1, 2), (1, 2, 3))

    @given(pt(3), pt(3), pt(3))
    def test_total_order(self, a, b, c):
        assert lex_cmp(a, b) == -lex_cmp(b, a)
        if lex_cmp(a, b) <= 0 and lex_cmp(b, c) <= 0:
            assert lex_cmp(a, c) <= 0
        assert lex_cmp(a, b) == 0 or lex_cmp(a, b) in (-1, 1)


class TestLinfDist:
    def test_examples(self):
        assert linf_dist((1, 1), (2, 3)) == 2
        assert linf_dist((5, 5), (5, 5)) == 0
        assert linf_dist((1, 4, 2), (3, 4, 1)) == 2

    @given(pt(3), pt(3), pt(3))
    def test_metric(self, a, b, c):
        assert linf_dist(a, b) == linf_dist(b, a)
        assert linf_dist(a, b) >= 0
        assert linf_dist(a, c) <= linf_dist(a, b) + linf_dist(b, c)


class TestStep:
    def test_examples(self):
        assert step((1, 1), Direction(2, 1)) == (1, 2)
        assert step((3, 3), Direction(1, -1)) == (2, 3)
        assert step((1, 1, 1), Direction(3, 1)) == (1, 1, 2)

    @given(pt(3), st.integers(1, 3), st.sampled_from([-1, 1]))
    def test_step_inverse(self, p, axis, sign):
        s = Direction(axis, sign)
        assert step(step(p, s), -s) == p


def test_unit_delta():
    assert unit_delta((1, 1), (1, 2)) == Direction(2, 1)
    with pytest.raises(ValueError):
        unit_delta((1, 1), (2, 2))


def test_serialization_round_trip():
    assert format_point((1, 2, 3)) == "(1,2,3)"
    assert parse_point("(1,2,3)") == (1, 2, 3)
    assert format_direction(Direction(3, 1)) == "+e3"
    assert format_direction(Direction(1, -1)) == "-e1"
    assert parse_direction("+e3") == Direction(3, 1)
    assert parse_direction("-e1") == Direction(1, -1)


def test_iter_grid_lex_order():
    pts = list(iter_grid(GridSpec(2, 3)))
    assert pts[0] == (1, 1)
    assert pts[-1] == (3, 3)
    assert len(pts) == 9
    assert pts == sorted(pts)
