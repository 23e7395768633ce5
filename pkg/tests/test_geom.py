from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boxrig.geom import (DuplicateX, DuplicateY, GeomError, Point,
                         anti_dominates, dbl, dominates, rect_of, validate)


def P(x, y, pid=0):
    return Point(x, y, pid)


def test_dominates_examples():
    assert dominates(P(2, 2), P(1, 1))
    assert not dominates(P(2, 1), P(1, 2))
    assert not dominates(P(1, 1), P(1, 1))


def test_anti_dominates_examples():
    assert anti_dominates(P(1, 2), P(2, 1))
    assert not anti_dominates(P(2, 1), P(1, 2))
    assert not anti_dominates(P(1, 1), P(2, 2))


def test_rect_of_examples():
    r = rect_of(P(1, 3, 0), P(4, 1, 1))
    assert r.lo == (1, 1) and r.hi == (4, 3)
    assert r.support == (0, 1)
    r = rect_of(P(0, 0, 0), P(2, 2, 1))
    assert r.lo == (0, 0) and r.hi == (2, 2)
    # degenerate width-0 rect is representable even though validated sets
    # never produce shared coordinates
    r = rect_of(P(5, 5, 0), P(5, 9, 1))
    assert r.lo == (5, 5) and r.hi == (5, 9)


def test_rect_of_same_id_rejected():
    with pytest.raises(GeomError):
        rect_of(P(1, 2, 3), P(4, 5, 3))


def test_rect_symmetry():
    a, b = P(3, 7, 0), P(9, 2, 1)
    assert rect_of(a, b).lo == rect_of(b, a).lo
    assert rect_of(a, b).hi == rect_of(b, a).hi


def test_closed_containment():
    r = rect_of(P(0, 0, 0), P(4, 2, 1))
    assert r.contains(0, 1)
    assert r.contains(4, 2)
    assert r.contains(Fraction(1, 2), 0)
    assert not r.contains(5, 1)
    assert not r.contains_interior(0, 1)


def test_validate_examples():
    ps = validate([(1, 1), (2, 2)])
    assert ps.by_x == (0, 1)
    assert ps.by_y == (0, 1)
    with pytest.raises(DuplicateX) as e:
        validate([(1, 1), (1, 2)])
    assert (e.value.i, e.value.j) == (0, 1)
    with pytest.raises(DuplicateY) as e:
        validate([(1, 5), (2, 5)])
    assert (e.value.i, e.value.j) == (0, 1)


def test_validate_permutations_inverse():
    ps = validate([(5, 1), (1, 9), (3, 4)])
    assert sorted(ps.by_x) == [0, 1, 2]
    for r, i in enumerate(ps.by_x):
        assert ps.rank_x[i] == r
    for r, i in enumerate(ps.by_y):
        assert ps.rank_y[i] == r
    assert [ps.xs[i] for i in ps.by_x] == sorted(ps.xs)
    assert [ps.ys[i] for i in ps.by_y] == sorted(ps.ys)


coords_st = st.lists(
    st.tuples(st.integers(-1000, 1000), st.integers(-1000, 1000)),
    min_size=2, max_size=40,
    unique_by=(lambda c: c[0], lambda c: c[1]),
)


@given(coords_st)
def test_relation_trichotomy(coords):
    ps = validate(coords)
    for p in ps:
        for q in ps:
            if p.id == q.id:
                continue
            rels = [dominates(p, q), dominates(q, p),
                    anti_dominates(p, q), anti_dominates(q, p)]
            assert sum(rels) == 1


def test_dbl():
    assert dbl(3) == 6
    assert dbl(Fraction(5, 2)) == 5
    with pytest.raises(GeomError):
        dbl(Fraction(1, 3))
