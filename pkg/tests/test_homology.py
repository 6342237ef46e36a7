import random

import pytest
from hypothesis import given, strategies as st

from mingenus.errors import ContextMismatchError, InvalidIndexError, MinGenusError, ParseError
from mingenus.homology import (ClassH2, basis_class, divisibility, intersect, intersection_matrix,
                               mat_vec, pair_with_F, parse_class, random_class, self_intersection)


def cls(*coords):
    return ClassH2((len(coords) - 2) // 4, tuple(coords))


def classes(g=None, lo=-50, hi=50):
    gs = st.integers(1, 3) if g is None else st.just(g)
    return gs.flatmap(lambda g: st.lists(st.integers(lo, hi), min_size=4 * g + 2,
                                          max_size=4 * g + 2).map(lambda c: ClassH2(g, tuple(c))))


def test_orientation_pair():
    assert intersect(basis_class("Txy", 1, 1), basis_class("Tzt", 1, 1)) == 1


def test_section_pairs_with_minus_fiber():
    assert intersect(basis_class("S", 1), basis_class("MinusF", 1)) == 1


def test_intersect_explicit_value():
    s = cls(1, 2, 3, 4, 5, 6)
    assert intersect(s, s) == 88


def test_intersect_matches_gram_matrix():
    rng = random.Random(1)
    for g in (1, 2, 3):
        Q = intersection_matrix(g)
        for _ in range(50):
            s, t = random_class(rng, g), random_class(rng, g)
            assert intersect(s, t) == sum(x * y for x, y in zip(s.coords, mat_vec(Q, t.coords)))


def test_intersect_mismatch():
    with pytest.raises(ContextMismatchError):
        intersect(ClassH2.zero(1), ClassH2.zero(2))
    with pytest.raises(ContextMismatchError):
        ClassH2.zero(1) + ClassH2.zero(2)


@pytest.mark.parametrize("s, expected", [
    (basis_class("S", 1), 0),
    (basis_class("Txy", 1, 1) + basis_class("Tzt", 1, 1), 2),
    (2 * basis_class("Txy", 1, 1) + 3 * basis_class("Tzt", 1, 1), 12),
])
def test_self_intersection_examples(s, expected):
    assert self_intersection(s) == expected


@pytest.mark.parametrize("s, expected", [
    (basis_class("S", 1), -1),
    (basis_class("Txy", 1, 1), 0),
    (3 * basis_class("S", 1) + 7 * basis_class("MinusF", 1), -3),
])
def test_pair_with_F_examples(s, expected):
    assert pair_with_F(s) == expected


def test_pair_with_F_is_intersection_with_F():
    rng = random.Random(2)
    F = -basis_class("MinusF", 2)
    for _ in range(100):
        s = random_class(rng, 2)
        assert pair_with_F(s) == intersect(s, F)


@pytest.mark.parametrize("s, expected", [
    (ClassH2.zero(1), 0),
    (2 * basis_class("Txy", 1, 1) + 4 * basis_class("S", 1), 2),
    (cls(6, 10, 15, 0, 0, 0), 1),
])
def test_divisibility_examples(s, expected):
    assert divisibility(s) == expected


def test_basis_class_examples():
    assert basis_class("Txy", 2, 1).coords == (1, 0, 0, 0, 0, 0, 0, 0, 0, 0)
    assert basis_class("S", 1).coords == (0, 0, 0, 0, 1, 0)
    assert basis_class("MinusF", 1).coords == (0, 0, 0, 0, 0, 1)
    assert basis_class("MinusTzy", 2, 2).d(2) == 1


def test_basis_class_errors():
    with pytest.raises(InvalidIndexError):
        basis_class("Txy", 2, 3)
    with pytest.raises(MinGenusError):
        basis_class("Nope", 1)
    with pytest.raises(MinGenusError):
        ClassH2(0, ())


def test_basis_is_hyperbolic():
    g = 2
    basis = [ClassH2(g, tuple(int(i == k) for i in range(4 * g + 2))) for k in range(4 * g + 2)]
    for i, s in enumerate(basis):
        for j, t in enumerate(basis):
            assert intersect(s, t) == int(i // 2 == j // 2 and i != j)


@given(classes(), st.integers(-20, 20))
def test_divisibility_scales(s, k):
    assert divisibility(k * s) == abs(k) * divisibility(s)


@given(classes(g=2), classes(g=2))
def test_intersect_bilinear_symmetric(s, t):
    assert intersect(s, t) == intersect(t, s)
    assert intersect(s + t, s + t) == self_intersection(s) + 2 * intersect(s, t) + self_intersection(t)


@given(classes())
def test_literal_round_trip(s):
    assert parse_class(s.dumps()) == s
    assert parse_class(s.to_json()) == s


def test_big_integers_are_exact():
    big = 10**40 + 7
    s = cls(big, big, 0, 0, big, 1)
    assert self_intersection(s) == 2 * big * big + 2 * big


@pytest.mark.parametrize("text", [
    "{bad", "[1,2]", '{"handles": 3}', '{"g": 2, "handles": [[0,0,0,0]]}',
    '{"handles": [[0,0,0]]}', '{"handles": [[0,0,0,0.5]]}', '{"handles": [], "e": 1}',
    '{"handles": [[0,0,0,0]], "x": 1}',
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_class(text)


def test_str_form():
    assert str(cls(1, 2, 3, 4, 5, 6)) == "(1,2,3,4 | 5,6)"
