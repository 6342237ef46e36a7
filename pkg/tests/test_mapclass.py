import random

import pytest
from hypothesis import given, strategies as st

from mingenus.errors import InvalidIndexError, ParseError
from mingenus.homology import ClassH2, basis_class, intersection_matrix, random_class
from mingenus.mapclass import (GeneratorMove, act, act_power, apply_word, format_word,
                               generator_set, invert_word, matrix_of, parse_move, parse_word,
                               preserves_Q, word_matrix)
from mingenus.homology import mat_vec


def cls(*coords):
    return ClassH2((len(coords) - 2) // 4, tuple(coords))


def diag(*xs):
    return tuple(tuple(x if r == c else 0 for c, _ in enumerate(xs)) for r, x in enumerate(xs))


def test_rz_example():
    assert act(parse_move("Rz(1)"), cls(1, 2, 3, 4, 7, 8)) == cls(1, -1, 3, 5, 7, 8)


def test_dxy_example():
    assert act(parse_move("Dxy(1)"), cls(0, 0, 0, 0, 1, 0)) == cls(0, 0, 0, 1, 1, 0)


def test_fy_example():
    assert act(parse_move("Fy"), cls(1, 2, 3, 4, 0, 0)) == cls(1, -2, 4, 4, 0, 0)


def test_dzt_formula():
    assert act(parse_move("Dzt(1)"), cls(1, 2, 3, 4, 5, 6)) == cls(1, 2, 8, 4, 5, 2)


def test_rz_matrix():
    M = matrix_of(parse_move("Rz(1)"), 1)
    assert M[1] == (0, 1, -1, 0, 0, 0)
    assert M[3] == (1, 0, 0, 1, 0, 0)


def test_signflip_and_mirror_matrices():
    assert matrix_of(parse_move("SignFlip(-1)"), 1) == diag(-1, -1, -1, -1, 1, 1)
    assert matrix_of(parse_move("MirrorH"), 1) == diag(1, 1, -1, -1, -1, -1)


def test_word_examples():
    S = basis_class("S", 1)
    assert apply_word([], S) == S
    assert apply_word(parse_word("Dxy(1),Rx(1)^-1,Rz(1)^-1"), S) == cls(1, 0, 0, 0, 1, 0)
    s = cls(3, -1, 4, 1, 5, -9)
    assert apply_word(parse_word(["Rz(1)", "Rz(1)^-1"]), s) == s


def test_preserves_Q_examples():
    assert preserves_Q(parse_move("Rz(1)"), 1)
    assert preserves_Q(parse_move("Dxy(1)"), 1)
    bad = [list(r) for r in matrix_of(parse_move("Rz(1)"), 1)]
    bad[0][0] = 2
    assert not preserves_Q(tuple(map(tuple, bad)), 1)


@pytest.mark.parametrize("g", [1, 2, 3, 4])
def test_every_generator_preserves_Q(g):
    for m in generator_set(g, ordered_pairs=True):
        assert preserves_Q(m, g), m


@pytest.mark.parametrize("g", [1, 2, 3])
def test_matrix_agrees_with_action(g):
    rng = random.Random(g)
    for m in generator_set(g, ordered_pairs=True):
        M = matrix_of(m, g)
        for _ in range(5):
            s = random_class(rng, g)
            assert mat_vec(M, s.coords) == act(m, s).coords


@pytest.mark.parametrize("g", [1, 2, 3])
def test_inverse_undoes_move(g):
    rng = random.Random(10 + g)
    moves = generator_set(g, ordered_pairs=True)
    for _ in range(10**4 // 3):
        s = random_class(rng, g)
        m = rng.choice(moves)
        assert act(m.inverse, act(m, s)) == s


def test_fiber_sign_rigidity():
    for g in (1, 2, 3):
        F = basis_class("MinusF", g)
        for m in generator_set(g, ordered_pairs=True):
            assert act(m, F) in (F, -F), m


def test_powers():
    rng = random.Random(5)
    s = random_class(rng, 2)
    for text in ("Rzx(1,2)", "Dxt(2)", "Ft", "Rzz(1,2)"):
        m = parse_move(text)
        assert act_power(m, s, 3) == act(m, act(m, act(m, s)))
        assert act_power(m, s, -2) == act(m.inverse, act(m.inverse, s))
        assert act_power(m, s, 0) == s


def test_word_inverse_and_matrix():
    rng = random.Random(6)
    moves = generator_set(2, ordered_pairs=True)
    for _ in range(50):
        w = [rng.choice(moves) for _ in range(rng.randint(0, 6))]
        s = random_class(rng, 2)
        assert apply_word(invert_word(w), apply_word(w, s)) == s
        assert mat_vec(word_matrix(w, 2), s.coords) == apply_word(w, s).coords


def test_generator_counts():
    assert [len(generator_set(g)) for g in (1, 2, 3, 4)] == [18, 38, 66, 104]


def test_index_checks():
    with pytest.raises(InvalidIndexError):
        act(parse_move("Rz(3)"), ClassH2.zero(2))
    with pytest.raises(InvalidIndexError):
        act(parse_move("SignFlip(1,1)"), ClassH2.zero(1))
    with pytest.raises((InvalidIndexError, ParseError)):
        parse_move("Rzz(1,1)")


@pytest.mark.parametrize("text", ["Foo(1)", "Rz(x)", "Rz(1)^2", "Rz", "SignFlip(2)"])
def test_parse_move_errors(text):
    with pytest.raises(ParseError):
        parse_move(text)


@given(st.sampled_from(generator_set(3, ordered_pairs=True)))
def test_move_literal_round_trip(m):
    assert parse_move(str(m)) == m
    assert parse_word(format_word([m, m.inverse])) == [m, m.inverse]


def test_involutions_force_exponent_one():
    m = parse_move("MirrorH")
    assert m.inverse == m
    assert isinstance(m, GeneratorMove)


def test_q_matrix_shape():
    Q = intersection_matrix(1)
    assert Q[0] == (0, 1, 0, 0, 0, 0) and Q[5] == (0, 0, 0, 0, 1, 0)
