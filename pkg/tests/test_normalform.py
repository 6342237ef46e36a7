import random

import pytest
from hypothesis import given, settings, strategies as st

from mingenus.homology import ClassH2, basis_class, divisibility, random_class, self_intersection
from mingenus.mapclass import apply_word, format_word
from mingenus.normalform import apply_runs, divides, full_normalize, handle_measure, is_normal, reduce_handles


def cls(*coords):
    return ClassH2((len(coords) - 2) // 4, tuple(coords))


def test_divides_convention():
    assert divides(0, 0) and not divides(0, 3) and divides(3, -9) and not divides(2, 3)


@pytest.mark.parametrize("s, lemma, expected", [
    (cls(1, 0, 0, 0, 1, 0), 2, True),
    (cls(1, 0, 0, 0, 0, 1, 0, 0, 0, 0), 1, False),
    (cls(2, 3, 0, 0, 0, 0), 2, False),
    (ClassH2.zero(3), 2, True),
])
def test_is_normal_examples(s, lemma, expected):
    assert is_normal(s, lemma) is expected


def test_reduce_handles_identity_on_normal():
    s = cls(2, 4, 0, 0, 3, 0, 0, 0, 1, 1)
    r = reduce_handles(s)
    assert r.normal == s and r.word == []


def test_reduce_handles_tzt2():
    r = reduce_handles(basis_class("Tzt", 2, 2))
    assert r.normal.b(2) == r.normal.d(2) == 0 and r.normal.c(2) == 1
    assert format_word(r.word) == ["Rx(2)", "Rz(2)"]
    assert r.verify(1)


def test_reduce_handles_square_four():
    s = cls(0, 0, 0, 0, 1, 1, 1, 1, 0, 0)
    r = reduce_handles(s)
    assert r.normal.b(2) == r.normal.d(2) == 0
    assert self_intersection(r.normal) == 4 and r.normal.e == 0
    assert apply_word(r.word, s) == r.normal and is_normal(r.normal, 1)
    assert {m.kind for m in r.word} <= {"Rz", "Rx", "Rzz", "Rzx"}


def test_full_normalize_section():
    r = full_normalize(basis_class("S", 1))
    assert r.normal == cls(1, 0, 0, 0, 1, 0)
    assert format_word(r.word) == ["Dxy(1)", "Rx(1)^-1", "Rz(1)^-1"]


def test_full_normalize_trivial_cases():
    z = ClassH2.zero(2)
    assert full_normalize(z).normal == z and full_normalize(z).word == []
    fib = 5 * basis_class("MinusF", 2)
    assert full_normalize(fib).normal == fib and full_normalize(fib).word == []


def test_phase_log_tracks_measure():
    s = random_class(random.Random(3), 3)
    r = full_normalize(s)
    labels = [label for label, _ in r.phase_log]
    assert labels[0] == "start" and r.phase_log[0][1] == s
    measures = [handle_measure(c) for label, c in r.phase_log if label.startswith("handle")]
    assert measures == sorted(measures, reverse=True) and measures[-1] == 0


@pytest.mark.parametrize("g", [1, 2, 3])
def test_random_normalization(g):
    rng = random.Random(100 + g)
    for _ in range(2000):
        s = random_class(rng, g)
        r = full_normalize(s)
        assert apply_word(r.word, s) == r.normal
        assert is_normal(r.normal, 2)
        assert r.invariants() == (self_intersection(s), s.e, divisibility(s))
        if s.e or any(s.coords[:-2]):
            assert r.normal.a(1) != 0


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3).flatmap(lambda g: st.lists(
    st.integers(-10**6, 10**6), min_size=4 * g + 2, max_size=4 * g + 2)))
def test_normalization_large_entries(coords):
    s = ClassH2((len(coords) - 2) // 4, tuple(coords))
    r = full_normalize(s)
    assert r.verify(2)
    assert r.invariants() == (self_intersection(s), s.e, divisibility(s))


def test_runs_expand_to_word():
    rng = random.Random(11)
    for _ in range(200):
        s = random_class(rng, rng.randint(1, 3))
        r = full_normalize(s)
        assert len(r.word) == r.word_length
        assert apply_word(r.word, s) == apply_runs(r.runs, s) == r.normal
        assert all(k >= 1 for _, k in r.runs)
