import pytest

from mingenus.autgroup import (CandidateAutomorphism, bounded_word_search, check_membership_in_H,
                               determinant, exotic_phi, from_move, from_word, word_search)
from mingenus.errors import BudgetExceededError, MinGenusError, UnsupportedContextError
from mingenus.homology import ClassH2, identity, intersection_matrix, self_intersection
from mingenus.mapclass import generator_set, matrix_of, parse_move, parse_word, word_matrix


def test_exotic_example():
    s = ClassH2(2, (1, 2, 3, 4, 5, 6, 7, 8, 9, 10))
    phi = exotic_phi(2)
    assert phi(s).coords == (-1, -2, 3, 4, -5, -6, 7, 8, 9, 10)
    assert self_intersection(phi(s)) == self_intersection(s)
    assert phi.compose(phi).matrix == identity(10)
    assert phi.preserves_Q()


def test_exotic_needs_g2():
    with pytest.raises(UnsupportedContextError):
        exotic_phi(1)


def test_membership_examples():
    assert check_membership_in_H(exotic_phi(2), 2000, seed=1).passed
    for m in generator_set(2)[:10]:
        assert check_membership_in_H(from_move(m, 2), 200, seed=2).passed
    doubled = tuple(tuple(2 * x if r == c == 0 else x for c, x in enumerate(row))
                    for r, row in enumerate(identity(6)))
    rep = check_membership_in_H(CandidateAutomorphism(doubled, "diag(2,...)", check_det=False), 10)
    assert not rep.q_preserved and not rep.passed


def test_determinant():
    assert determinant(intersection_matrix(2)) == -1  # five hyperbolic planes
    assert determinant(matrix_of(parse_move("Rzx(1,2)"), 2)) == 1
    assert determinant(exotic_phi(3).matrix) == 1
    assert determinant(((2, 0), (0, 3))) == 6
    assert determinant(((0, 1), (1, 0))) == -1


def test_det_is_checked():
    bad = tuple(tuple(0 for _ in range(6)) for _ in range(6))
    with pytest.raises(MinGenusError):
        CandidateAutomorphism(bad)


def test_search_examples():
    assert bounded_word_search(CandidateAutomorphism(identity(6)), 2) == []
    rz = from_move(parse_move("Rz(1)"), 1)
    assert bounded_word_search(rz, 1) == [parse_move("Rz(1)")]
    out = word_search(exotic_phi(2), 2)
    assert not out.found and out.summary().startswith("not found up to depth 2")


def test_search_is_sound():
    target = from_word(parse_word("Rz(1),Dxy(2),Fy^-1"), 2)
    w = bounded_word_search(target, 3)
    assert w is not None and len(w) <= 3 and word_matrix(w, 2) == target.matrix


def test_budget():
    with pytest.raises(BudgetExceededError) as exc:
        word_search(exotic_phi(2), 3, node_budget=100)
    assert exc.value.stats["nodes"] > 100


def test_budget_env(monkeypatch):
    monkeypatch.setenv("MINGENUS_NODE_BUDGET", "50")
    with pytest.raises(BudgetExceededError):
        word_search(exotic_phi(2), 2)
