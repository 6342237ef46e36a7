"""Automorphisms of H_2 preserving both Q and the minimal genus function.

The group of such automorphisms contains the image of the diffeomorphism
group with index two; the non-trivial coset is represented by
:func:`exotic_phi`.  Here that is probed by exact Q checks, sampled
G-invariance checks, and a breadth-first search for words over the finite
generator set of :mod:`mingenus.mapclass`.  A search that finds nothing
is evidence, not a proof.
"""
from __future__ import annotations

import os
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .errors import BudgetExceededError, MinGenusError, UnsupportedContextError
from .genus import minimal_genus
from .homology import (ClassH2, identity, intersection_matrix, mat_mul, mat_vec,
                       random_class, transpose)
from .mapclass import GeneratorMove, _act_coords, generator_set, matrix_of, word_matrix

__all__ = [
    "CandidateAutomorphism",
    "MembershipReport",
    "SearchOutcome",
    "determinant",
    "exotic_phi",
    "from_move",
    "from_word",
    "check_membership_in_H",
    "word_search",
    "bounded_word_search",
    "DEFAULT_DEPTH",
    "DEFAULT_NODE_BUDGET",
]

DEFAULT_DEPTH = 3
DEFAULT_NODE_BUDGET = 10**6
BUDGET_ENV = "MINGENUS_NODE_BUDGET"


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant (Bareiss fraction-free elimination)."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


@dataclass(frozen=True)
class CandidateAutomorphism:
    matrix: tuple
    provenance: str = ""
    check_det: bool = True

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in r) for r in self.matrix)
        n = len(m)
        if n < 6 or (n - 2) % 4 or any(len(r) != n for r in m):
            raise MinGenusError(f"matrix must be (4g+2)x(4g+2), got {n} rows")
        object.__setattr__(self, "matrix", m)
        if self.check_det and determinant(m) not in (1, -1):
            raise MinGenusError("candidate automorphism must have determinant +-1")

    @property
    def g(self) -> int:
        return (len(self.matrix) - 2) // 4

    def __call__(self, s: ClassH2) -> ClassH2:
        return ClassH2(s.g, mat_vec(self.matrix, s.coords))

    def compose(self, other: "CandidateAutomorphism") -> "CandidateAutomorphism":
        """self after other."""
        return CandidateAutomorphism(mat_mul(self.matrix, other.matrix),
                                     f"{self.provenance} o {other.provenance}")

    def preserves_Q(self) -> bool:
        Q = intersection_matrix(self.g)
        M = self.matrix
        return mat_mul(mat_mul(transpose(M), Q), M) == Q


def exotic_phi(g: int) -> CandidateAutomorphism:
    """Negate every a_i and b_i; fix c_i, d_i, e, f."""
    if g < 2:
        raise UnsupportedContextError("the exotic automorphism is considered for g >= 2 only")
    diag = [-1, -1, 1, 1] * g + [1, 1]
    n = len(diag)
    return CandidateAutomorphism(
        tuple(tuple(diag[r] if r == c else 0 for c in range(n)) for r in range(n)), "exotic phi")


def from_move(m: GeneratorMove, g: int) -> CandidateAutomorphism:
    return CandidateAutomorphism(matrix_of(m, g), str(m))


def from_word(word: Sequence[GeneratorMove], g: int) -> CandidateAutomorphism:
    return CandidateAutomorphism(word_matrix(word, g), " ".join(map(str, word)) or "identity")


@dataclass
class MembershipReport:
    q_preserved: bool
    samples: int
    g_counterexample: ClassH2 | None = None

    @property
    def passed(self) -> bool:
        return self.q_preserved and self.g_counterexample is None

    def to_json(self):
        ce = self.g_counterexample
        return {"q_preserved": self.q_preserved, "samples": self.samples,
                "g_counterexample": None if ce is None else ce.to_json(),
                "passed": self.passed}


def check_membership_in_H(phi: CandidateAutomorphism, samples: int = 10_000, seed=0,
                          lo: int = -9, hi: int = 9) -> MembershipReport:
    """Exact Q check plus G(phi s) == G(s) on ``samples`` random classes."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    ok_q = phi.preserves_Q()
    bad = None
    for _ in range(samples):
        s = random_class(rng, phi.g, lo, hi)
        if minimal_genus(phi(s)).value != minimal_genus(s).value:
            bad = s
            break
    return MembershipReport(ok_q, samples, bad)


@dataclass
class SearchOutcome:
    word: list | None
    depth: int
    nodes: int
    generators: int
    levels: list = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.word is not None

    def summary(self) -> str:
        if self.found:
            return f"found word of length {len(self.word)}: {' '.join(map(str, self.word)) or '(empty)'}"
        return f"not found up to depth {self.depth} ({self.nodes} distinct matrices visited)"


def _budget(node_budget):
    if node_budget is not None:
        return node_budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_NODE_BUDGET


def word_search(target: CandidateAutomorphism, depth: int = DEFAULT_DEPTH,
                node_budget: int | None = None, generators=None) -> SearchOutcome:
    """Breadth-first search for a word whose matrix equals ``target``.

    States are matrices stored column by column, deduplicated exactly.  The
    node budget caps the number of distinct matrices kept; it defaults to
    ``$MINGENUS_NODE_BUDGET`` or 10**6.
    """
    if depth < 0:
        raise MinGenusError("depth must be non-negative")
    g = target.g
    n = 4 * g + 2
    budget = _budget(node_budget)
    gens = list(generators) if generators is not None else generator_set(g)
    for m in gens:
        m.check(g)
    goal = tuple(x for col in transpose(target.matrix) for x in col)
    start = tuple(x for col in identity(n) for x in col)
    parent = {start: None}
    levels = [1]
    if start == goal:
        return SearchOutcome([], depth, 1, len(gens), levels)
    frontier = deque([start])
    for level in range(1, depth + 1):
        nxt = deque()
        for state in frontier:
            for m in gens:
                v = list(state)
                for j in range(0, n * n, n):
                    col = v[j:j + n]
                    _act_coords(m.kind, m.params, m.exponent, col)
                    v[j:j + n] = col
                new = tuple(v)
                if new in parent:
                    continue
                parent[new] = (state, m)
                if new == goal:
                    word = []
                    cur = new
                    while parent[cur] is not None:
                        cur, mv = parent[cur]
                        word.append(mv)
                    word.reverse()
                    levels.append(len(nxt) + 1)
                    return SearchOutcome(word, depth, len(parent), len(gens), levels)
                if len(parent) > budget:
                    raise BudgetExceededError(
                        f"node budget {budget} exceeded at depth {level}",
                        {"nodes": len(parent), "depth_reached": level - 1,
                         "levels": levels, "generators": len(gens)})
                nxt.append(new)
        levels.append(len(nxt))
        frontier = nxt
    return SearchOutcome(None, depth, len(parent), len(gens), levels)


def bounded_word_search(target: CandidateAutomorphism, depth: int = DEFAULT_DEPTH,
                        node_budget: int | None = None, generators=None) -> list | None:
    """A word realising ``target`` of length <= depth, or None if there is none."""
    return word_search(target, depth, node_budget, generators).word
