"""Normal forms of classes under the generator moves, with certifying words.

Inside handle i the class is the 2x2 integer matrix

    [[ a_i, c_i],      row x_i: coefficients against y, t
     [-d_i, b_i]]      row z_i

Rz(i), Rx(i) are elementary row operations on it (row_z -= row_x and
row_x += row_z); Fy, Ft are elementary column operations applied to every
handle at once.  The reductions below are Euclid's algorithm driven by those
operations, with every step recorded as a move so the result is checkable
with :func:`mingenus.mapclass.apply_word`.

Words are kept run-length encoded as ``(move, count)`` pairs.  Euclid's
quotients grow with the coordinates, so the expanded word is linear in
their size while the runs stay logarithmic.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .homology import ClassH2, divisibility, self_intersection
from .mapclass import GeneratorMove, _act_coords, act_power

__all__ = [
    "NormalizationResult",
    "apply_runs",
    "expand_runs",
    "reduce_handles",
    "full_normalize",
    "is_normal",
    "divides",
    "handle_measure",
]


def divides(a: int, b: int) -> bool:
    """a | b, with 0 | b only for b == 0."""
    return b == 0 if a == 0 else b % a == 0


def handle_measure(s: ClassH2) -> int:
    """Sum of |b_i| + |d_i| over i >= 2; zero exactly at normal level 1."""
    return sum(abs(s.b(i)) + abs(s.d(i)) for i in range(2, s.g + 1))


def is_normal(s: ClassH2, lemma: int = 2) -> bool:
    """Level 1: b_i = d_i = 0 for i >= 2.  Level 2 adds c_1 = d_1 = 0, a_1 | b_1, a_1 | e."""
    if lemma not in (1, 2):
        raise ValueError("lemma must be 1 or 2")
    if handle_measure(s):
        return False
    if lemma == 1:
        return True
    a1, b1, c1, d1 = s.handle(1)
    return c1 == 0 and d1 == 0 and divides(a1, b1) and divides(a1, s.e)


def expand_runs(runs) -> list:
    return [m for m, k in runs for _ in range(k)]


def apply_runs(runs, s: ClassH2) -> ClassH2:
    for m, k in runs:
        s = act_power(m, s, k)
    return s


@dataclass
class NormalizationResult:
    source: ClassH2
    normal: ClassH2
    runs: list
    phase_log: list = field(default_factory=list)

    @property
    def word(self) -> list:
        """The certifying word with every move at exponent +-1."""
        return expand_runs(self.runs)

    @property
    def word_length(self) -> int:
        return sum(k for _, k in self.runs)

    def verify(self, lemma: int = 2) -> bool:
        return apply_runs(self.runs, self.source) == self.normal and is_normal(self.normal, lemma)

    def invariants(self) -> tuple:
        """(sigma^2, e, divisibility) of the normal class."""
        n = self.normal
        return self_intersection(n), n.e, divisibility(n)


# a word in Rx(i), Rz(i) acting as -1 on handle i
_NEGATE = (("Rx", 1), ("Rx", 1), ("Rz", 1), ("Rx", 1), ("Rx", 1), ("Rz", 1))


class _Reducer:
    """Mutable coordinate vector that logs every move applied to it."""

    def __init__(self, s: ClassH2):
        self.g = s.g
        self.v = list(s.coords)
        self.runs = []
        self.log = []

    def cls(self) -> ClassH2:
        return ClassH2(self.g, tuple(self.v))

    def phase(self, label):
        self.log.append((label, self.cls()))

    def get(self, i, k):
        return self.v[4 * (i - 1) + k]

    def move(self, kind, params=(), k=1):
        if k == 0:
            return
        _act_coords(kind, params, k, self.v)
        m = GeneratorMove(kind, params, 1 if k > 0 else -1)
        if self.runs and self.runs[-1][0] == m:
            self.runs[-1] = (m, self.runs[-1][1] + abs(k))
        else:
            self.runs.append((m, abs(k)))

    # row operations inside one handle ------------------------------------

    def clear_d(self, i):
        """Euclid on the y-column (a_i, -d_i) until d_i == 0."""
        a, d = self.get(i, 0), self.get(i, 3)
        while d:
            if a == 0:
                self.move("Rx", (i,), -1)          # a += d
            a, d = self.get(i, 0), self.get(i, 3)
            self.move("Rz", (i,), -(d // a))        # d -= (d // a) * a
            a, d = self.get(i, 0), self.get(i, 3)
            if d == 0:
                break
            self.move("Rx", (i,), a // d)           # a -= (a // d) * d
            a, d = self.get(i, 0), self.get(i, 3)

    def clear_b(self, i):
        """Euclid on the t-column (c_i, b_i) until b_i == 0."""
        c, b = self.get(i, 2), self.get(i, 1)
        while b:
            if c == 0:
                self.move("Rx", (i,), 1)           # c += b
            c, b = self.get(i, 2), self.get(i, 1)
            self.move("Rz", (i,), b // c)           # b -= (b // c) * c
            c, b = self.get(i, 2), self.get(i, 1)
            if b == 0:
                break
            self.move("Rx", (i,), -(c // b))        # c -= (c // b) * b
            c, b = self.get(i, 2), self.get(i, 1)

    def negate(self, i):
        for kind, k in _NEGATE:
            self.move(kind, (i,), k)

    def make_a_nonneg(self, i):
        if self.get(i, 0) < 0:
            self.negate(i)

    def clear_rank_one(self, i):
        """Zero b_i and d_i of a handle with a_i b_i + c_i d_i == 0."""
        self.clear_d(i)
        if self.get(i, 0) == 0:
            self.clear_b(i)
        assert self.get(i, 1) == 0 and self.get(i, 3) == 0

    # column operations (all handles) -------------------------------------

    def clear_c1(self):
        """Euclid on the x_1-row (a_1, c_1) with Fy/Ft until c_1 == 0."""
        a, c = self.get(1, 0), self.get(1, 2)
        while c:
            if a == 0:
                self.move("Ft", (), 1)             # a += c
            a, c = self.get(1, 0), self.get(1, 2)
            self.move("Fy", (), -(c // a))          # c -= (c // a) * a
            a, c = self.get(1, 0), self.get(1, 2)
            if c == 0:
                break
            self.move("Ft", (), -(a // c))          # a -= (a // c) * c
            a, c = self.get(1, 0), self.get(1, 2)


def _reduce_handles(r: _Reducer) -> None:
    r.phase("start")
    for i in range(r.g, 1, -1):
        if r.get(i, 1) == 0 and r.get(i, 3) == 0:
            continue
        a, b, c, d = r.v[4 * (i - 1):4 * i]
        if a * b + c * d:
            # move the non-zero square of handle i onto handle 1
            r.clear_d(1)
            r.clear_d(i)
            r.move("Rzz", (1, i))
            r.clear_d(1)
            r.clear_d(i)
            r.make_a_nonneg(1)
            r.make_a_nonneg(i)
            assert r.get(1, 0) == r.get(i, 0)
            r.move("Rzx", (1, i))
            assert r.get(i, 0) == 0 and r.get(i, 3) == 0
        r.clear_rank_one(i)
        r.phase(f"handle {i} cleared")


def reduce_handles(s: ClassH2) -> NormalizationResult:
    """Find a move word making b_i = d_i = 0 for every i >= 2.

    Handles are processed from g down to 2.  A handle with zero square is
    cleared by row operations alone; otherwise its square is first pushed
    onto handle 1 through Rzz(1, i) and Rzx(1, i).  The phase log records the
    class after each handle, so ``handle_measure`` is non-increasing along it.
    """
    r = _Reducer(s)
    _reduce_handles(r)
    return NormalizationResult(s, r.cls(), r.runs, r.log)


def full_normalize(s: ClassH2) -> NormalizationResult:
    """Bring ``s`` to the form b_i = d_i = 0 (i >= 2), c_1 = d_1 = 0, a_1 | b_1, a_1 | e.

    After :func:`reduce_handles`, d_1 is cleared and Dxy(1) copies e into
    d_1; handle 1 is then put in Smith form with row moves Rx/Rz and column
    moves Fy/Ft.  The column moves keep b_i = d_i = 0 for i >= 2.  a_1 ends
    up non-negative and equal to the gcd of e and the handle-1 entries, so it
    is non-zero whenever e is.
    """
    r = _Reducer(s)
    _reduce_handles(r)
    r.clear_d(1)
    if r.v[-2]:
        r.move("Dxy", (1,))
    r.phase("e moved into d_1")
    while True:
        r.clear_d(1)
        r.clear_c1()
        if r.get(1, 3):
            continue
        a, b = r.get(1, 0), r.get(1, 1)
        if a == 0 and b == 0:
            break
        if not divides(a, b):
            r.move("Rx", (1,), 1)                  # c_1 += b_1, a_1 unchanged as d_1 == 0
            continue
        break
    r.make_a_nonneg(1)
    r.phase("handle 1 in Smith form")
    return NormalizationResult(s, r.cls(), r.runs, r.log)
