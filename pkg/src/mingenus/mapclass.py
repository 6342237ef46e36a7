"""Automorphisms of H_2(Sigma_g x T^2) induced by explicit diffeomorphisms.

Every move is a coordinate formula on (a_i, b_i, c_i, d_i, ..., e, f):

    Rz(i)     Dehn twist along z_i       b_i -= c_i,  d_i += a_i
    Rx(i)     Dehn twist along x_i       a_i -= d_i,  c_i += b_i
    Rzz(i,j)  twist along z_i + z_j      b_i, b_j -= c_i + c_j;  d_i, d_j += a_i + a_j
    Rzx(i,j)  twist along z_i + x_j      b_i += b_j - c_i;  d_i += a_i + d_j;
                                         a_j -= a_i + d_j;  c_j += b_j - c_i
    Dxy(i)    fibre shear                d_i += e,  f -= c_i
    Dzt(i)                               c_i += e,  f -= d_i
    Dxt(i)                               b_i += e,  f -= a_i
    Dzy(i)                               a_i += e,  f -= b_i
    Fy        (y, t) -> (y, t + y)       b_i -= d_i,  c_i += a_i   (all i)
    Ft        (y, t) -> (y + t, t)       a_i += c_i,  d_i -= b_i   (all i)
    SignFlip(eps)                        handle i multiplied by eps_i
    MirrorH   x -> x, z -> -z, y -> y, t -> -t
                                         (a, b, c, d, e, f) -> (a, b, -c, -d, -e, -f)

In each shear the coordinates read on the right-hand side are left fixed by
the move, so the k-th power just scales the increments by k.  Inverses are
taken that way, never by inverting a matrix.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import InvalidIndexError, ParseError
from .homology import ClassH2, intersection_matrix, mat_mul, transpose

__all__ = [
    "GeneratorMove",
    "MOVE_KINDS",
    "act",
    "act_power",
    "apply_word",
    "invert_word",
    "matrix_of",
    "word_matrix",
    "preserves_Q",
    "parse_move",
    "parse_word",
    "format_word",
    "generator_set",
]

INDEXED = ("Rz", "Rx", "Dxy", "Dzt", "Dxt", "Dzy")
PAIRED = ("Rzz", "Rzx")
GLOBAL = ("Fy", "Ft", "MirrorH")
MOVE_KINDS = INDEXED + PAIRED + GLOBAL + ("SignFlip",)
INVOLUTIONS = ("SignFlip", "MirrorH")


@dataclass(frozen=True)
class GeneratorMove:
    kind: str
    params: tuple = ()
    exponent: int = 1

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        if self.kind not in MOVE_KINDS:
            raise InvalidIndexError(f"unknown move kind {self.kind!r}")
        if self.exponent not in (1, -1):
            raise InvalidIndexError(f"exponent must be +1 or -1, got {self.exponent!r}")
        p = self.params
        if self.kind in INDEXED:
            ok = len(p) == 1 and p[0] >= 1
        elif self.kind in PAIRED:
            ok = len(p) == 2 and min(p) >= 1 and p[0] != p[1]
        elif self.kind == "SignFlip":
            ok = len(p) >= 1 and all(s in (1, -1) for s in p)
        else:
            ok = not p
        if not ok:
            raise InvalidIndexError(f"bad parameters {p!r} for {self.kind}")
        if self.kind in INVOLUTIONS and self.exponent == -1:
            object.__setattr__(self, "exponent", 1)

    @property
    def inverse(self) -> "GeneratorMove":
        if self.kind in INVOLUTIONS:
            return self
        return GeneratorMove(self.kind, self.params, -self.exponent)

    def check(self, g: int) -> None:
        if self.kind == "SignFlip":
            if len(self.params) != g:
                raise InvalidIndexError(f"SignFlip needs {g} signs, got {len(self.params)}")
        elif any(i > g for i in self.params):
            raise InvalidIndexError(f"{self} has an index outside 1..{g}")

    def __str__(self):
        if self.kind == "SignFlip":
            s = "SignFlip(" + ",".join("+1" if x > 0 else "-1" for x in self.params) + ")"
        elif self.params:
            s = f"{self.kind}({','.join(map(str, self.params))})"
        else:
            s = self.kind
        return s + ("^-1" if self.exponent == -1 else "")


_MOVE_RE = re.compile(r"^\s*([A-Za-z]+)\s*(?:\(([^)]*)\))?\s*(?:\^\s*([+-]?1))?\s*$")


def parse_move(text: str) -> GeneratorMove:
    """Parse a move literal such as ``"Rzx(1,2)^-1"`` or ``"SignFlip(-1,+1)"``."""
    m = _MOVE_RE.match(text)
    if not m:
        raise ParseError(f"cannot parse move literal {text!r}")
    kind, args, exp = m.groups()
    try:
        params = tuple(int(a) for a in args.split(",")) if args and args.strip() else ()
    except ValueError:
        raise ParseError(f"non-integer parameter in {text!r}") from None
    try:
        return GeneratorMove(kind, params, int(exp) if exp else 1)
    except InvalidIndexError as exc:
        raise ParseError(f"{text!r}: {exc}") from None


def parse_word(items) -> list:
    if isinstance(items, str):
        items = [s for s in re.split(r"[\s;]+|,(?![^(]*\))", items) if s]
    return [m if isinstance(m, GeneratorMove) else parse_move(m) for m in items]


def format_word(word: Iterable[GeneratorMove]) -> list:
    return [str(m) for m in word]


def _act_coords(kind: str, params: tuple, k: int, v: list) -> None:
    """Apply the k-th power of a move in place on a coordinate list."""
    if kind in INDEXED:
        o = 4 * (params[0] - 1)
        a, b, c, d = v[o:o + 4]
        if kind == "Rz":
            v[o + 1] = b - k * c
            v[o + 3] = d + k * a
        elif kind == "Rx":
            v[o] = a - k * d
            v[o + 2] = c + k * b
        else:
            e = v[-2]
            if kind == "Dxy":
                v[o + 3] = d + k * e
                v[-1] -= k * c
            elif kind == "Dzt":
                v[o + 2] = c + k * e
                v[-1] -= k * d
            elif kind == "Dxt":
                v[o + 1] = b + k * e
                v[-1] -= k * a
            else:  # Dzy
                v[o] = a + k * e
                v[-1] -= k * b
    elif kind == "Rzz":
        oi, oj = 4 * (params[0] - 1), 4 * (params[1] - 1)
        s_c = v[oi + 2] + v[oj + 2]
        s_a = v[oi] + v[oj]
        for o in (oi, oj):
            v[o + 1] -= k * s_c
            v[o + 3] += k * s_a
    elif kind == "Rzx":
        oi, oj = 4 * (params[0] - 1), 4 * (params[1] - 1)
        ai, ci = v[oi], v[oi + 2]
        bj, dj = v[oj + 1], v[oj + 3]
        v[oi + 1] += k * (bj - ci)
        v[oi + 3] += k * (ai + dj)
        v[oj] -= k * (ai + dj)
        v[oj + 2] += k * (bj - ci)
    elif kind == "Fy":
        for o in range(0, len(v) - 2, 4):
            v[o + 1] -= k * v[o + 3]
            v[o + 2] += k * v[o]
    elif kind == "Ft":
        for o in range(0, len(v) - 2, 4):
            v[o] += k * v[o + 2]
            v[o + 3] -= k * v[o + 1]
    elif kind == "SignFlip":
        if k % 2:
            for i, s in enumerate(params):
                if s < 0:
                    o = 4 * i
                    v[o:o + 4] = [-x for x in v[o:o + 4]]
    elif kind == "MirrorH":
        if k % 2:
            for o in range(0, len(v) - 2, 4):
                v[o + 2] = -v[o + 2]
                v[o + 3] = -v[o + 3]
            v[-2] = -v[-2]
            v[-1] = -v[-1]
    else:  # pragma: no cover - guarded by GeneratorMove
        raise InvalidIndexError(kind)


def act(m: GeneratorMove, s: ClassH2) -> ClassH2:
    """Image of ``s`` under one move."""
    return act_power(m, s, 1)


def act_power(m: GeneratorMove, s: ClassH2, k: int) -> ClassH2:
    """Image of ``s`` under ``m`` applied k times (k may be negative)."""
    m.check(s.g)
    v = list(s.coords)
    _act_coords(m.kind, m.params, k * m.exponent, v)
    return ClassH2(s.g, tuple(v))


def apply_word(word: Sequence[GeneratorMove], s: ClassH2) -> ClassH2:
    """Apply moves left to right: the first move in the list acts first."""
    for m in word:
        m.check(s.g)
    v = list(s.coords)
    for m in word:
        _act_coords(m.kind, m.params, m.exponent, v)
    return ClassH2(s.g, tuple(v))


def invert_word(word: Sequence[GeneratorMove]) -> list:
    return [m.inverse for m in reversed(word)]


def matrix_of(m: GeneratorMove, g: int) -> tuple:
    """Integer matrix M with act(m, s).coords == M @ s.coords."""
    m.check(g)
    n = 4 * g + 2
    cols = []
    for j in range(n):
        v = [0] * n
        v[j] = 1
        _act_coords(m.kind, m.params, m.exponent, v)
        cols.append(v)
    return transpose(cols)


def word_matrix(word: Sequence[GeneratorMove], g: int) -> tuple:
    """Matrix of the composite action of ``word`` (first move acts first)."""
    n = 4 * g + 2
    cols = []
    for j in range(n):
        v = [0] * n
        v[j] = 1
        for m in word:
            _act_coords(m.kind, m.params, m.exponent, v)
        cols.append(v)
    return transpose(cols)


def preserves_Q(m, g: int) -> bool:
    """True iff M^T Q M == Q.  ``m`` is a move or an explicit square matrix."""
    M = matrix_of(m, g) if isinstance(m, GeneratorMove) else tuple(tuple(r) for r in m)
    Q = intersection_matrix(g)
    if len(M) != len(Q) or any(len(r) != len(Q) for r in M):
        return False
    return mat_mul(mat_mul(transpose(M), Q), M) == Q


def generator_set(g: int, inverses: bool = True, ordered_pairs: bool = False) -> list:
    """Every constructible move for genus g.

    Rzz(i, j) and Rzz(j, i) are the same twist, so only i < j is listed unless
    ``ordered_pairs`` is set.  SignFlip runs over all non-trivial sign vectors.
    """
    base = []
    for i in range(1, g + 1):
        base += [GeneratorMove(k, (i,)) for k in INDEXED]
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            if i == j:
                continue
            if ordered_pairs or i < j:
                base.append(GeneratorMove("Rzz", (i, j)))
            base.append(GeneratorMove("Rzx", (i, j)))
    base += [GeneratorMove("Fy"), GeneratorMove("Ft")]
    moves = list(base)
    if inverses:
        moves += [m.inverse for m in base]
    for eps in product((1, -1), repeat=g):
        if -1 in eps:
            moves.append(GeneratorMove("SignFlip", eps))
    moves.append(GeneratorMove("MirrorH"))
    return moves
