"""Coordinate model of H_2(Sigma_g x T^2) = Z^(4g+2).

A class is stored as the integer vector

    (a_1, b_1, c_1, d_1, ..., a_g, b_g, c_g, d_g, e, f)

against the ordered basis

    T_{x_i y}, T_{z_i t}, T_{x_i t}, -T_{z_i y}   (i = 1..g),  S,  -F

where S = [Sigma_g x pt] and F = [pt x T^2].  The last coordinate is the
coefficient of -F, not of F.  With this basis the intersection form is the
orthogonal sum of 2g+1 hyperbolic planes.

All arithmetic is on Python ints, so coordinates are unbounded.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import ContextMismatchError, InvalidIndexError, MinGenusError, ParseError

__all__ = [
    "GenusContext",
    "ClassH2",
    "BASIS_KINDS",
    "basis_class",
    "intersect",
    "self_intersection",
    "pair_with_F",
    "divisibility",
    "intersection_matrix",
    "random_class",
    "parse_class",
]

# offsets of a, b, c, d inside one handle block
A, B, C, D = range(4)


@dataclass(frozen=True)
class GenusContext:
    g: int

    def __post_init__(self):
        if not isinstance(self.g, int) or isinstance(self.g, bool) or self.g < 1:
            raise MinGenusError(f"genus must be a positive integer, got {self.g!r}")

    @property
    def rank(self) -> int:
        return 4 * self.g + 2


def _ctx(g) -> GenusContext:
    return g if isinstance(g, GenusContext) else GenusContext(g)


@dataclass(frozen=True)
class ClassH2:
    """A second homology class of Sigma_g x T^2 in the fixed basis."""

    g: int
    coords: tuple

    def __post_init__(self):
        GenusContext(self.g)
        coords = tuple(self.coords)
        if len(coords) != 4 * self.g + 2:
            raise MinGenusError(
                f"expected {4 * self.g + 2} coordinates for g={self.g}, got {len(coords)}")
        for x in coords:
            if not isinstance(x, int) or isinstance(x, bool):
                raise MinGenusError(f"coordinates must be integers, got {x!r}")
        object.__setattr__(self, "coords", coords)

    # -- construction -------------------------------------------------------

    @classmethod
    def from_parts(cls, handles: Sequence[Sequence[int]], e: int = 0, f: int = 0) -> "ClassH2":
        flat = []
        for h in handles:
            if len(h) != 4:
                raise MinGenusError(f"handle must have 4 entries, got {list(h)!r}")
            flat.extend(h)
        return cls(len(handles), tuple(flat) + (e, f))

    @classmethod
    def zero(cls, g: int) -> "ClassH2":
        return cls(g, (0,) * (4 * g + 2))

    # -- accessors ----------------------------------------------------------

    @property
    def ctx(self) -> GenusContext:
        return GenusContext(self.g)

    @property
    def e(self) -> int:
        return self.coords[-2]

    @property
    def f(self) -> int:
        return self.coords[-1]

    def handle(self, i: int) -> tuple:
        """The quadruple (a_i, b_i, c_i, d_i), 1-based."""
        if not 1 <= i <= self.g:
            raise InvalidIndexError(f"handle index {i} outside 1..{self.g}")
        k = 4 * (i - 1)
        return self.coords[k:k + 4]

    @property
    def handles(self) -> list:
        return [self.coords[4 * k:4 * k + 4] for k in range(self.g)]

    def a(self, i):
        return self.handle(i)[A]

    def b(self, i):
        return self.handle(i)[B]

    def c(self, i):
        return self.handle(i)[C]

    def d(self, i):
        return self.handle(i)[D]

    def handle_square(self, i: int) -> int:
        """Self-intersection of the i-th handle component, 2(a_i b_i + c_i d_i)."""
        a, b, c, d = self.handle(i)
        return 2 * (a * b + c * d)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def tensor_part(self) -> "ClassH2":
        return ClassH2(self.g, self.coords[:-2] + (0, 0))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "ClassH2"):
        if not isinstance(other, ClassH2):
            return NotImplemented
        if other.g != self.g:
            raise ContextMismatchError(f"classes over genus {self.g} and {other.g}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return ClassH2(self.g, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return ClassH2(self.g, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return ClassH2(self.g, tuple(-x for x in self.coords))

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return ClassH2(self.g, tuple(k * x for x in self.coords))

    __rmul__ = __mul__

    # -- serialisation ------------------------------------------------------

    def to_json(self) -> dict:
        return {"g": self.g, "handles": [list(h) for h in self.handles], "e": self.e, "f": self.f}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __str__(self):
        hs = " ".join(",".join(map(str, h)) for h in self.handles)
        return f"({hs} | {self.e},{self.f})"


def parse_class(obj) -> ClassH2:
    """Build a class from its literal, either a JSON string or a decoded dict.

    The literal is ``{"g": 2, "handles": [[a1,b1,c1,d1],[a2,b2,c2,d2]], "e": e, "f": f}``.
    """
    if isinstance(obj, (str, bytes)):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"class literal is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("class literal must be a JSON object")
    unknown = set(obj) - {"g", "handles", "e", "f"}
    if unknown:
        raise ParseError(f"unknown keys in class literal: {sorted(unknown)}")
    handles = obj.get("handles")
    if not isinstance(handles, list):
        raise ParseError("class literal needs 'handles', a list of quadruples")
    g = obj.get("g", len(handles))
    if g != len(handles):
        raise ParseError(f"g={g} but {len(handles)} handles given")
    try:
        return ClassH2.from_parts(handles, obj.get("e", 0), obj.get("f", 0))
    except (MinGenusError, TypeError) as exc:
        raise ParseError(str(exc)) from None


BASIS_KINDS = ("Txy", "Tzt", "Txt", "MinusTzy", "S", "MinusF")


def basis_class(kind: str, g, i: int | None = None) -> ClassH2:
    """Unit vector for one basis slot, e.g. ``basis_class("Tzt", 2, 1)``."""
    ctx = _ctx(g)
    v = [0] * ctx.rank
    if kind == "S":
        v[-2] = 1
    elif kind == "MinusF":
        v[-1] = 1
    elif kind in BASIS_KINDS:
        if i is None or not 1 <= i <= ctx.g:
            raise InvalidIndexError(f"{kind} needs an index in 1..{ctx.g}, got {i}")
        v[4 * (i - 1) + BASIS_KINDS.index(kind)] = 1
    else:
        raise MinGenusError(f"unknown basis kind {kind!r}")
    return ClassH2(ctx.g, tuple(v))


def intersect(s: ClassH2, t: ClassH2) -> int:
    if s.g != t.g:
        raise ContextMismatchError(f"classes over genus {s.g} and {t.g}")
    x, y = s.coords, t.coords
    # consecutive coordinate pairs are hyperbolic planes
    return sum(x[k] * y[k + 1] + x[k + 1] * y[k] for k in range(0, len(x), 2))


def self_intersection(s: ClassH2) -> int:
    x = s.coords
    return 2 * sum(x[k] * x[k + 1] for k in range(0, len(x), 2))


def pair_with_F(s: ClassH2) -> int:
    """sigma . F.  Since S . (-F) = 1 this is -e; only |e| is ever used."""
    return -s.e


def divisibility(s: ClassH2) -> int:
    return reduce(math.gcd, s.coords, 0)


def intersection_matrix(g) -> tuple:
    """The (4g+2)x(4g+2) Gram matrix, block diagonal with copies of [[0,1],[1,0]]."""
    n = _ctx(g).rank
    return tuple(
        tuple(1 if (c == r + 1 and r % 2 == 0) or (c == r - 1 and r % 2 == 1) else 0
              for c in range(n))
        for r in range(n))


def random_class(rng, g: int, lo: int = -9, hi: int = 9) -> ClassH2:
    """Uniform class with every coordinate in [lo, hi]; ``rng`` is a ``random.Random``."""
    return ClassH2(g, tuple(rng.randint(lo, hi) for _ in range(4 * g + 2)))


def mat_vec(m: Sequence[Sequence[int]], v: Iterable[int]) -> tuple:
    v = tuple(v)
    return tuple(sum(r[k] * v[k] for k in range(len(v)) if r[k]) for r in m)


def mat_mul(m: Sequence[Sequence[int]], n: Sequence[Sequence[int]]) -> tuple:
    cols = list(zip(*n))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in m)


def transpose(m) -> tuple:
    return tuple(zip(*m))


def identity(n: int) -> tuple:
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
