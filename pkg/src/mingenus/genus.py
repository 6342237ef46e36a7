"""Minimal genus function of Sigma_g x T^2 and the quantities around it."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import reduce

from .errors import DomainError, UnsupportedContextError
from .homology import ClassH2, self_intersection

__all__ = [
    "Case",
    "GenusResult",
    "TensorFactorization",
    "factor_rank_one",
    "handle_matrix",
    "decompose_tensor",
    "minimal_genus",
    "adjunction_bound",
    "complexity_x",
    "complexity_xc",
    "thurston_norm_pushforward",
]


class Case(str, Enum):
    ZERO = "Zero"
    ADJUNCTION = "AdjunctionCase"
    TORUS = "TorusCase"
    OTHERWISE = "OtherwiseCase"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class GenusResult:
    value: int
    case: Case

    def to_json(self):
        return {"value": self.value, "case": self.case.value}


@dataclass(frozen=True)
class TensorFactorization:
    """sigma = u (x) v + n(-F).

    ``u`` lists the coefficients of x_1, z_1, ..., x_g, z_g; ``v = (p, q)``
    those of y, t.  Canonical form: u is primitive with positive leading
    entry (or zero), and v carries all the content.
    """

    u: tuple
    v: tuple
    n: int

    def to_class(self, g: int | None = None) -> ClassH2:
        g = len(self.u) // 2 if g is None else g
        p, q = self.v
        coords = []
        for i in range(g):
            al, be = self.u[2 * i], self.u[2 * i + 1]
            coords += [al * p, be * q, al * q, -be * p]
        return ClassH2(g, tuple(coords) + (0, self.n))

    def is_trivial(self) -> bool:
        """True when u (x) v == 0."""
        return not any(self.u) or not any(self.v)

    def to_json(self):
        return {"u": list(self.u), "v": list(self.v), "n": self.n}


def handle_matrix(handles) -> list:
    """The 2g x 2 matrix with rows (a_i, c_i) and (-d_i, b_i)."""
    rows = []
    for a, b, c, d in handles:
        rows.append((a, c))
        rows.append((-d, b))
    return rows


def factor_rank_one(rows) -> tuple | None:
    """Write an integer k x 2 matrix as w (x) (p, q), w primitive.

    Returns ``(w, (p, q))`` or None when the rank is 2.  The zero matrix gives
    ``w = 0, (p, q) = (0, 0)``.
    """
    col_y = [r[0] for r in rows]
    col_t = [r[1] for r in rows]
    col = col_y if any(col_y) else col_t
    if not any(col):
        return tuple(0 for _ in rows), (0, 0)
    content = reduce(math.gcd, col, 0)
    w = [x // content for x in col]
    lead = next(x for x in w if x)
    if lead < 0:
        w = [-x for x in w]
    k = next(j for j, x in enumerate(w) if x)
    p, q = col_y[k] // w[k], col_t[k] // w[k]
    for j, (y, t) in enumerate(rows):
        if y != w[j] * p or t != w[j] * q:
            return None
    return tuple(w), (p, q)


def decompose_tensor(s: ClassH2) -> TensorFactorization | None:
    """Factor s as u (x) v + n(-F) when possible, else None."""
    if s.e:
        return None
    fac = factor_rank_one(handle_matrix(s.handles))
    if fac is None:
        return None
    u, v = fac
    return TensorFactorization(u, v, s.f)


def _is_decomposable(s: ClassH2) -> bool:
    # rank <= 1 of the handle matrix: every 2x2 minor of rows (a_i, c_i), (-d_i, b_i) vanishes
    if s.e:
        return False
    rows = handle_matrix(s.handles)
    nz = [r for r in rows if r[0] or r[1]]
    if not nz:
        return True
    y0, t0 = nz[0]
    return all(y0 * t == t0 * y for y, t in nz[1:])


def minimal_genus(s: ClassH2) -> GenusResult:
    """Least genus of a connected embedded surface representing s.

    0 for the zero class; 1 + |s.s|/2 + (g-1)|s.F| whenever s.s or s.F is
    non-zero; 1 for a non-zero class of the form u (x) v + n(-F); 2 otherwise.
    """
    sq = self_intersection(s)
    e = s.e
    if sq or e:
        return GenusResult(1 + abs(sq) // 2 + (s.g - 1) * abs(e), Case.ADJUNCTION)
    if s.is_zero():
        return GenusResult(0, Case.ZERO)
    if _is_decomposable(s):
        return GenusResult(1, Case.TORUS)
    return GenusResult(2, Case.OTHERWISE)


def adjunction_bound(s: ClassH2) -> int:
    """Lower bound 1 + |s.s|/2 + (g-1)|s.F| for a non-zero class."""
    if s.is_zero():
        raise DomainError("the adjunction bound applies to non-zero classes only")
    return 1 + abs(self_intersection(s)) // 2 + (s.g - 1) * abs(s.e)


def _need_g2(s: ClassH2, what: str):
    if s.g < 2:
        raise UnsupportedContextError(f"{what} is only defined for g >= 2 (got g={s.g})")


def thurston_norm_pushforward(s: ClassH2) -> int:
    """Thurston norm of the image in H_2(Sigma_g x S^1): 2(g-1)|e|."""
    _need_g2(s, "thurston_norm_pushforward")
    return 2 * (s.g - 1) * abs(s.e)


def complexity_x(s: ClassH2) -> int:
    """Minimal complexity over possibly disconnected representatives."""
    _need_g2(s, "complexity_x")
    return abs(self_intersection(s)) + thurston_norm_pushforward(s)


def complexity_xc(s: ClassH2) -> int:
    """Minimal complexity over connected representatives."""
    x = complexity_x(s)
    return 2 if minimal_genus(s).case is Case.OTHERWISE else x
