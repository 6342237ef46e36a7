"""H_2(N x S^1) for a non-trivial circle bundle N over Sigma_g.

For Euler number m != 0 the second homology is Z^(4g) + Z/|m|: the same
handle coordinates as in the product case, no section class S, and the fibre
class -F surviving only modulo m.  Torsion pairs trivially with everything.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import MinGenusError, ParseError
from .genus import Case, GenusResult, TensorFactorization, factor_rank_one, handle_matrix
from .homology import GenusContext

__all__ = [
    "TwistedContext",
    "TwistedClass",
    "twisted_self_intersection",
    "twisted_minimal_genus",
    "twisted_decompose",
    "parse_twisted",
]


@dataclass(frozen=True)
class TwistedContext:
    g: int
    m: int

    def __post_init__(self):
        GenusContext(self.g)
        if not isinstance(self.m, int) or self.m == 0:
            raise MinGenusError(f"bundle parameter m must be a non-zero integer, got {self.m!r}")

    @property
    def modulus(self) -> int:
        return abs(self.m)


@dataclass(frozen=True)
class TwistedClass:
    g: int
    m: int
    coords: tuple
    fiber: int = 0

    def __post_init__(self):
        ctx = TwistedContext(self.g, self.m)
        coords = tuple(self.coords)
        if len(coords) != 4 * self.g:
            raise MinGenusError(f"expected {4 * self.g} handle coordinates, got {len(coords)}")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in coords + (self.fiber,)):
            raise MinGenusError("coordinates must be integers")
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "fiber", self.fiber % ctx.modulus)

    @classmethod
    def from_parts(cls, m: int, handles, fiber: int = 0) -> "TwistedClass":
        flat = []
        for h in handles:
            if len(h) != 4:
                raise MinGenusError(f"handle must have 4 entries, got {list(h)!r}")
            flat.extend(h)
        return cls(len(handles), m, tuple(flat), fiber)

    @property
    def ctx(self) -> TwistedContext:
        return TwistedContext(self.g, self.m)

    @property
    def handles(self) -> list:
        return [self.coords[4 * k:4 * k + 4] for k in range(self.g)]

    def is_zero(self) -> bool:
        return not any(self.coords) and self.fiber == 0

    def to_json(self) -> dict:
        return {"g": self.g, "m": self.m, "handles": [list(h) for h in self.handles],
                "fiber": self.fiber}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def parse_twisted(obj) -> TwistedClass:
    """Literal ``{"g": 1, "m": 5, "handles": [[a,b,c,d]], "fiber": r}``."""
    if isinstance(obj, (str, bytes)):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"twisted class literal is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("twisted class literal must be a JSON object")
    unknown = set(obj) - {"g", "m", "handles", "fiber"}
    if unknown:
        raise ParseError(f"unknown keys in twisted class literal: {sorted(unknown)}")
    handles = obj.get("handles")
    if "m" not in obj or not isinstance(handles, list):
        raise ParseError("twisted class literal needs 'm' and a list of 'handles'")
    if obj.get("g", len(handles)) != len(handles):
        raise ParseError(f"g={obj['g']} but {len(handles)} handles given")
    try:
        return TwistedClass.from_parts(obj["m"], handles, obj.get("fiber", 0))
    except (MinGenusError, TypeError) as exc:
        raise ParseError(str(exc)) from None


def twisted_self_intersection(s: TwistedClass) -> int:
    x = s.coords
    return 2 * sum(x[k] * x[k + 1] for k in range(0, len(x), 2))


def twisted_decompose(s: TwistedClass) -> TensorFactorization | None:
    """Factor s as u (x) v + n(-F) with n the fibre residue, or None."""
    fac = factor_rank_one(handle_matrix(s.handles))
    if fac is None:
        return None
    u, v = fac
    return TensorFactorization(u, v, s.fiber)


def twisted_minimal_genus(s: TwistedClass) -> GenusResult:
    sq = twisted_self_intersection(s)
    if sq:
        return GenusResult(1 + abs(sq) // 2, Case.ADJUNCTION)
    if s.is_zero():
        return GenusResult(0, Case.ZERO)
    if twisted_decompose(s) is not None:
        return GenusResult(1, Case.TORUS)
    return GenusResult(2, Case.OTHERWISE)
