"""Brute-force oracles, kept independent of the fast code paths they check,
plus a sampler of normal-form classes by construction family."""
from __future__ import annotations

from functools import lru_cache
from itertools import product

from .errors import UnsupportedContextError
from .homology import ClassH2, random_class, self_intersection
from .normalform import full_normalize

__all__ = ["tensor_handle_set", "brute_force_decomposable", "brute_force_factor",
           "FAMILIES", "random_normal_class"]

FAMILIES = ("fiber_nonzero", "square_nonzero", "torus", "otherwise")


def _expand(u, v):
    p, q = v
    out = []
    for i in range(0, len(u), 2):
        al, be = u[i], u[i + 1]
        out += [al * p, be * q, al * q, -be * p]
    return tuple(out)


@lru_cache(maxsize=8)
def tensor_handle_set(g: int, box: int) -> frozenset:
    """Handle coordinates of every u (x) v with all entries of u, v in [-box, box]."""
    rng = range(-box, box + 1)
    vs = list(product(rng, repeat=2))
    return frozenset(_expand(u, v) for u in product(rng, repeat=2 * g) for v in vs)


def brute_force_decomposable(s: ClassH2, box: int) -> bool:
    """Is s = u (x) v + n(-F) with u, v inside the box?

    When every coordinate of s lies in [-box, box] the box is large enough:
    choosing u primitive forces |p|, |q| <= max |coordinate| and then each
    |alpha_i|, |beta_i| is bounded the same way.
    """
    if s.e:
        return False
    return s.coords[:-2] in tensor_handle_set(s.g, box)


def brute_force_factor(s: ClassH2, box: int):
    """Enumerate one (u, v, n) with u (x) v + n(-F) == s, or None."""
    if s.e:
        return None
    rng = range(-box, box + 1)
    target = s.coords[:-2]
    for u in product(rng, repeat=2 * s.g):
        for v in product(rng, repeat=2):
            if _expand(u, v) == target:
                return u, v, s.f
    return None


def _draw(rng, g, family):
    if family == "fiber_nonzero":
        s = random_class(rng, g)
        return s if s.e else None
    if family == "square_nonzero":
        s = random_class(rng, g)
        s = ClassH2(g, s.coords[:-2] + (0, s.f))
        return s if self_intersection(s) else None
    if family == "torus":
        u = [rng.randint(-4, 4) for _ in range(2 * g)]
        v = (rng.randint(-4, 4), rng.randint(-4, 4))
        s = ClassH2(g, _expand(u, v) + (0, rng.randint(-9, 9)))
        return None if s.is_zero() else s
    s = random_class(rng, g, -2, 2)
    s = ClassH2(g, s.coords[:-2] + (0, rng.randint(-9, 9)))
    if self_intersection(s) or s.coords[:-2] in tensor_handle_set(g, 2):
        return None
    return s


def random_normal_class(rng, g: int, family: str) -> ClassH2:
    """A random class of the given family, already in normal form.

    The otherwise family is empty for g = 1, so that request raises.
    Drawing is by rejection, then :func:`full_normalize`.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if family == "otherwise" and g == 1:
        raise UnsupportedContextError("no class of genus-1 base is outside the torus case")
    while True:
        s = _draw(rng, g, family)
        if s is not None:
            return full_normalize(s).normal
