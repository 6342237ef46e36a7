"""Genus and homology bookkeeping for building surfaces out of tori.

Nothing here embeds anything.  A surface is a (genus, class) pair, and each
cut-and-paste move updates both by its Euler characteristic rule:

    circle sum           chi = chi_1 + chi_2             (both genera >= 1)
    smoothing k points   chi = chi_1 + chi_2 - 2k        (result connected)
    connected sum        chi = chi_1 + chi_2 - 2
    base gluing          chi = chi - 2 k h               (k discs replaced by
                                                          genus-h surfaces with
                                                          one boundary circle)

:func:`replay_construction` strings these moves together into an explicit
surface for any class in normal form and returns the resulting genus together
with a transcript that can be audited with :func:`check_transcript`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import PreconditionError
from .genus import decompose_tensor
from .homology import ClassH2, basis_class, intersect, self_intersection
from .normalform import divides, full_normalize, is_normal

__all__ = [
    "SurfacePiece",
    "SurfaceInventory",
    "Step",
    "ReplayResult",
    "euler_char",
    "genus_from_chi",
    "circle_sum",
    "smooth_intersections",
    "connected_sum",
    "glue_base",
    "parallel_copies",
    "replay_construction",
    "check_transcript",
    "family_of",
]


def euler_char(genus: int) -> int:
    return 2 - 2 * genus


def genus_from_chi(chi: int) -> int:
    if chi > 2 or chi % 2:
        raise ValueError(f"no closed orientable connected surface has chi = {chi}")
    return (2 - chi) // 2


@dataclass(frozen=True)
class SurfacePiece:
    genus: int
    cls: ClassH2
    label: str = ""

    def __post_init__(self):
        if self.genus < 0:
            raise PreconditionError(f"negative genus {self.genus}")


def circle_sum(p: SurfacePiece, q: SurfacePiece, sign: int = 1, label: str = "") -> SurfacePiece:
    """Join along essential circles: genus g_p + g_q - 1, class p + sign * q."""
    if sign not in (1, -1):
        raise PreconditionError("circle sum sign must be +1 or -1")
    if p.genus < 1 or q.genus < 1:
        raise PreconditionError("circle sum needs two surfaces of positive genus")
    return SurfacePiece(p.genus + q.genus - 1, p.cls + sign * q.cls, label)


def smooth_intersections(p: SurfacePiece, q: SurfacePiece, k: int, label: str = "") -> SurfacePiece:
    """Resolve k same-sign transverse intersection points between p and q."""
    if k < 1:
        raise PreconditionError("smoothing needs at least one intersection point")
    return SurfacePiece(p.genus + q.genus + k - 1, p.cls + q.cls, label)


def connected_sum(p: SurfacePiece, q: SurfacePiece, label: str = "") -> SurfacePiece:
    return SurfacePiece(p.genus + q.genus, p.cls + q.cls, label)


def glue_base(p: SurfacePiece, points: int, handle_genus: int, label: str = "") -> SurfacePiece:
    """Replace ``points`` discs of p by copies of a genus-``handle_genus`` surface with one boundary."""
    if points < 0 or handle_genus < 0:
        raise PreconditionError("points and handle genus must be non-negative")
    return SurfacePiece(p.genus + points * handle_genus, p.cls, label)


def parallel_copies(p: SurfacePiece, k: int) -> list:
    if k < 1:
        raise PreconditionError("need at least one parallel copy")
    return [p] * k


@dataclass(frozen=True)
class Step:
    """One move: operation name, input pieces, parameters, output piece."""

    op: str
    inputs: tuple
    output: SurfacePiece
    k: int = 0
    sign: int = 1
    handle_genus: int = 0

    def line(self) -> str:
        if self.op == "new":
            return f"new: {self.output.label} g={self.output.genus} class={self.output.cls}"
        ins = " + ".join(f"[g={p.genus} {p.label or p.cls}]" for p in self.inputs)
        extra = {"smooth": f" k={self.k}", "glue_base": f" k={self.k} h={self.handle_genus}",
                 "circle_sum": f" sign={self.sign:+d}", "parallel": f" k={self.k}"}.get(self.op, "")
        return f"{self.op}{extra}: {ins} -> g={self.output.genus} class={self.output.cls}"

    def to_json(self) -> dict:
        return {"op": self.op, "k": self.k, "sign": self.sign, "handle_genus": self.handle_genus,
                "inputs": [p.genus for p in self.inputs], "genus": self.output.genus,
                "class": self.output.cls.to_json()}


class SurfaceInventory:
    """Surface pieces plus a transcript of every move made on them."""

    def __init__(self, g: int):
        self.g = g
        self.pieces: list = []
        self.transcript: list = []

    def new(self, genus: int, cls: ClassH2, label: str) -> SurfacePiece:
        p = SurfacePiece(genus, cls, label)
        self.pieces.append(p)
        self.transcript.append(Step("new", (), p))
        return p

    def _replace(self, olds, new):
        for o in olds:
            self.pieces.remove(o)
        self.pieces.append(new)
        return new

    def copies(self, p: SurfacePiece, k: int) -> list:
        out = parallel_copies(p, k)
        self.pieces.extend(out[1:])
        self.transcript.append(Step("parallel", (p,), p, k=k))
        return out

    def circle_sum(self, p, q, sign=1, label=""):
        r = circle_sum(p, q, sign, label or p.label)
        self.transcript.append(Step("circle_sum", (p, q), r, sign=sign))
        return self._replace((p, q), r)

    def smooth(self, p, q, k, label=""):
        r = smooth_intersections(p, q, k, label or p.label)
        self.transcript.append(Step("smooth", (p, q), r, k=k))
        return self._replace((p, q), r)

    def connected_sum(self, p, q, label=""):
        r = connected_sum(p, q, label or p.label)
        self.transcript.append(Step("connected_sum", (p, q), r))
        return self._replace((p, q), r)

    def glue_base(self, p, points, handle_genus, label=""):
        r = glue_base(p, points, handle_genus, label or p.label)
        self.transcript.append(Step("glue_base", (p,), r, k=points, handle_genus=handle_genus))
        return self._replace((p,), r)

    def sum_all(self, pieces, label):
        """Circle-sum a list of positive-genus pieces into one."""
        acc = pieces[0]
        for q in pieces[1:]:
            acc = self.circle_sum(acc, q, 1, label)
        return acc

    def total_class(self) -> ClassH2:
        tot = ClassH2.zero(self.g)
        for p in self.pieces:
            tot = tot + p.cls
        return tot


def check_transcript(transcript) -> bool:
    """Recompute every step from Euler characteristics and class arithmetic."""
    for st in transcript:
        ins = st.inputs
        out = st.output
        if st.op == "new":
            continue
        if st.op == "parallel":
            if out != ins[0] or st.k < 1:
                return False
            continue
        chis = [euler_char(p.genus) for p in ins]
        if st.op == "circle_sum":
            chi = chis[0] + chis[1]
            cls = ins[0].cls + st.sign * ins[1].cls
        elif st.op == "smooth":
            chi = chis[0] + chis[1] - 2 * st.k
            cls = ins[0].cls + ins[1].cls
        elif st.op == "connected_sum":
            chi = chis[0] + chis[1] - 2
            cls = ins[0].cls + ins[1].cls
        elif st.op == "glue_base":
            chi = chis[0] - 2 * st.k * st.handle_genus
            cls = ins[0].cls
        else:
            return False
        if genus_from_chi(chi) != out.genus or cls != out.cls:
            return False
    return True


@dataclass
class ReplayResult:
    genus: int
    family: str
    surface: SurfacePiece | None
    transcript: list = field(default_factory=list)

    def lines(self) -> list:
        return [st.line() for st in self.transcript]

    def to_json(self) -> dict:
        return {"genus": self.genus, "family": self.family,
                "steps": [st.to_json() for st in self.transcript]}


def family_of(s: ClassH2) -> str:
    """Which construction applies: zero, fiber_nonzero, square_nonzero, torus or otherwise."""
    if s.is_zero():
        return "zero"
    if s.e:
        return "fiber_nonzero"
    if self_intersection(s):
        return "square_nonzero"
    return "torus" if decompose_tensor(s) is not None else "otherwise"


def _sgn(x):
    return 1 if x > 0 else -1


def _torus_from_tensor(inv: SurfaceInventory, s: ClassH2, label: str) -> SurfacePiece:
    """Embedded torus for a class u (x) v + n(-F), by circle-summing primitive tori."""
    fac = decompose_tensor(s)
    assert fac is not None, s
    g = s.g
    parts = []
    if not fac.is_trivial():
        k = math.gcd(*fac.u)
        l = math.gcd(*fac.v)
        u1 = tuple(x // k for x in fac.u)
        v1 = tuple(x // l for x in fac.v)
        prim = type(fac)(u1, v1, 0).to_class(g)
        t = inv.new(1, prim, f"{label}:primitive torus")
        parts += inv.copies(t, k * l)
    if fac.n:
        fib = inv.new(1, _sgn(fac.n) * basis_class("MinusF", g), f"{label}:fiber")
        parts += inv.copies(fib, abs(fac.n))
    return inv.sum_all(parts, label)


def _handle_tori(inv: SurfaceInventory, s: ClassH2, start: int) -> list:
    """m_i parallel primitive tori for a_i T_{x_i y} + c_i T_{x_i t}, i >= start."""
    out = []
    for i in range(start, s.g + 1):
        a, _, c, _ = s.handle(i)
        if a == 0 and c == 0:
            continue
        m = math.gcd(a, c)
        cls = (a // m) * basis_class("Txy", s.g, i) + (c // m) * basis_class("Txt", s.g, i)
        t = inv.new(1, cls, f"T_{i}")
        out += inv.copies(t, m)
    return out


def _replay_fiber_nonzero(inv: SurfaceInventory, s: ClassH2) -> SurfacePiece:
    g = s.g
    a1, b1, e, f = s.a(1), s.b(1), s.e, s.f
    if a1 == 0 or not divides(a1, e):
        raise PreconditionError("need a_1 != 0 and a_1 | e")
    b_prime, r = divmod(-e * f, a1)
    assert r == 0, "b' = -e f / a_1 must be an integer"
    n = math.gcd(a1, f)
    tilde = [0] * (4 * g + 2)
    tilde[0], tilde[1], tilde[-2], tilde[-1] = a1, b_prime, e, f
    for x in tilde:
        assert x % n == 0
    t = inv.new(1, ClassH2(g, tuple(x // n for x in tilde)), "torus in T^4")
    surf = inv.sum_all(inv.copies(t, n), "Sigma~'")
    surf = inv.glue_base(surf, abs(e), g - 1, "Sigma-bar")
    k = b1 - b_prime
    if k:
        z = inv.new(1, _sgn(k) * basis_class("Tzt", g, 1), "T_{z1t}")
        assert abs(intersect(surf.cls, z.cls)) == abs(a1)
        for c in inv.copies(z, abs(k)):
            surf = inv.smooth(surf, c, abs(a1), "Sigma-bar'")
    for t in _handle_tori(inv, s, 2):
        surf = inv.circle_sum(surf, t, 1, "Sigma")
    return surf


def _replay_square_nonzero(inv: SurfaceInventory, s: ClassH2) -> SurfacePiece:
    g = s.g
    a1, b1 = s.a(1), s.b(1)
    if a1 == 0 or b1 == 0:
        raise PreconditionError("need a_1 != 0 and b_1 != 0")
    x = inv.new(1, _sgn(a1) * basis_class("Txy", g, 1), "T_{x1y}")
    A = inv.sum_all(inv.copies(x, abs(a1)), "A")
    z = inv.new(1, _sgn(b1) * basis_class("Tzt", g, 1), "T_{z1t}")
    B = inv.sum_all(inv.copies(z, abs(b1)), "B")
    surf = inv.smooth(A, B, abs(a1 * b1), "Sigma")
    rest = _handle_tori(inv, s, 2)
    if s.f:
        fib = inv.new(1, _sgn(s.f) * basis_class("MinusF", g), "fiber")
        rest += inv.copies(fib, abs(s.f))
    for t in rest:
        surf = inv.circle_sum(surf, t, 1, "Sigma")
    return surf


def _replay_otherwise(inv: SurfaceInventory, s: ClassH2) -> SurfacePiece:
    g = s.g
    if any(s.b(i) or s.d(i) for i in range(1, g + 1)):
        raise PreconditionError("expected b_i = d_i = 0 for all i")
    ys = [0] * (4 * g + 2)
    ts = [0] * (4 * g + 2)
    for i in range(g):
        ys[4 * i] = s.coords[4 * i]
        ts[4 * i + 2] = s.coords[4 * i + 2]
    ys[-1] = s.f
    A = _torus_from_tensor(inv, ClassH2(g, tuple(ys)), "A")
    B = _torus_from_tensor(inv, ClassH2(g, tuple(ts)), "B")
    return inv.connected_sum(A, B, "Sigma_2")


def replay_construction(s: ClassH2, normalize: bool = False) -> ReplayResult:
    """Build a representing surface for s from tori and count its genus.

    ``s`` must already be in normal form (see
    :func:`mingenus.normalform.is_normal`) unless ``normalize`` is set, in
    which case the normal form of ``s`` is replayed instead; a diffeomorphism
    carries that surface back to one representing ``s``.
    """
    if normalize:
        s = full_normalize(s).normal
    if not is_normal(s, 2):
        raise PreconditionError(f"class {s} is not in normal form")
    fam = family_of(s)
    inv = SurfaceInventory(s.g)
    if fam == "zero":
        surf = inv.new(0, s, "sphere")
    elif fam == "fiber_nonzero":
        surf = _replay_fiber_nonzero(inv, s)
    elif fam == "square_nonzero":
        surf = _replay_square_nonzero(inv, s)
    elif fam == "torus":
        surf = _torus_from_tensor(inv, s, "torus")
    else:
        surf = _replay_otherwise(inv, s)
    if surf.cls != s or len(inv.pieces) != 1:
        raise AssertionError(f"replay produced {surf.cls} with {len(inv.pieces)} pieces for {s}")
    return ReplayResult(surf.genus, fam, surf, inv.transcript)
