"""Randomised invariant suites, shared by the CLI ``selftest`` command.

Every suite takes a ``random.Random`` and a sample count and returns
``(passed, detail)``; :func:`run_selftest` wraps them into
:class:`CheckResult` records.  A fixed seed reproduces the run exactly.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .autgroup import check_membership_in_H, exotic_phi, word_search
from .genus import (Case, adjunction_bound, complexity_x, complexity_xc, decompose_tensor,
                    minimal_genus)
from .homology import divisibility, random_class, self_intersection
from .mapclass import act, apply_word, generator_set, preserves_Q
from .normalform import full_normalize, is_normal
from .oracles import brute_force_decomposable
from .surfcalc import check_transcript, replay_construction

__all__ = ["CheckResult", "SUITES", "run_selftest"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "detail": self.detail,
                "seconds": round(self.seconds, 3)}


def q_preservation(rng, samples):
    n = 0
    for g in (1, 2, 3, 4):
        for m in generator_set(g, ordered_pairs=True):
            if not preserves_Q(m, g):
                return False, f"{m} fails M^T Q M = Q for g={g}"
            n += 1
    return True, f"{n} move matrices"


def g_invariance(rng, samples):
    for g in (1, 2, 3):
        moves = generator_set(g)
        for _ in range(samples):
            s = random_class(rng, g)
            val = minimal_genus(s).value
            for m in moves:
                if minimal_genus(act(m, s)).value != val:
                    return False, f"G changes under {m} at {s}"
    return True, f"{samples} classes per g in 1..3"


def normal_form(rng, samples):
    for _ in range(samples):
        s = random_class(rng, rng.randint(1, 3))
        r = full_normalize(s)
        if apply_word(r.word, s) != r.normal or not is_normal(r.normal, 2):
            return False, f"bad normal form for {s}"
        if r.invariants() != (self_intersection(s), s.e, divisibility(s)):
            return False, f"invariants not conserved for {s}"
    return True, f"{samples} classes"


def decomposability(rng, samples):
    for _ in range(samples):
        s = random_class(rng, 2, -3, 3)
        if rng.random() < 0.5:
            s = type(s)(2, s.coords[:-2] + (0, s.f))
        if (decompose_tensor(s) is not None) != brute_force_decomposable(s, 3):
            return False, f"disagreement with brute force at {s}"
    return True, f"{samples} classes, g=2, box 3"


def gap_law(rng, samples):
    for _ in range(samples):
        g = rng.randint(1, 3)
        s = random_class(rng, g, -3, 3)
        if s.is_zero():
            continue
        r = minimal_genus(s)
        gap = r.value - adjunction_bound(s)
        if gap not in (0, 1) or (gap == 1) != (r.case is Case.OTHERWISE):
            return False, f"gap {gap} for {s}"
    return True, f"{samples} classes"


def replay(rng, samples):
    for _ in range(max(1, samples // 10)):
        s = random_class(rng, rng.randint(1, 3), -4, 4)
        r = replay_construction(s, normalize=True)
        if r.genus != minimal_genus(s).value or not check_transcript(r.transcript):
            return False, f"replay mismatch for {s}"
    return True, f"{max(1, samples // 10)} classes"


def complexity(rng, samples):
    for _ in range(samples):
        s = random_class(rng, rng.randint(2, 3), -3, 3)
        G = minimal_genus(s).value
        if G >= 1 and complexity_xc(s) != 2 * G - 2:
            return False, f"x_c != 2G - 2 at {s}"
        if complexity_x(s) > complexity_xc(s):
            return False, f"x > x_c at {s}"
    return True, f"{samples} classes"


def exotic(rng, samples):
    for g in (2, 3):
        phi = exotic_phi(g)
        rep = check_membership_in_H(phi, samples, rng)
        if not rep.passed:
            return False, f"exotic phi fails for g={g}: {rep.to_json()}"
    out = word_search(exotic_phi(2), 2)
    if out.found:
        return False, f"unexpected word {out.word}"
    return True, "Q and G preserved; " + out.summary()


SUITES = {
    "q_preservation": q_preservation,
    "g_invariance": g_invariance,
    "normal_form": normal_form,
    "decomposability": decomposability,
    "gap_law": gap_law,
    "replay": replay,
    "complexity": complexity,
    "exotic": exotic,
}


def run_selftest(seed: int = 0, samples: int = 1000, only=None) -> list:
    results = []
    for name, fn in SUITES.items():
        if only and name not in only:
            continue
        rng = random.Random(f"{seed}:{name}")
        t0 = time.perf_counter()
        ok, detail = fn(rng, samples)
        results.append(CheckResult(name, ok, detail, time.perf_counter() - t0))
    return results
