"""
Diffeomorphism moves and the normal form
========================================

Every move acts on H_2 by an integer matrix preserving the intersection
form.  Euclid's algorithm driven by these moves brings any class to the
shape (a_1, b_1, 0, 0, a_2, 0, c_2, 0, ... | e, f) with a_1 | b_1 and a_1 | e.
"""
import random

from mingenus import apply_word, full_normalize, generator_set, parse_class, parse_word
from mingenus.homology import random_class
from mingenus.mapclass import preserves_Q

# a few moves applied one after another
s = parse_class('{"handles": [[1, 2, 3, 4]], "e": 0, "f": 0}')
for literal in ("Rz(1)", "Fy", "Dxy(1)"):
    s = apply_word(parse_word(literal), s)
    print(f"after {literal:7s} {s}")

# every generator preserves Q, for each genus we try
for g in (1, 2, 3, 4):
    moves = generator_set(g, ordered_pairs=True)
    print(f"g={g}: {len(moves)} moves, all preserve Q: {all(preserves_Q(m, g) for m in moves)}")

# normalise a random class and replay the certificate
rng = random.Random(2024)
s = random_class(rng, 3)
r = full_normalize(s)
print("input  ", s)
print("normal ", r.normal)
print("word length", r.word_length, "in", len(r.runs), "runs")
print("certificate replays:", apply_word(r.word, s) == r.normal)
print("(s.s, e, div) kept:", r.invariants())

# the phase log shows handles being cleared from the last one down
for label, c in r.phase_log:
    print(f"  {label:24s} {c}")
