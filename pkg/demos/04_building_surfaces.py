"""
Building a minimal surface
==========================

For a class in normal form the genus is realised by explicit surgery:
parallel tori, circle sums, smoothing of intersection points and
connected sums.  Every step is recorded and rechecked from Euler
characteristics.
"""
import random

from mingenus import check_transcript, minimal_genus, parse_class, replay_construction
from mingenus.oracles import FAMILIES, random_normal_class

s = parse_class('{"handles": [[1, 2, 0, 0], [0, 0, 0, 0]], "e": 1, "f": 3}')
r = replay_construction(s)
for line in r.lines():
    print(line)
print("genus", r.genus, "| formula", minimal_genus(s).value, "| chi check", check_transcript(r.transcript))

# one random class of each family, normalised first
rng = random.Random(7)
for family in FAMILIES:
    s = random_normal_class(rng, 3, family)
    r = replay_construction(s)
    print(f"{family:15s} steps={len(r.transcript):3d} genus={r.genus} G={minimal_genus(s).value}")
