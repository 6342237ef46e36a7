"""
Non-trivial circle bundles
==========================

For N x S^1 with N of Euler number m != 0 the section class disappears and
the fibre becomes torsion of order |m|.  The genus formula loses its
(g-1)|e| term.
"""
from mingenus import TwistedClass, twisted_minimal_genus
from mingenus.twisted import twisted_decompose, twisted_self_intersection

rows = [
    (5, [(0, 0, 0, 0)], 3),
    (5, [(0, 0, 0, 0)], 10),
    (3, [(1, 1, 0, 0)], 0),
    (7, [(2, 3, 1, -1)], 5),
    (2, [(1, 0, 0, 0), (0, 0, 1, 0)], 1),
    (3, [(2, 0, 0, 0), (4, 0, 0, 0)], 2),
]
for m, handles, fiber in rows:
    s = TwistedClass.from_parts(m, handles, fiber)
    r = twisted_minimal_genus(s)
    fac = twisted_decompose(s)
    print(f"m={m} fibre={s.fiber} handles={handles}: s.s={twisted_self_intersection(s)} "
          f"G={r.value} ({r.case.value}) tensor={fac.to_json() if fac else None}")
