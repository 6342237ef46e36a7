"""
The minimal genus function
==========================

G is 0 on the zero class, 1 + |s.s|/2 + (g-1)|e| when the square or e is
non-zero, 1 for tensor classes u (x) v + n(-F), and 2 otherwise.
"""
from mingenus import (adjunction_bound, basis_class, complexity_x, complexity_xc,
                      decompose_tensor, minimal_genus, parse_class)

g = 2
examples = {
    "section S": basis_class("S", g),
    "fibre -F": basis_class("MinusF", g),
    "2Txy + 3Tzt": 2 * basis_class("Txy", g, 1) + 3 * basis_class("Tzt", g, 1),
    "Txy1 + Txt2": basis_class("Txy", g, 1) + basis_class("Txt", g, 2),
    "rank one": parse_class('{"handles": [[2, -15, 5, 6], [0, 0, 0, 0]], "f": 4}'),
}

print(f"{'class':14s} {'G':>3s} {'bound':>5s}  case")
for name, s in examples.items():
    r = minimal_genus(s)
    print(f"{name:14s} {r.value:3d} {adjunction_bound(s):5d}  {r.case.value}")

# only the last row type beats the adjunction bound, by exactly one
s = examples["Txy1 + Txt2"]
print("complexity x =", complexity_x(s), " x_c =", complexity_xc(s))

# tensor classes come with their factorisation
fac = decompose_tensor(examples["rank one"])
print("u =", fac.u, " v =", fac.v, " n =", fac.n, " rebuilds:", fac.to_class() == examples["rank one"])
