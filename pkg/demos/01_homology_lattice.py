"""
The homology lattice of Sigma_2 x T^2
=====================================

Classes are integer vectors (a_i, b_i, c_i, d_i, ..., e, f).
"""
from mingenus import basis_class, divisibility, intersect, pair_with_F, parse_class, self_intersection
from mingenus.homology import intersection_matrix

g = 2

# the torus classes T_{x1 y} and T_{z1 t} form a hyperbolic pair
Txy = basis_class("Txy", g, 1)
Tzt = basis_class("Tzt", g, 1)
print("Txy . Tzt =", intersect(Txy, Tzt))

# so do the section S and minus the fibre
S = basis_class("S", g)
print("S . (-F) =", intersect(S, basis_class("MinusF", g)))
print("S . F    =", pair_with_F(S))

# a general class, written as a JSON literal
s = parse_class('{"g": 2, "handles": [[2, 3, 0, 1], [0, 4, 5, 0]], "e": 1, "f": -2}')
print("class        ", s)
print("self-square  ", self_intersection(s))
print("divisibility ", divisibility(s))

# the Gram matrix is block diagonal with 2g+1 copies of [[0,1],[1,0]]
for row in intersection_matrix(g):
    print(" ".join(str(x) for x in row))
