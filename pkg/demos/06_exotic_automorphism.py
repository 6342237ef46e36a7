"""
An automorphism no diffeomorphism gives
=======================================

Negating every a_i and b_i preserves both Q and G, yet a search over words
in the generating moves finds no match.  The search is bounded, so this is
evidence and not proof.
"""
from mingenus import check_membership_in_H, exotic_phi, word_search
from mingenus.autgroup import from_word
from mingenus.mapclass import parse_word

phi = exotic_phi(2)
rep = check_membership_in_H(phi, samples=5000, seed=1)
print("preserves Q:", rep.q_preserved, "| G counterexample in 5000 samples:", rep.g_counterexample)
print("involution:", phi.compose(phi).matrix == tuple(tuple(int(i == j) for j in range(10)) for i in range(10)))

out = word_search(phi, depth=3)
print(out.summary())
print("frontier sizes per depth:", out.levels)

# for comparison, a genuine word is found again
target = from_word(parse_word("Rzx(1,2), Dzt(2)^-1"), 2)
print(word_search(target, depth=2).summary())
