"""
Surgery coefficients and topological flops
==========================================

A surgery on a solid torus is a matrix of determinant 1 whose first column
is the image of the meridian. c and r = a/c mod 1 do not depend on how the
solid torus is trivialized; surgeries with c even are products of framing
changes and flops (r = 1/2).
"""

from gl2surgery import IntMat2
from gl2surgery.surgery import (
    change_framing,
    flop_decomposition,
    is_topological_flop,
    lens_space_h1,
    mobius_boundary_class,
    moebius_embeddable,
    normalize_to_h2,
    surgery_invariants,
)

s = IntMat2.parse("3,1;2,1")
print("invariants of", s, ":", surgery_invariants(s).to_record())
for m in (-2, 1, 7):
    t = change_framing(s, m)
    print(f"  framing {m:+d}: {t}  ->  {surgery_invariants(t).to_record()}")

x = IntMat2.parse("7,4;12,7")
print("\nnormalized:", normalize_to_h2(x))
word = flop_decomposition(x)
print("flop decomposition:", word)
print("all L letters are flops:", all(is_topological_flop(w.matrix) for w in word if w.kind == "L"))

# a/c surgery on the unknot gives a lens space with H_1 = Z/a
print("\n a   c   |H1|  rank mod 2")
for a, c in [(5, 2), (5, 3), (6, 1), (6, 5), (0, 1)]:
    h = lens_space_h1(a, c)
    print(f"{a:2d} {c:3d} {h.h1_order:6d} {h.h1_mod2_rank:6d}")

print("\nMobius band boundary for a = 3:", mobius_boundary_class(3))
print("(1,2) over O(2)+O(4):", moebius_embeddable((1, 2), 2, 4))
print("(3,2) over O(2)+O(2):", moebius_embeddable((3, 2), 2, 2))
