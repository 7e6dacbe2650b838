"""
Euclidean factorizations, checked against breadth-first search
==============================================================

The factorizations run a Euclidean reduction on one row or column. The
oracle knows nothing about that: it multiplies generators breadth first.
"""

import time

from gl2surgery import IntMat2, SubgroupTag, bfs_enumerate, verify_generation
from gl2surgery.oracle import NAMED_ALPHABETS
from gl2surgery.words import L, U, eval_word, factor_h1, factor_h2_transport, factor_h4, h4_euclid_trace

m = IntMat2.parse("5,2;2,1")
rows, _ = h4_euclid_trace(m)
print("first rows during the reduction:", rows)
print("H4 word:", factor_h4(m))

m = IntMat2.parse("3,2;4,3")
print("\nH1 word for", m, ":", factor_h1(m))
print("transport word for", m, ":", factor_h2_transport(m))

# Entries grow fast, and Python ints keep up
big = (U @ L) ** 30
word = factor_h4(big)
print(f"\n(UL)^30 has entries with {len(str(big.a))} digits; word length {len(word)}")
assert eval_word(word) == big

# Shortest words from the oracle agree in length: H4 is free on U and L
t0 = time.perf_counter()
reach = bfs_enumerate([U, L], 8)
print(f"\nBFS depth 8: {len(reach)} matrices in {time.perf_counter() - t0:.2f} s")
assert all(len(factor_h4(x)) == len(w) for x, w in reach.words.items())

report = verify_generation(NAMED_ALPHABETS["h2"], SubgroupTag.H2, entry_bound=3, depth=5)
print("H2 generators:", report.summary())
