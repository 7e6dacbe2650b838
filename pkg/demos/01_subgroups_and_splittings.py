"""
Congruence subgroups of GL(2, Z) and their splittings
=====================================================

Every integer matrix of determinant +-1 splits uniquely as k @ h with k in
the six-element group K6 and h congruent to the identity mod 2.
"""

from gl2surgery import IntMat2, classify, decompose_gl2, decompose_h2, k6_elements

# K6 is generated by an order-3 and an order-2 matrix
for k in k6_elements():
    print(f"{str(k):>12}   mod 2: {k.mod(2)}")

# The monodromy that matters most: ((0, 1), (1, 1))
m = IntMat2.parse("0,1;1,1")
k, h = decompose_gl2(m)
print("\nm =", m)
print("K6 part:", k, "  H2 part:", h)
assert k @ h == m

# The H2 part splits once more, into a diagonal sign and an element of H4
sign, h4 = decompose_h2(h)
print("sign:", sign, "  H4 part:", h4)

# Membership vector for a few matrices
for text in ("1,0;2,1", "-1,0;0,-1", "0,1;-1,-1", "3,2;4,3"):
    x = IntMat2.parse(text)
    members = [tag for tag, ok in classify(x).items() if ok]
    print(f"{text:>10}: {', '.join(members)}")
