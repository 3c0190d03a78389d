"""
Canonical forms in K<X, Y | XY = 1>
===================================

The algebra is worked with as a graph algebra: one loop c at a vertex v and
one edge d from v into a sink w. Ghost edges are written c' and d'.
"""

from jacobson import GF, QQ, gen, parse, to_jacobson

F = QQ

# the translation X -> c' + d', Y -> c + d
X, Y = gen(F, "X"), gen(F, "Y")
print("X =", X)
print("Y =", Y)
print("XY =", X * Y)
print("YX =", Y * X, "   (not 1: the algebra is not directly finite)")

# the defining relations all reduce to canonical monomials
for text in ["c'*c", "d'*d", "c'*d", "d'*c", "c*c' + d*d'", "v + w"]:
    print(f"{text:>14}  ->  {parse(text, F)}")

# every basis monomial falls in one of four blocks:
# c^i c'^j, c^i d, d' c'^j and w
e = parse("(c + d)^3 * (c' + d')^2", F)
print("\n(c+d)^3 (c'+d')^2 =", e)
print("as a word in X, Y   =", to_jacobson(e))

# w = 1 - YX is the rank-one corner: c^i d d' c'^j are matrix units
e00 = parse("d*d'", F)
e11 = parse("c*d*d'*c'", F)
print("\ne_0 =", e00, "  e_1 =", e11)
print("e_0 e_1 =", e00 * e11, "  e_1 e_1 =", e11 * e11)
print("c d d' c' =", e11, "   i.e. c c' - c^2 c'^2")

# the same computations over a prime field
G = GF(7)
print("\nover GF(7): 3*c'*c*5 =", parse("3*c'*c*5", G))
