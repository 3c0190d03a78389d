"""
Dividing by f(c)
================

For f with f(0) = -1 every element splits uniquely as q f(c) + r, where r is
a polynomial in c of degree below deg f. The remainder is what beta does to
the infinite path c^inf.
"""

from jacobson import QQ, Poly, divide, gf_coordinates, parse, poly_at_c, right_divide, rho

F = QQ
f = Poly(F, [-1, 1, 1])  # x^2 + x - 1
print("f =", f)

beta = parse("c^3*c'^5 + 2*d' - c*d + w", F)
q, r = divide(beta, f)
print("beta =", beta)
print("q    =", q)
print("r    =", r, "(in c)")
print("check:", q * poly_at_c(f) + poly_at_c(r) == beta)

# the remainder is read off the action on V^f = K[x]/(f)
print("rho(beta) =", rho(beta, f))

# w = -w f(c): the sink lies in every R f(c)
w = parse("w", F)
print("\nw / f(c) =", right_divide(w, f))

# iterated division gives the coordinates in R / R f(c)^n
coords, tail = gf_coordinates(parse("c^5", F), f, 3)
print("\nc^5 = " + " + ".join(f"({g})(c) f(c)^{k}" for k, g in enumerate(coords)) + f" + ({tail}) f(c)^3")

# right division by any p with p(0) != 0 is exact or fails cleanly
p = Poly(F, [2, 0, 1])
print("\n(c^2 + 2) divides", parse("c^4*c'", F), "?", right_divide(parse("c^4*c'", F), p) is not None)
print("(c^2 + 2) divides", parse("c'*(c^2 + 2)", F), "?", right_divide(parse("c'*(c^2+2)", F), p))
