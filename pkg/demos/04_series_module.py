"""
The series module Y
===================

Y holds k w + S(c) d for a power series S. Only rational S are stored,
which is enough for every construction below and keeps equality exact.
"""

from jacobson import QQ, Poly, RationalSeries, YElement, parse, poly_at_c, solve_pc_in_Y, y_act
from jacobson.simple import RwElement, solve_poly_c_in_Rw
from jacobson.ymodule import essential_witness

F = QQ
d = YElement(F.zero, RationalSeries(Poly(F, [1])))

# in Rw, (c - 1) x = d has no solution ...
f = Poly(F, [-1, 1])
print("solve (c-1) x = d in Rw:", solve_poly_c_in_Rw(f, RwElement(F.zero, Poly(F, [1]))))

# ... but in Y it does: x = -(d + cd + c^2 d + ...)
z = solve_pc_in_Y(f, d)
print("solve (c-1) z = d in Y:", z)
print("first coefficients:", ", ".join(map(str, z.series.coeffs(6))))
print("check:", y_act(poly_at_c(f), z) == d)

# the action: d' c'^j reads off the j-th coefficient
y = YElement(F(2), RationalSeries.from_fraction(Poly(F, [0, 0, 1]), Poly(F, [1, -1, -1])))
print("\ny =", y)
print("coefficients:", ", ".join(map(str, y.series.coeffs(8))))
for j in range(5):
    print(f"  d'c'^{j} y =", y_act(parse(f"d'*c'^{j}", F), y))
print("  v y =", y_act(parse("v", F), y))

# every nonzero element reaches Rw
r, image = essential_witness(YElement(F.zero, y.series))
print("\nwitness:", r, "->", image)
