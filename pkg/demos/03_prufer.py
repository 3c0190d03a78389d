"""
Prufer modules
==============

M_n = R / R f(c)^n has a basis c^i f(c)^k (i < deg f, k < n). Gluing them
along f(c)-multiplication gives U^f, which is divisible by f(c) even though
no M_n is.
"""

import time

from jacobson import GF, QQ, MnElement, Poly, alpha, extend_hom_to_Uf, poly_at_c, uf_act
from jacobson.prufer import cyclic_submodules, solve_linear_in_Mn, uf_divide_by_fc

F = QQ
f = Poly(F, [-1, 1])
fc = poly_at_c(f)

for n in range(1, 5):
    sol = solve_linear_in_Mn(fc, MnElement.generator(f, n))
    print(f"f(c) X = 1 in M_{n}: {'no solution' if sol is None else sol}")

a1 = alpha(f, 1)
a2 = uf_divide_by_fc(a1)
print("\nalpha_1 =", a1)
print("alpha_1 / f(c) =", a2)
print("f(c) * that =", uf_act(fc, a2))

# extending R p(c) -> U^f to all of R
p = Poly(F, [3, -1, 2]) * f  # contains one factor of f
phi1 = extend_hom_to_Uf(p, f, a1)
print(f"\np = {p}: Phi(1) = {phi1}; p(c) Phi(1) = {uf_act(poly_at_c(p), phi1)}")

# brute-force submodule lattices over small fields: always a chain
for q, cs, n in [(3, [-1, 1], 4), (3, [-1, 1, 1], 3), (5, [-1, 1, 0, 1], 2)]:
    g = Poly(GF(q), cs)
    t0 = time.perf_counter()
    subs = cyclic_submodules(g, n)
    print(f"GF({q}), f = {g}, n = {n}: dims {[len(s) for s in subs]} ({time.perf_counter() - t0:.2f}s)")

# when f splits the picture breaks: x^2 - 1 over GF(5)
subs = cyclic_submodules(Poly(GF(5), [-1, 0, 1]), 1)
print("GF(5), f = x^2 - 1, n = 1: dims", sorted(len(s) for s in subs))
