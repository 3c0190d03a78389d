"""
Left ideals and the simple modules
==================================

Left ideals either sit in the socle J (generated by w) or satisfy
I + J = R p(c). The simple modules Rw and V^f embed in Y and U^f.
"""

from jacobson import QQ, Poly, alpha, classify_ideal, parse, uf_act
from jacobson.prufer import MnElement, uf_from
from jacobson.simple import VfElement, act_Vf, rw_act, RwElement
from jacobson.ymodule import YElement, y_act

F = QQ
for gens in (["c - 1"], ["w", "c*d*d'"], ["v*(c - 1)"], ["c^2 + c*c' - 1"], ["c*(c - 1) + d"]):
    cl = classify_ideal([parse(g, F) for g in gens])
    print(f"{str(gens):28} {cl.case:15} {cl.status:22} p = {cl.p}")

# Rw -> Y is the identity on coordinates
m = RwElement(F(1), Poly(F, [0, 2]))
r = parse("c^2*c' + d'", F)
print("\nRw -> Y commutes with r:", y_act(r, YElement.from_rw(m)) == YElement.from_rw(rw_act(r, m)))

# V^f -> U^f sends c^inf to alpha_1
f = Poly(F, [-1, 1, 1])
emb = lambda v: uf_from(MnElement(f, 1, (v.residue,)))
v = VfElement.basis(f, 1)
print("V^f -> U^f commutes with r:", uf_act(r, emb(v)) == emb(act_Vf(r, v)))
print("image of c^inf:", emb(VfElement.basis(f, 0)) == alpha(f, 1))
