"""Representations of A2 = (1 -> 2): Hom spaces, Ext, kernels and cokernels."""
from quiverdegen.decompose import is_isomorphic
from quiverdegen.linalg import FieldSpec
from quiverdegen.quiver import Quiver, Representation, direct_sum, ext1_dim, hom_basis, hom_dim, kernel_cokernel

F5 = FieldSpec.prime(5)
a2 = Quiver.linear_a(2)
p = Representation.projective(a2, F5, "1")
s1 = Representation.simple(a2, F5, "1")
s2 = Representation.simple(a2, F5, "2")

for x in (s1, s2, p):
    print(f"dim Hom({x.name}, P1) = {hom_dim(x, p)}   dim Hom(P1, {x.name}) = {hom_dim(p, x)}")
print("Ext^1(S1, S2) =", ext1_dim(s1, s2), " Ext^1(S2, S1) =", ext1_dim(s2, s1))

# S2 sits inside P; its cokernel is S1
u = hom_basis(s2, p)[0]
kc = kernel_cokernel(u)
print("coker(S2 -> P1) has dims", kc.cokernel.dims, "and is S1:", is_isomorphic(kc.cokernel, s1) is not None)

s12 = direct_sum([s1, s2], a2, F5).rep
print("P1 isomorphic to S1+S2?", is_isomorphic(p, s12) is not None)
