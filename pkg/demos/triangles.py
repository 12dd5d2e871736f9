"""Complexes, cones and triangle degenerations in the derived category of A2."""
from quiverdegen.decompose import is_isomorphic
from quiverdegen.derived import (
    Complex,
    delta_check,
    hom_dim_derived,
    homology,
    restrict_witness,
    shift_witness,
)
from quiverdegen.linalg import FieldSpec
from quiverdegen.quiver import Quiver, Representation, direct_sum, hom_basis

F5 = FieldSpec.prime(5)
a2 = Quiver.linear_a(2)
p = Representation.projective(a2, F5, "1")
s1, s2 = Representation.simple(a2, F5, "1"), Representation.simple(a2, F5, "2")
s12 = direct_sum([s1, s2], a2, F5).rep

c = Complex.from_map(hom_basis(s2, p)[0], lo=-1)
print("S2 -> P1 in degrees -1, 0: H^0 is S1?", is_isomorphic(homology(c, 0), s1) is not None,
      " H^-1 =", homology(c, -1).dims)

x, y = Complex.stalk(s1), Complex.stalk(s2)
print("dim Hom(S1, S2[n]) for n = -1..2:", [hom_dim_derived(x, y, n) for n in range(-1, 3)])

r = delta_check(Complex.stalk(p), Complex.stalk(s12))
print("P1 <=_Delta S1+S2:", r.status)
w = r.witness
print("  shifted by 2 still valid:", shift_witness(w, 2).verify())
print("  restricted to vertex 1 still valid:", restrict_witness(w, a2.full_subquiver(["1"])).verify())

back = delta_check(Complex.stalk(s12), Complex.stalk(p))
print("S1+S2 <=_Delta P1:", back.status, "via", back.obstruction["direction"], back.obstruction["X"])
