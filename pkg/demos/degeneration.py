"""Deciding P <= S1+S2 and its reverse, with certificates either way."""
import json

from quiverdegen.degeneration import decide_deg, orbit_dimension
from quiverdegen.linalg import FieldSpec
from quiverdegen.quiver import Quiver, Representation, direct_sum
from quiverdegen.serialize import verdict_to_json

F5 = FieldSpec.prime(5)
a2 = Quiver.linear_a(2)
p = Representation.projective(a2, F5, "1")
s12 = direct_sum([Representation.simple(a2, F5, "1"), Representation.simple(a2, F5, "2")], a2, F5).rep.with_name("S1+S2")

print("orbit dimensions:", orbit_dimension(p), orbit_dimension(s12))

yes = decide_deg(p, s12)
w = yes.witness
print(f"P1 <= S1+S2: {yes.status}; z = {w.z.dims}, v nilpotent, witness valid: {w.verify()}")

no = decide_deg(s12, p)
ob = no.obstruction
print(f"S1+S2 <= P1: {no.status}; {ob['direction']} dim Hom({ob['X']}, -) is {ob['hom_m']} > {ob['hom_n']}")

summary = {k: v for k, v in verdict_to_json(no)["obstruction"].items() if k != "X_rep"}
print("obstruction record:", json.dumps(summary))
