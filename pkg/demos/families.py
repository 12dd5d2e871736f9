"""One-parameter families over k[t] and the passage from exact sequences to families."""
from quiverdegen.decompose import is_isomorphic
from quiverdegen.degeneration import decide_deg
from quiverdegen.dvr import FamilyRep, check_dvr_degeneration, rz_to_family
from quiverdegen.linalg import FieldSpec
from quiverdegen.quiver import Quiver, Representation, direct_sum


def show(m):
    return [[m.field.format(x) for x in row] for row in m.rows]


F5 = FieldSpec.prime(5)
a2 = Quiver.linear_a(2)
p = Representation.projective(a2, F5, "1")
s12 = direct_sum([Representation.simple(a2, F5, "1"), Representation.simple(a2, F5, "2")], a2, F5).rep

arrow_t = FamilyRep.build(a2, F5, (1, 1), {"a1": [["t"]]})
print("arrow [t]: special fiber", show(arrow_t.special_fiber().maps[0]),
      "generic fiber", show(arrow_t.generic_fiber().maps[0]))
print("check (P1, S1+S2, [t]):", check_dvr_degeneration(p, s12, arrow_t).passed)
r = check_dvr_degeneration(s12, p, arrow_t)
print("check (S1+S2, P1, [t]):", r.passed, r.notes)

w = decide_deg(p, s12).witness
fam = rz_to_family(w)
print("family built from the exact sequence:", [[x.format() for x in row] for row in fam.maps[0].rows])
print("it passes the check:", check_dvr_degeneration(p, s12, fam).passed)
print("fiberwise equal to arrow [t]:",
      all(is_isomorphic(fam.evaluate(c), arrow_t.evaluate(c)) is not None for c in range(5)))
