"""Splitting a disguised direct sum back into indecomposables."""
import random

from quiverdegen.decompose import decompose, is_indecomposable
from quiverdegen.linalg import FieldSpec
from quiverdegen.quiver import Quiver, Representation, direct_sum, random_conjugate


def show(m):
    return [[m.field.format(x) for x in row] for row in m.rows]


F5 = FieldSpec.prime(5)
a2 = Quiver.linear_a(2)
p = Representation.projective(a2, F5, "1")
s2 = Representation.simple(a2, F5, "2")

hidden, _ = random_conjugate(direct_sum([p, p, s2], a2, F5).rep, random.Random(42))
print("input arrow matrix:", show(hidden.maps[0]))

d = decompose(hidden, seed=42)
print("change of basis verified:", d.verify())
for block in d.blocks:
    print(f"  block dims {block.rep.dims}  certificate {block.certificate.kind}")
print("multiset:", d.multiset())

r = is_indecomposable(direct_sum([Representation.simple(a2, F5, "1"), s2], a2, F5).rep)
print("S1+S2 indecomposable?", r.indecomposable, "(splitting idempotent found)" if r.witness else "")
