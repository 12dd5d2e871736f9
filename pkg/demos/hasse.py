"""Degeneration posets for small dimension vectors, printed as DOT."""
from quiverdegen.linalg import FieldSpec
from quiverdegen.poset import hasse_diagram, verify_partial_order
from quiverdegen.quiver import Quiver

a2, a3 = Quiver.linear_a(2), Quiver.linear_a(3)
for q, dv, p in [(a2, (1, 1), 5), (a2, (2, 2), 3), (a3, (1, 1, 1), 2)]:
    poset = hasse_diagram(q, dv, FieldSpec.prime(p))
    report = verify_partial_order(poset)
    print(f"dims {dv} over F_{p}: {len(poset.nodes)} classes, edges {poset.hasse_labels()}, "
          f"unknown {len(poset.unknown)}, partial order {report.passed}")

print(hasse_diagram(a2, (2, 2), FieldSpec.prime(2)).to_dot())
