import pytest

from quiverdegen.decompose import is_indecomposable, is_isomorphic
from quiverdegen.degeneration import NO, YES, check_obstruction, verify_rz_witness
from quiverdegen.enumeration import (
    EnumerationBoundError,
    candidate_count,
    enumerate_indecomposables,
    enumerate_modules,
)
from quiverdegen.linalg import FieldSpec
from quiverdegen.poset import build_poset, hasse_diagram, verify_partial_order
from quiverdegen.quiver import Quiver
from quiverdegen.roots import count_positive_roots, positive_roots

F2, F3, F5, F7 = (FieldSpec.prime(p) for p in (2, 3, 5, 7))
A2, A3, D4 = Quiver.linear_a(2), Quiver.linear_a(3), Quiver.d4()


def test_root_oracle():
    assert count_positive_roots(2, A2.underlying_edges()) == 3
    assert count_positive_roots(3, A3.underlying_edges()) == 6
    assert count_positive_roots(4, D4.underlying_edges()) == 12
    assert (1, 1, 1, 2) in positive_roots(4, D4.underlying_edges())
    kronecker = [(0, 1), (0, 1)]
    with pytest.raises(ValueError):
        positive_roots(2, kronecker)


@pytest.mark.parametrize("q, bound, count", [(A2, (1, 1), 3), (A3, (1, 1, 1), 6), (D4, (1, 1, 1, 2), 12)])
def test_indecomposable_counts(q, bound, count):
    found = enumerate_indecomposables(q, bound, F2)
    assert len(found) == count
    assert sorted(x.dims for x in found) == sorted(positive_roots(len(q.vertices), q.underlying_edges()))
    for x in found:
        assert is_indecomposable(x).indecomposable
    for i, x in enumerate(found):
        for y in found[i + 1:]:
            assert is_isomorphic(x, y) is None


def test_enumeration_bounds():
    with pytest.raises(EnumerationBoundError):
        enumerate_indecomposables(A2, (4, 1), F2)
    with pytest.raises(EnumerationBoundError):
        enumerate_indecomposables(A2, (1, 1), F7)
    assert candidate_count(A2, (1, 1), 2) >= 2


def test_enumerate_modules():
    assert [m.name for m in enumerate_modules(A2, (1, 1), F2)] == ["P1", "S1+S2"]
    assert [m.name for m in enumerate_modules(A2, (2, 2), F2)] == ["2P1", "P1+S1+S2", "2S1+2S2"]
    (zero,) = enumerate_modules(A2, (0, 0), F2)
    assert zero.total_dim == 0


def test_hasse_examples():
    p = hasse_diagram(A2, (1, 1), F5)
    assert p.hasse_labels() == [("P1", "S1+S2")]
    p = hasse_diagram(A2, (2, 2), F3)
    assert sorted(p.hasse_labels()) == [("2P1", "P1+S1+S2"), ("P1+S1+S2", "2S1+2S2")]
    assert p.unknown == []
    single = hasse_diagram(A2, (1, 0), F2)
    assert single.labels == ["S1"] and single.hasse == []
    assert verify_partial_order(single).passed


def test_poset_certificates():
    p = hasse_diagram(A3, (1, 1, 1), F2)
    rep = verify_partial_order(p)
    assert rep.passed and not rep.gaps
    n = len(p.nodes)
    for i in range(n):
        for j in range(n):
            v = p.verdicts[i][j]
            if v.status == YES:
                verify_rz_witness(v.witness)
            elif v.status == NO:
                assert check_obstruction(p.nodes[i], p.nodes[j], v.obstruction)


def test_dot_output():
    dot = hasse_diagram(A2, (1, 1), F2).to_dot()
    assert dot.startswith("digraph") and 'label="S1+S2"' in dot and "n0 -> n1;" in dot


def test_antisymmetry_violation_detected():
    # forge S1+S2 <= P on top of the genuine P <= S1+S2
    nodes = enumerate_modules(A2, (1, 1), F2)
    p = build_poset(nodes)
    p.verdicts[1][0] = p.verdicts[0][1]
    rep = verify_partial_order(p)
    assert not rep.antisymmetric and not rep.passed


def test_field_independence():
    shapes = set()
    for F in (F2, F3, F5):
        p = hasse_diagram(A2, (2, 2), F)
        shapes.add(tuple(sorted(p.hasse_labels())))
    assert len(shapes) == 1
