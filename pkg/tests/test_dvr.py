import random

import pytest

from quiverdegen.decompose import is_isomorphic
from quiverdegen.degeneration import decide_deg, extension_degeneration, trivial_witness
from quiverdegen.dvr import FamilyRep, check_dvr_degeneration, family_to_witness, rz_to_family
from quiverdegen.linalg import ExactMatrix, FieldSpec
from quiverdegen.quiver import Quiver, QuiverError, Representation, RepMorphism, direct_sum, hom_dim, hom_basis

F5 = FieldSpec.prime(5)
A2 = Quiver.linear_a(2)


@pytest.fixture
def a2():
    p = Representation.projective(A2, F5, "1")
    s1, s2 = Representation.simple(A2, F5, "1"), Representation.simple(A2, F5, "2")
    return p, s1, s2, direct_sum([s1, s2], A2, F5).rep


def fam(entry):
    return FamilyRep.build(A2, F5, (1, 1), {"a1": [[entry]]})


def test_fibers(a2):
    p, _, _, s12 = a2
    assert is_isomorphic(fam("t").special_fiber(), s12) is not None
    assert is_isomorphic(fam("1").special_fiber(), p) is not None
    assert is_isomorphic(fam("1+t").special_fiber(), p) is not None
    K = FieldSpec.rational_functions(F5)
    for e, expected in [("t", K.t), ("1", K.one), ("1+t", K.one + K.t)]:
        g = fam(e).generic_fiber()
        assert g.field == K and g.maps[0][0, 0] == expected


def test_check_examples(a2):
    p, _, _, s12 = a2
    assert check_dvr_degeneration(p, s12, fam("t")).passed
    assert check_dvr_degeneration(p, p, fam("1")).passed
    r = check_dvr_degeneration(s12, p, fam("t"))
    assert not r.passed and not r.generic_ok and "generic" in r.notes


def test_family_relations_and_shapes():
    with pytest.raises(QuiverError):
        FamilyRep.build(A2, F5, (1, 2), {"a1": [["t"]]})


def test_rz_to_family_examples(a2):
    p, s1, s2, s12 = a2
    w = decide_deg(p, s12).witness
    f = rz_to_family(w)
    for c in range(5):
        assert is_isomorphic(f.evaluate(F5.coerce(c)), fam("t").evaluate(F5.coerce(c))) is not None
    assert check_dvr_degeneration(p, s12, f).passed
    triv = rz_to_family(trivial_witness(p, p, RepMorphism.identity(p)))
    assert all(m.nrows == 0 or all(x.degree <= 0 for row in m.rows for x in row) for m in triv.maps)
    assert check_dvr_degeneration(p, p, triv).passed
    ext = extension_degeneration(hom_basis(s2, p)[0])
    assert check_dvr_degeneration(ext.m, ext.n, rz_to_family(ext)).passed


def test_constant_families_and_semicontinuity(a2):
    p, s1, s2, s12 = a2
    rng = random.Random(11)
    for m in (p, s1, s12, direct_sum([p, s2], A2, F5).rep):
        assert check_dvr_degeneration(m, m, FamilyRep.constant(m)).passed
    for e in ("t", "1", "1+t", "t+t^2"):
        f = fam(e)
        g = f.generic_fiber()
        for c in rng.sample(range(5), 3):
            x = f.evaluate(F5.coerce(c))
            assert hom_dim(g, g) <= hom_dim(x, x)
            # evaluation commutes with direct sums
            both = FamilyRep(A2, F5, (2, 2), (ExactMatrix.block_diag(f.ring, [f.maps[0], f.maps[0]]),))
            assert both.evaluate(F5.coerce(c)).same_data(direct_sum([x, x], A2, F5).rep)


def test_family_to_witness(a2):
    p, _, _, s12 = a2
    r = family_to_witness(p, s12, fam("t"))
    assert r.status == "yes" and r.witness.verify()
