import pytest

from quiverdegen.certify import CertificateError
from quiverdegen.decompose import is_isomorphic
from quiverdegen.degeneration import (
    NO,
    YES,
    RZWitness,
    add_summand,
    check_obstruction,
    decide_deg,
    extension_degeneration,
    hom_order_leq,
    orbit_dimension,
    rz_witness_search,
    verify_rz_witness,
)
from quiverdegen.enumeration import enumerate_modules
from quiverdegen.linalg import ExactMatrix, FieldSpec
from quiverdegen.quiver import Quiver, QuiverError, Representation, RepMorphism, direct_sum, hom_basis

F3, F5 = FieldSpec.prime(3), FieldSpec.prime(5)
A2 = Quiver.linear_a(2)


@pytest.fixture
def a2():
    p = Representation.projective(A2, F5, "1")
    s1, s2 = Representation.simple(A2, F5, "1"), Representation.simple(A2, F5, "2")
    return p, s1, s2, direct_sum([s1, s2], A2, F5).rep


def test_orbit_dimension(a2):
    p, _, _, s12 = a2
    assert orbit_dimension(p) == 1
    assert orbit_dimension(s12) == 0
    assert orbit_dimension(Representation.zero(A2, F5)) == 0


def test_hom_order(a2):
    p, s1, s2, s12 = a2
    tests = [s1, s2, p]
    assert hom_order_leq(p, s12, tests)
    r = hom_order_leq(s12, p, tests)
    assert not r and r.direction == "covariant" and r.x is s1
    assert hom_order_leq(p, p, tests)


def test_extension_degeneration(a2):
    p, s1, s2, s12 = a2
    w = extension_degeneration(hom_basis(s2, p)[0])
    assert w.m is p and is_isomorphic(w.n, direct_sum([s2, s1], A2, F5).rep) is not None
    ds = direct_sum([s1, s2], A2, F5)
    w = extension_degeneration(ds.inclusions[0])
    assert is_isomorphic(w.n, s12) is not None
    z = Representation.zero(A2, F5)
    w = extension_degeneration(RepMorphism.zero(z, p))
    assert is_isomorphic(w.n, p) is not None
    with pytest.raises(QuiverError):
        extension_degeneration(RepMorphism.zero(s2, p))


def test_rz_search_examples(a2):
    p, s1, s2, s12 = a2
    w = rz_witness_search(p, s12, dim_bound=2)
    assert w is not None and w.z.dims == (0, 1) and w.v.is_zero()
    w = rz_witness_search(p, p, dim_bound=2)
    assert w is not None and w.z.total_dim == 0
    assert rz_witness_search(s12, p, dim_bound=2) is None


def test_decide_examples(a2):
    p, s1, s2, s12 = a2
    yes = decide_deg(p, s12)
    assert yes.status == YES and yes.exit_code == 0
    verify_rz_witness(yes.witness)
    no = decide_deg(s12, p)
    assert no.status == NO and no.exit_code == 1
    assert check_obstruction(s12, p, no.obstruction)
    same = decide_deg(p, p)
    assert same.status == YES and same.witness.z.total_dim == 0
    wrong_dims = decide_deg(p, s1)
    assert wrong_dims.status == NO and wrong_dims.obstruction["condition"] == "dimension_vector"


def test_tampered_witness_rejected(a2):
    p, s1, s2, s12 = a2
    w = decide_deg(p, s12).witness
    # a non-nilpotent v must be refused
    bad_v = RepMorphism.identity(w.z)
    bad = RZWitness(w.m, w.n, w.z, bad_v, w.u, w.projection)
    with pytest.raises(CertificateError):
        verify_rz_witness(bad)
    # a projection that is not surjective must be refused
    zero_proj = RepMorphism.zero(w.projection.source, w.n)
    with pytest.raises(CertificateError):
        verify_rz_witness(RZWitness(w.m, w.n, w.z, w.v, w.u, zero_proj))


@pytest.mark.parametrize("dv", [(1, 1), (2, 2), (2, 1)])
def test_yes_verdicts_consistent(dv):
    nodes = enumerate_modules(A2, dv, F3)
    tests = [Representation.simple(A2, F3, "1"), Representation.simple(A2, F3, "2"),
             Representation.projective(A2, F3, "1")]
    for m in nodes:
        for n in nodes:
            v = decide_deg(m, n)
            if v.status != YES:
                continue
            verify_rz_witness(v.witness)
            assert hom_order_leq(m, n, tests)
            if is_isomorphic(m, n) is None:
                assert orbit_dimension(m) > orbit_dimension(n)
            # adding a common summand keeps the witness valid
            for x in tests:
                verify_rz_witness(add_summand(v.witness, x))


def test_projection_shape_check(a2):
    p, _, _, s12 = a2
    w = decide_deg(p, s12).witness
    comps = list(w.projection.components)
    comps[0] = ExactMatrix.zeros(F5, comps[0].nrows, comps[0].ncols + 1)
    with pytest.raises((CertificateError, QuiverError, ValueError)):
        verify_rz_witness(RZWitness(w.m, w.n, w.z, w.v, w.u,
                                    RepMorphism(w.projection.source, w.n, tuple(comps), check=False)))
