import pytest

from quiverdegen.decompose import is_isomorphic
from quiverdegen.degeneration import decide_deg, trivial_witness
from quiverdegen.derived import (
    ChainMap,
    ChainMapError,
    Complex,
    apply_restriction_functor,
    delta_check,
    delta_witness_search,
    derived_iso,
    hom_dim_derived,
    homology,
    mapping_cone,
    restrict_witness,
    ses_to_triangle,
    shift,
    shift_witness,
    subcategory_descent_report,
    vanishing_shift,
)
from quiverdegen.linalg import FieldSpec
from quiverdegen.quiver import Quiver, QuiverError, Representation, RepMorphism, direct_sum, hom_basis

F2, F5 = FieldSpec.prime(2), FieldSpec.prime(5)
A2 = Quiver.linear_a(2)


@pytest.fixture
def a2():
    p = Representation.projective(A2, F5, "1")
    s1, s2 = Representation.simple(A2, F5, "1"), Representation.simple(A2, F5, "2")
    return p, s1, s2, direct_sum([s1, s2], A2, F5).rep


@pytest.fixture
def two_term(a2):
    p, _, s2, _ = a2
    return Complex.from_map(hom_basis(s2, p)[0], lo=-1)


def test_complex_rejects_bad_input(a2):
    p, _, _, _ = a2
    with pytest.raises(QuiverError):
        # d ∘ d = id ∘ id is not zero
        Complex(A2, F5, 0, (p, p, p), (RepMorphism.identity(p), RepMorphism.identity(p)))
    q = Quiver.from_json({"vertices": ["1", "2", "3"],
                          "arrows": [{"name": "a", "src": "1", "tgt": "2"}, {"name": "b", "src": "2", "tgt": "3"}],
                          "relations": [[{"coef": "1", "path": ["a", "b"]}]]})
    with pytest.raises(QuiverError):
        Complex.stalk(Representation.simple(q, F5, "1"))


def test_homology_examples(a2, two_term):
    p, s1, _, _ = a2
    c = Complex.stalk(p)
    assert homology(c, 0).same_data(p) and homology(c, 1).total_dim == 0
    cone = mapping_cone(ChainMap.identity(c))
    assert all(homology(cone, i).total_dim == 0 for i in range(-3, 3))
    assert is_isomorphic(homology(two_term, 0), s1) is not None
    assert homology(two_term, -1).total_dim == 0


def test_shift_and_cone(a2, two_term):
    p, _, _, _ = a2
    assert derived_iso(shift(two_term, 0), two_term)
    s = shift(two_term, 1)
    assert s.lo == two_term.lo - 1
    assert s.diff(s.lo).components[1] == two_term.diff(two_term.lo).components[1].scale(F5.coerce(-1))
    z = Complex.zero(A2, F5)
    d = Complex.stalk(p)
    assert derived_iso(mapping_cone(ChainMap.zero(z, d)), d)
    assert derived_iso(mapping_cone(ChainMap.identity(two_term)), z)


def test_derived_iso_examples(a2, two_term):
    _, s1, _, _ = a2
    assert derived_iso(two_term, Complex.stalk(s1))
    assert not derived_iso(two_term, shift(Complex.stalk(s1), 1))


def test_hom_dim_derived_examples(a2):
    _, s1, s2, _ = a2
    c1, c2 = Complex.stalk(s1), Complex.stalk(s2)
    assert hom_dim_derived(c1, c2, 1) == 1
    assert hom_dim_derived(c1, c2, 0) == 0
    assert hom_dim_derived(c1, c2, 99) == 0
    assert hom_dim_derived(c2, c1, 1) == 0
    assert hom_dim_derived(c1, c1, 0) == 1


def test_chain_map_must_commute(a2, two_term):
    p, _, _, _ = a2
    with pytest.raises(ChainMapError):
        ChainMap(two_term, two_term, {-1: RepMorphism.identity(two_term.term(-1))})
    with pytest.raises(ChainMapError):
        # id_P in degree 0 alone does not kill the inclusion S2 -> P
        ChainMap(two_term, Complex.stalk(p, 0), {0: RepMorphism.identity(p)})
    assert ChainMap.identity(two_term).commutation_failure() is None


def test_ses_to_triangle(a2):
    p, _, _, s12 = a2
    t = ses_to_triangle(decide_deg(p, s12).witness)
    assert t.verify() and derived_iso(t.cone(), Complex.stalk(s12))
    triv = ses_to_triangle(trivial_witness(p, p, RepMorphism.identity(p)))
    assert triv.verify() and derived_iso(triv.cone(), Complex.stalk(p))
    assert shift_witness(triv, 1).verify()


def test_delta_examples(a2):
    p, s1, _, s12 = a2
    cp, cs = Complex.stalk(p), Complex.stalk(s12)
    w = delta_witness_search(cp, cs)
    assert w is not None and w.verify()
    same = delta_witness_search(cp, cp)
    assert same.z.total_dim == 0
    r = delta_check(cs, cp)
    assert r.status == "no" and r.exit_code == 1
    ob = r.obstruction
    assert ob["direction"] == "covariant" and ob["shift"] == 0
    assert is_isomorphic(ob["X_rep"], s1) is not None and (ob["hom_m"], ob["hom_n"]) == (1, 0)


def test_restriction_examples(a2):
    p, _, s2, s12 = a2
    a1 = A2.full_subquiver(["1"])
    assert apply_restriction_functor(a1, Complex.stalk(p)).term(0).dims == (1,)
    assert apply_restriction_functor(a1, Complex.stalk(s2)).total_dim == 0
    t = ses_to_triangle(decide_deg(p, s12).witness)
    r = restrict_witness(t, a1)
    assert r.verify() and r.z.total_dim == 0
    for k in (-1, 2):
        assert shift_witness(t, k).verify()


def test_non_convex_restriction_rejected():
    a3 = Quiver.linear_a(3)
    c = Complex.stalk(Representation.projective(a3, F2, "1"))
    with pytest.raises(QuiverError):
        apply_restriction_functor(a3.full_subquiver(["1", "3"]), c)


def test_vanishing_shift(a2, two_term):
    objs = [two_term] + [Complex.stalk(x) for x in a2]
    for x in objs:
        for y in objs:
            assert hom_dim_derived(x, y, vanishing_shift(x, y)) == 0


def test_descent_report_shape():
    a3 = Quiver.linear_a(3)
    entries = subcategory_descent_report(a3, ["1", "2"], [(1, 1, 0)], F2)
    assert len(entries) == 2
    for e in entries:
        assert not e.sub_found or e.ambient_found or e.sub_witness.verify()
        if e.obstruction is not None:
            assert not e.ambient_found and not e.sub_found
    with pytest.raises(QuiverError):
        subcategory_descent_report(a3, ["1", "2"], [(0, 1, 1)], F2)
