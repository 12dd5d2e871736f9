import random

import pytest
from hypothesis import given, settings, strategies as st

from quiverdegen.decompose import decompose, fitting_split, is_indecomposable, is_isomorphic
from quiverdegen.linalg import ExactMatrix, FieldSpec
from quiverdegen.quiver import (
    Quiver,
    QuiverError,
    Representation,
    RepMorphism,
    direct_sum,
    random_conjugate,
)

F2, F5 = FieldSpec.prime(2), FieldSpec.prime(5)
Q = FieldSpec.rationals()
A2 = Quiver.linear_a(2)


def mods(F):
    return (Representation.projective(A2, F, "1"), Representation.simple(A2, F, "1"),
            Representation.simple(A2, F, "2"))


def test_fitting_split_identity_and_idempotent():
    p, s1, _ = mods(F5)
    assert len(fitting_split(p, RepMorphism.identity(p))) == 1
    ss = direct_sum([s1, s1], A2, F5).rep
    f = RepMorphism(ss, ss, (ExactMatrix(F5, [[1, 0], [0, 0]]), ExactMatrix.zeros(F5, 0, 0)))
    parts = fitting_split(ss, f)
    assert sorted(x.dims for x in parts) == [(1, 0), (1, 0)]


def test_fitting_split_distinct_scalars():
    p, s1, _ = mods(F5)
    ds = direct_sum([p, s1], A2, F5)
    f = ds.inclusions[0] @ ds.projections[0] + (ds.inclusions[1] @ ds.projections[1]).scale(F5.coerce(2))
    conj, g = random_conjugate(ds.rep, random.Random(1))
    parts = fitting_split(ds.rep, f)
    assert sorted(x.dims for x in parts) == [(1, 0), (1, 1)]
    # the same endomorphism seen through a random base change
    assert sorted(x.dims for x in fitting_split(conj, g @ f @ g.inverse())) == [(1, 0), (1, 1)]


def test_fitting_split_rejects_non_endomorphism():
    p, s1, _ = mods(F5)
    with pytest.raises(QuiverError):
        fitting_split(p, RepMorphism.identity(s1))


@pytest.mark.parametrize("F", [F5, Q])
def test_decompose_examples(F):
    p, s1, s2 = mods(F)
    assert decompose(p).multiset() == [((1, 1), 1)]
    assert decompose(direct_sum([s1, s2], A2, F).rep).multiset() == [((0, 1), 1), ((1, 0), 1)]
    m, _ = random_conjugate(direct_sum([p, p, s2], A2, F).rep, random.Random(42))
    d = decompose(m, seed=42)
    assert d.verify()
    assert d.multiset() == [((0, 1), 1), ((1, 1), 2)]


def test_is_indecomposable_examples():
    p, s1, s2 = mods(F5)
    assert is_indecomposable(s1).indecomposable
    r = is_indecomposable(direct_sum([s1, s2], A2, F5).rep)
    assert not r.indecomposable
    e = r.witness
    assert (e @ e).as_vector() == e.as_vector()
    assert is_indecomposable(mods(F2)[0]).indecomposable
    with pytest.raises(QuiverError):
        is_indecomposable(Representation.zero(A2, F5))


def test_kronecker_block_certificate():
    k = Quiver.from_json({"vertices": ["1", "2"], "arrows": [{"name": "a", "src": "1", "tgt": "2"},
                                                             {"name": "b", "src": "1", "tgt": "2"}]})
    for F in (F2, Q):
        j2 = Representation.build(k, F, (2, 2), {"a": [[1, 0], [0, 1]], "b": [[0, 1], [0, 0]]})
        r = is_indecomposable(j2)
        assert r.indecomposable and r.kind in ("radical_codim_1", "exhaustive")


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.lists(st.integers(0, 2), min_size=1, max_size=4))
def test_round_trip_multisets(seed, picks):
    rng = random.Random(seed)
    pool = mods(F5)
    parts = [pool[i] for i in picks]
    m, _ = random_conjugate(direct_sum(parts, A2, F5).rep, rng)
    d = decompose(m, seed=seed)
    assert d.verify()
    assert sorted((x.dims, 1) for x in parts) == sorted((r.dims, 1) for r, k in d.summands for _ in range(k))
    total = tuple(sum(r.dims[v] * k for r, k in d.summands) for v in range(2))
    assert total == m.dims
    assert is_indecomposable(m).indecomposable == (sum(k for _, k in d.summands) == 1)
    for r, _ in d.summands:
        assert is_indecomposable(r).indecomposable
        assert any(is_isomorphic(r, x) is not None for x in parts)
