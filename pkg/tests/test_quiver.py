import random

import pytest
from hypothesis import given, settings, strategies as st

from quiverdegen.decompose import is_isomorphic
from quiverdegen.linalg import ExactMatrix, FieldSpec
from quiverdegen.quiver import (
    Arrow,
    Quiver,
    QuiverError,
    Representation,
    RepMorphism,
    direct_sum,
    euler_pairing,
    ext1_dim,
    hom_basis,
    hom_dim,
    kernel_cokernel,
    random_conjugate,
    random_representation,
)
from quiverdegen.serialize import quiver_from_json, rep_from_json, rep_to_json

F2, F5 = FieldSpec.prime(2), FieldSpec.prime(5)
A2 = Quiver.linear_a(2)


@pytest.fixture
def a2():
    p = Representation.projective(A2, F5, "1")
    s1, s2 = Representation.simple(A2, F5, "1"), Representation.simple(A2, F5, "2")
    return p, s1, s2


def test_quiver_rejects_cycles_and_bad_arrows():
    with pytest.raises(QuiverError):
        Quiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")))
    with pytest.raises(QuiverError):
        Quiver(("1",), (Arrow("a", "1", "3"),))
    with pytest.raises(QuiverError):
        Quiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("a", "1", "2")))


def test_representation_shape_checked():
    with pytest.raises(QuiverError):
        Representation.build(A2, F5, (1, 1), {"a1": [[1, 1]]})


def test_hom_dimensions(a2):
    p, s1, s2 = a2
    assert hom_dim(p, p) == 1
    assert hom_dim(s1, p) == 0
    assert hom_dim(s2, p) == 1
    assert hom_dim(p, s1) == 1
    for f in hom_basis(p, s1) + hom_basis(s2, p):
        assert f.intertwining_failure() is None


def test_direct_sum_examples(a2):
    _, s1, s2 = a2
    empty = direct_sum([], A2, F5).rep
    assert empty.dims == (0, 0)
    s = direct_sum([s1, s2], A2, F5).rep
    assert s.dims == (1, 1) and s.maps[0] == ExactMatrix(F5, [[0]])
    assert hom_dim(s, s) == 2


def test_kernel_cokernel_examples(a2):
    p, s1, s2 = a2
    kc = kernel_cokernel(RepMorphism.identity(p))
    assert kc.kernel.total_dim == 0 and kc.cokernel.total_dim == 0
    kc = kernel_cokernel(RepMorphism.zero(p, p))
    assert kc.kernel.dims == (1, 1) and kc.cokernel.dims == (1, 1)
    u = hom_basis(s2, p)[0]
    ds = direct_sum([s2, p], A2, F5)
    f = ds.inclusions[1] @ u
    coker = kernel_cokernel(f).cokernel
    assert is_isomorphic(coker, direct_sum([s1, s2], A2, F5).rep) is not None


def test_is_isomorphic_examples(a2):
    p, s1, s2 = a2
    assert is_isomorphic(p, p) is not None
    assert is_isomorphic(p, direct_sum([s1, s2], A2, F5).rep) is None
    conj, _ = random_conjugate(p, random.Random(3))
    iso = is_isomorphic(conj, p)
    assert iso is not None and iso.is_isomorphism()


def test_ext_examples(a2):
    p, s1, s2 = a2
    assert euler_pairing(A2, (1, 0), (0, 1)) == -1
    assert ext1_dim(s1, s2) == 1
    assert ext1_dim(s2, s1) == 0
    assert ext1_dim(p, p) == 0


def test_ext_rejects_relations():
    q = Quiver.from_json({"vertices": ["1", "2", "3"],
                          "arrows": [{"name": "a", "src": "1", "tgt": "2"}, {"name": "b", "src": "2", "tgt": "3"}],
                          "relations": [[{"coef": "1", "path": ["a", "b"]}]]})
    s = Representation.simple(q, F5, "1")
    with pytest.raises(QuiverError):
        ext1_dim(s, s)


def test_relations_are_enforced():
    q = Quiver.from_json({"vertices": ["1", "2", "3"],
                          "arrows": [{"name": "a", "src": "1", "tgt": "2"}, {"name": "b", "src": "2", "tgt": "3"}],
                          "relations": [[{"coef": "1", "path": ["a", "b"]}]]})
    with pytest.raises(QuiverError):
        Representation.build(q, F5, (1, 1, 1), {"a": [[1]], "b": [[1]]})
    ok = Representation.build(q, F5, (1, 1, 1), {"a": [[1]], "b": [[0]]})
    assert hom_dim(ok, ok) >= 1


def test_rep_json_round_trip(a2):
    p, _, _ = a2
    d = rep_to_json(p, with_quiver=True)
    q = quiver_from_json(d["quiver"])
    back = rep_from_json(d, q, F5)
    assert back.same_data(p)


seeds = st.integers(0, 10**6)


@settings(max_examples=40, deadline=None)
@given(seeds, st.sampled_from([2, 5]))
def test_hom_additivity(seed, p):
    rng = random.Random(seed)
    F = FieldSpec.prime(p)
    q = Quiver.linear_a(3)
    a, b, c = (random_representation(q, F, tuple(rng.randint(0, 2) for _ in range(3)), rng) for _ in range(3))
    ab = direct_sum([a, b], q, F).rep
    assert hom_dim(ab, c) == hom_dim(a, c) + hom_dim(b, c)
    assert hom_dim(c, ab) == hom_dim(c, a) + hom_dim(c, b)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_ext_nonnegative_and_kernel_cokernel_counts(seed):
    rng = random.Random(seed)
    q = Quiver.d4()
    m = random_representation(q, F2, tuple(rng.randint(0, 2) for _ in q.vertices), rng)
    n = random_representation(q, F2, tuple(rng.randint(0, 2) for _ in q.vertices), rng)
    assert ext1_dim(m, n) >= 0
    for f in hom_basis(m, n):
        kc = kernel_cokernel(f)
        for v in range(len(q.vertices)):
            assert kc.kernel.dims[v] - m.dims[v] + n.dims[v] - kc.cokernel.dims[v] == 0
        assert (f @ kc.inclusion).is_zero()
