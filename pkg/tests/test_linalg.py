import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quiverdegen.linalg import (
    ExactMatrix,
    FieldSpec,
    NotAFieldError,
    charpoly,
    check_smith,
    expand,
    factor_squarefree_charpoly,
    kernel_basis,
    rref,
    smith_normal_form,
    solve,
)

Q = FieldSpec.rationals()
F2, F3, F5 = (FieldSpec.prime(p) for p in (2, 3, 5))


def test_rref_identity():
    red, rank, piv = rref(ExactMatrix.identity(F5, 2))
    assert red == ExactMatrix.identity(F5, 2) and rank == 2 and piv == [0, 1]


def test_rref_rank_one_over_q():
    red, rank, piv = rref(ExactMatrix(Q, [[1, 2], [2, 4]]))
    assert red == ExactMatrix(Q, [[1, 2], [0, 0]]) and rank == 1 and piv == [0]


def test_rref_over_rational_functions():
    K = FieldSpec.rational_functions(F3)
    t = K.t
    _, rank, piv = rref(ExactMatrix(K, [[t, 1], [t * t, t]]))
    assert rank == 1 and piv == [0]


def test_rref_rejects_polynomial_ring():
    R = FieldSpec.polynomials(F3)
    with pytest.raises(NotAFieldError):
        rref(ExactMatrix(R, [[R.t, 1]]))


def test_kernel_examples():
    assert len(kernel_basis(ExactMatrix.zeros(Q, 2, 2))) == 2
    assert kernel_basis(ExactMatrix.identity(Q, 3)) == []
    (v,) = kernel_basis(ExactMatrix(F2, [[1, 1]]))
    assert v == (F2.one, F2.one)


def test_solve_examples():
    b = (Fraction(3), Fraction(-1))
    assert solve(ExactMatrix.identity(Q, 2), b) == b
    assert solve(ExactMatrix(Q, [[1, 2], [2, 4]]), (1, 3)) is None
    K = FieldSpec.rational_functions(F5)
    (x,) = solve(ExactMatrix(K, [[K.t]]), (K.one,))
    assert x * K.t == K.one


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve(ExactMatrix.identity(Q, 2), (1, 2, 3))


def test_smith_examples():
    R = FieldSpec.polynomials(F5)
    t = R.t
    cases = [
        (ExactMatrix(R, [[-t], [1]]), [R.one]),
        (ExactMatrix(R, [[t, 0], [0, t * t]]), [t, t * t]),
        (ExactMatrix(R, [[t, t], [t, t]]), [t, R.zero]),
    ]
    for m, expected in cases:
        form = smith_normal_form(m)
        assert form.diagonal == expected
        assert check_smith(m, form)


def test_factor_examples():
    def as_set(fac):
        return {(f.format("x"), k) for f, k in fac}

    assert as_set(factor_squarefree_charpoly(ExactMatrix(F2, [[0, 0], [0, 1]]))) == \
        as_set([(F2.poly([0, 1]), 1), (F2.poly([1, 1]), 1)])
    assert factor_squarefree_charpoly(ExactMatrix(Q, [[0, 1], [0, 0]])) == [(Q.poly([0, 1]), 2)]
    companion = ExactMatrix(F3, [[0, -1], [1, 0]])
    assert factor_squarefree_charpoly(companion) == [(F3.poly([1, 0, 1]), 1)]


def test_factor_rejects_non_square():
    with pytest.raises(ValueError):
        factor_squarefree_charpoly(ExactMatrix.zeros(F5, 2, 3))


def _random_matrix(seed, p, rows, cols):
    return ExactMatrix.random(FieldSpec.prime(p), rows, cols, random.Random(seed))


dims = st.integers(min_value=0, max_value=5)
primes = st.sampled_from([2, 3, 5, 7])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), primes, dims, dims)
def test_rank_nullity_and_rref_idempotent(seed, p, r, c):
    m = _random_matrix(seed, p, r, c)
    red, rank, _ = rref(m)
    assert rank + len(kernel_basis(m)) == c
    assert rref(red)[0] == red
    assert m.T.rank() == rank
    for v in kernel_basis(m):
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), primes, st.integers(1, 5))
def test_factorization_expands_to_charpoly(seed, p, n):
    m = _random_matrix(seed, p, n, n)
    fac = factor_squarefree_charpoly(m)
    assert expand(fac, m.field) == charpoly(m)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3), st.integers(1, 3))
def test_smith_reproduces_diagonal(seed, r, c):
    rng = random.Random(seed)
    R = FieldSpec.polynomials(F3)
    m = ExactMatrix(R, [[R.random(rng) for _ in range(c)] for _ in range(r)])
    form = smith_normal_form(m)
    assert check_smith(m, form)
    nz = [d for d in form.diagonal if not d == R.zero]
    for a, b in zip(nz, nz[1:]):
        assert (b % a) == R.zero


def test_rational_function_canonical_form():
    K = FieldSpec.rational_functions(F5)
    rng = random.Random(7)
    for _ in range(1000):
        a, b = K.random(rng), K.random(rng)
        if a == K.zero or b == K.zero:
            continue
        assert (a / b) * (b / a) == K.one
        # the same value built two ways has one representation
        assert ((a * b) / b).format() == a.format()
