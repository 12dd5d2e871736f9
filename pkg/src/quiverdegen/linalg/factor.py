"""Factorization of characteristic polynomials.

Over F_p the factorization is complete (squarefree reduction followed by
Berlekamp splitting). Over Q only a coprime factorization is produced:
Yun's squarefree decomposition with rational roots split off. The
remaining factors are squarefree and pairwise coprime but need not be
irreducible, which is all Fitting splitting requires.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Tuple

from .fields import FieldSpec, Poly, poly_gcd
from .matrix import ExactMatrix, charpoly, kernel_basis

Factorization = List[Tuple[Poly, int]]


def _pth_root(f: Poly) -> Poly:
    p = f.base.p
    return Poly._raw([f.coeffs[i] for i in range(0, len(f.coeffs), p)], f.base)


def _berlekamp(f: Poly) -> List[Poly]:
    """Irreducible factors of a monic squarefree polynomial over F_p."""
    n = f.degree
    if n <= 1:
        return [f]
    base = f.base
    p = base.p
    # rows: x^(i p) mod f
    xp = Poly._raw([base.zero, base.one], base) ** p % f
    rows = []
    cur = Poly._raw([base.one], base)
    for _ in range(n):
        coeffs = list(cur.coeffs) + [base.zero] * (n - len(cur.coeffs))
        rows.append(coeffs)
        cur = cur * xp % f
    q = ExactMatrix(base, rows, n)
    # kernel of (Q - I)^T gives the Berlekamp subalgebra
    qm = (q - ExactMatrix.identity(base, n)).T
    basis = kernel_basis(qm)
    count = len(basis)
    factors = [f]
    for vec in basis:
        if len(factors) == count:
            break
        g = Poly._raw(vec, base)
        if g.degree <= 0:
            continue
        new = []
        for h in factors:
            if h.degree <= 1:
                new.append(h)
                continue
            pieces = []
            rest = h
            for s in range(p):
                d = poly_gcd(rest, g - s)
                if 0 < d.degree:
                    pieces.append(d)
                    rest = rest // d
                    if rest.degree == 0:
                        break
            if rest.degree > 0:
                pieces.append(rest.monic())
            new.extend(pieces)
        factors = new
    return sorted((h.monic() for h in factors), key=lambda h: (h.degree, [c.v for c in h.coeffs]))


def _irreducibles_fp(f: Poly) -> List[Poly]:
    if f.degree <= 0:
        return []
    d = f.derivative()
    if not d:
        return _irreducibles_fp(_pth_root(f))
    g = poly_gcd(f, d)
    h = f // g
    out = _berlekamp(h.monic())
    for r in _irreducibles_fp(g):
        if r not in out:
            out.append(r)
    return out


def factor_fp(f: Poly) -> Factorization:
    """Complete factorization of a monic polynomial over F_p."""
    out = []
    for r in _irreducibles_fp(f.monic()):
        e = 0
        rest = f
        while True:
            q, rem = divmod(rest, r)
            if rem:
                break
            rest = q
            e += 1
        out.append((r, e))
    out.sort(key=lambda fe: (fe[0].degree, [c.v for c in fe[0].coeffs]))
    return out


def _yun(f: Poly) -> List[Tuple[Poly, int]]:
    """Squarefree decomposition in characteristic zero: f = prod a_i^i."""
    out = []
    d = f.derivative()
    a = poly_gcd(f, d)
    b = f // a
    c = d // a
    i = 1
    while b.degree > 0:
        dd = c - b.derivative()
        g = poly_gcd(b, dd)
        if g.degree > 0:
            out.append((g, i))
        b = b // g
        c = dd // g
        i += 1
    return out


def _rational_roots(f: Poly) -> List[Fraction]:
    if f.degree <= 0:
        return []
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    # strip x^k factor first
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints.pop(0)
    if len(ints) <= 1:
        return roots
    a0, an = abs(ints[0]), abs(ints[-1])
    cands = set()
    for p in _divisors(a0):
        for q in _divisors(an):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    for r in sorted(cands):
        if f(r) == 0:
            roots.append(r)
    return roots


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def factor_q(f: Poly) -> Factorization:
    """Pairwise coprime factorization over Q (see module docstring)."""
    base = f.base
    out = []
    for a, i in _yun(f.monic()):
        rest = a
        for r in _rational_roots(a):
            lin = Poly._raw([-r, base.one], base)
            out.append((lin, i))
            rest = rest // lin
        if rest.degree > 0:
            out.append((rest.monic(), i))
    out.sort(key=lambda fe: (fe[0].degree, fe[0].coeffs))
    return out


def factor_poly(f: Poly) -> Factorization:
    if f.base.kind == "Fp":
        return factor_fp(f)
    if f.base.kind == "Q":
        return factor_q(f)
    raise ValueError(f"no factorization over {f.base}")


def factor_squarefree_charpoly(m: ExactMatrix) -> Factorization:
    """Factor ``det(xI - m)`` into pairwise coprime powers.

    Irreducible over F_p; coprime squarefree pieces over Q.
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    return factor_poly(charpoly(m))


def expand(factors: Factorization, base: FieldSpec) -> Poly:
    acc = Poly([1], base)
    for f, e in factors:
        acc = acc * f ** e
    return acc
