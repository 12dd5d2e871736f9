"""Krull–Schmidt decomposition by Fitting splitting of endomorphisms.

A random endomorphism whose characteristic polynomial has two coprime
factors splits the representation into generalized eigenspaces. Blocks
that refuse to split are certified local: either ``End`` is
one-dimensional, or the nilpotent parts of a basis span a nilpotent ideal
of codimension one, or (over F_2 / F_3 with small ``End``) every
endomorphism is checked to be nilpotent or invertible.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .linalg import ExactMatrix, factor_poly, kernel_matrix, poly_of_matrix
from .linalg.matrix import _eliminate, charpoly
from .quiver import (
    QuiverError,
    Representation,
    RepMorphism,
    combine,
    direct_sum,
    hom_basis,
    random_combination,
)

MAX_RANDOM_TRIES = 64
EXHAUSTIVE_LIMIT = 3 ** 8


class DecompositionError(RuntimeError):
    """Neither a splitting nor a locality certificate could be produced."""


def endomorphism_charpoly(f: RepMorphism):
    """Characteristic polynomial of ``f`` on the total space (product over vertices)."""
    F = f.source.field
    acc = F.poly([1])
    for c in f.components:
        if c.nrows:
            acc = acc * charpoly(c)
    return acc


def _check_endo(m: Representation, f: RepMorphism):
    if f.source is not m and not f.source.same_data(m):
        raise QuiverError("endomorphism has the wrong source")
    if not f.target.same_data(m):
        raise QuiverError("endomorphism has the wrong target")
    bad = f.intertwining_failure()
    if bad is not None:
        raise QuiverError(f"not an endomorphism: fails at arrow {bad}")


def _fitting_blocks(m: Representation, f: RepMorphism) -> List[Tuple[Representation, Tuple[ExactMatrix, ...]]]:
    """Generalized eigenspace blocks of ``f`` with their basis matrices."""
    if m.total_dim == 0:
        return []
    factors = factor_poly(endomorphism_charpoly(f))
    if len(factors) <= 1:
        return [(m, tuple(ExactMatrix.identity(m.field, d) for d in m.dims))]
    q = m.quiver
    bases = []
    for g, e in factors:
        ge = g ** e
        bases.append(tuple(kernel_matrix(poly_of_matrix(ge, c)) if c.nrows else c
                           for c in f.components))
    # C_v = [K_v^1 | K_v^2 | ...] is invertible; conjugate once and cut blocks
    blocks = []
    cinv = []
    for i, d in enumerate(m.dims):
        cols = [b[i] for b in bases]
        cv = cols[0].hstack(*cols[1:]) if d else ExactMatrix.zeros(m.field, 0, 0)
        if cv.ncols != d:
            raise ArithmeticError("generalized eigenspaces do not span")
        cinv.append(cv.inverse() if d else cv)
    offsets = [0] * len(m.dims)
    for b in bases:
        sizes = tuple(x.ncols for x in b)
        maps = []
        for a, ma in zip(q.arrows, m.maps):
            s, t = q.index(a.src), q.index(a.tgt)
            rows = cinv[t].rows[offsets[t]:offsets[t] + sizes[t]]
            proj = ExactMatrix._raw(m.field, rows, sizes[t], m.dims[t])
            maps.append(proj @ ma @ b[s])
        blocks.append((Representation(q, m.field, sizes, tuple(maps)), b))
        offsets = [o + s for o, s in zip(offsets, sizes)]
    return blocks


def fitting_split(m: Representation, f: RepMorphism) -> List[Representation]:
    """Split ``m`` into the generalized eigenspace subrepresentations of ``f``."""
    _check_endo(m, f)
    return [b for b, _ in _fitting_blocks(m, f)]


# ---------------------------------------------------------------------------
# locality certificates


def _span_rank(vectors: Sequence[tuple], n: int) -> int:
    rows = [list(v) for v in vectors]
    return len(_eliminate(rows, n)) if rows else 0


def _in_span(basis_rows: Sequence[tuple], v: tuple, n: int) -> bool:
    return _span_rank(list(basis_rows) + [v], n) == _span_rank(basis_rows, n)


def _reduce_basis(vectors: Sequence[tuple], n: int) -> List[tuple]:
    out: List[tuple] = []
    for v in vectors:
        if any(v) and _span_rank(out + [v], n) > len(out):
            out.append(v)
    return out


@dataclass
class LocalityCertificate:
    """Evidence that ``End(X)`` is local; ``radical`` spans its radical."""

    kind: str                      # "end_dim_1" | "radical_codim_1" | "exhaustive"
    radical: List[RepMorphism] = field(default_factory=list)


def _scalar_part(f: RepMorphism):
    """``λ`` with ``f − λ·id`` nilpotent, or ``None`` if no such scalar exists."""
    fac = factor_poly(endomorphism_charpoly(f))
    if len(fac) != 1 or fac[0][0].degree != 1:
        return None
    return -fac[0][0].coeffs[0]


def _radical_codim_one(x: Representation, basis: List[RepMorphism]) -> Optional[List[RepMorphism]]:
    ident = RepMorphism.identity(x)
    nil = []
    for b in basis:
        lam = _scalar_part(b)
        if lam is None:
            return None
        nil.append(b - ident.scale(lam))
    n = len(basis[0].as_vector())
    w = _reduce_basis([g.as_vector() for g in nil], n)
    if len(w) != len(basis) - 1:
        return None
    by_vec = {g.as_vector(): g for g in nil}
    wmaps = [by_vec[v] for v in w]
    # two-sided ideal of End
    for g in wmaps:
        for b in basis:
            if not _in_span(w, (g @ b).as_vector(), n) or not _in_span(w, (b @ g).as_vector(), n):
                return None
    # nilpotent as an algebra: W^k = 0 for some k ≤ dim + 1
    power = wmaps
    for _ in range(x.total_dim + 1):
        prods = _reduce_basis([(p @ g).as_vector() for p in power for g in wmaps], n)
        if not prods:
            return wmaps
        by = {(p @ g).as_vector(): p @ g for p in power for g in wmaps}
        power = [by[v] for v in prods]
    return None


def _exhaustive(x: Representation, basis: List[RepMorphism]):
    """Enumerate ``End(X)`` over a tiny field.

    Returns ``("split", f)`` for an element that is neither nilpotent nor
    invertible, else ``("local", nilpotent elements)``.
    """
    F = x.field
    p = F.p
    nil = []
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        f = combine(basis, [F.coerce(c) for c in coeffs])
        if f.is_nilpotent():
            nil.append(f)
        elif not f.is_isomorphism():
            return "split", f
    return "local", nil


def locality_certificate(x: Representation, basis: Optional[List[RepMorphism]] = None):
    """Certificate that ``x`` is indecomposable, a splitting endomorphism, or ``None``.

    Returns a :class:`LocalityCertificate`, or an endomorphism whose Fitting
    decomposition is non-trivial, or ``None`` when no method applies.
    """
    basis = basis if basis is not None else hom_basis(x, x)
    if len(basis) == 1:
        return LocalityCertificate("end_dim_1", [])
    rad = _radical_codim_one(x, basis)
    if rad is not None:
        return LocalityCertificate("radical_codim_1", rad)
    F = x.field
    if F.kind == "Fp" and F.p ** len(basis) <= EXHAUSTIVE_LIMIT:
        verdict, data = _exhaustive(x, basis)
        if verdict == "split":
            return data
        n = len(basis[0].as_vector())
        vecs = _reduce_basis([g.as_vector() for g in data], n)
        by = {g.as_vector(): g for g in data}
        return LocalityCertificate("exhaustive", [by[v] for v in vecs])
    return None


# ---------------------------------------------------------------------------
# decomposition


@dataclass
class Block:
    rep: Representation
    basis: Tuple[ExactMatrix, ...]     # per vertex, columns span the block inside the input
    certificate: LocalityCertificate


@dataclass
class Decomposition:
    source: Representation
    blocks: List[Block]
    change_of_basis: Tuple[ExactMatrix, ...]
    summands: List[Tuple[Representation, int]]

    def block_sum(self) -> Representation:
        return direct_sum([b.rep for b in self.blocks], self.source.quiver, self.source.field).rep

    def verify(self) -> bool:
        """Conjugating the input by the change of basis yields the block sum exactly."""
        m = self.source
        q = m.quiver
        target = self.block_sum()
        if target.dims != m.dims:
            return False
        cinv = [c.inverse() for c in self.change_of_basis]
        for a, ma, ta in zip(q.arrows, m.maps, target.maps):
            s, t = q.index(a.src), q.index(a.tgt)
            if cinv[t] @ ma @ self.change_of_basis[s] != ta:
                return False
        return True

    def multiset(self) -> List[Tuple[Tuple[int, ...], int]]:
        return sorted((r.dims, k) for r, k in self.summands)


def _split_once(x: Representation, basis: List[RepMorphism], rng: random.Random):
    for _ in range(MAX_RANDOM_TRIES):
        f = random_combination(basis, rng)
        blocks = _fitting_blocks(x, f)
        if len(blocks) > 1:
            return blocks
    cert = locality_certificate(x, basis)
    if cert is None:
        raise DecompositionError(
            f"no split after {MAX_RANDOM_TRIES} random endomorphisms and no locality certificate "
            f"for a block of dimension {x.dims} (dim End = {len(basis)}) over {x.field}")
    if isinstance(cert, RepMorphism):
        return _fitting_blocks(x, cert)
    return cert


def decompose(m: Representation, seed: int = 0) -> Decomposition:
    """Decompose ``m`` into certified indecomposable summands."""
    if m.field.kind not in ("Q", "Fp"):
        raise QuiverError(f"decomposition is only available over Q and F_p, not {m.field}")
    rng = random.Random(seed)
    ident = tuple(ExactMatrix.identity(m.field, d) for d in m.dims)
    stack = [(m, ident)]
    done: List[Block] = []
    while stack:
        x, b = stack.pop()
        if x.total_dim == 0:
            continue
        basis = hom_basis(x, x)
        if len(basis) == 1:
            done.append(Block(x, b, LocalityCertificate("end_dim_1")))
            continue
        result = _split_once(x, basis, rng)
        if isinstance(result, LocalityCertificate):
            done.append(Block(x, b, result))
            continue
        # push in reverse so blocks come out in eigenspace order
        for y, k in reversed(result):
            stack.append((y, tuple(bv @ kv for bv, kv in zip(b, k))))
    change = tuple(
        (done[0].basis[i].hstack(*[blk.basis[i] for blk in done[1:]]) if done
         else ExactMatrix.zeros(m.field, 0, 0))
        for i in range(len(m.dims)))
    for blk in done:
        blk.rep = blk.rep.with_name(m.name if len(done) == 1 else None)
    dec = Decomposition(m, done, change, _group(done))
    return dec


def _group(blocks: Sequence[Block]) -> List[Tuple[Representation, int]]:
    groups: List[List] = []
    for blk in blocks:
        for g in groups:
            if g[0].dims == blk.rep.dims and indecomposable_iso(g[0], blk.rep) is not None:
                g[1] += 1
                break
        else:
            groups.append([blk.rep, 1])
    return [(r, k) for r, k in groups]


@dataclass
class IndecomposableResult:
    indecomposable: bool
    kind: str
    witness: object = None   # LocalityCertificate, or a non-trivial idempotent endomorphism

    def __bool__(self):
        return self.indecomposable


def is_indecomposable(m: Representation, seed: int = 0) -> IndecomposableResult:
    """Decide indecomposability with a certificate.

    ``False`` results carry a non-trivial idempotent endomorphism.
    """
    if m.total_dim == 0:
        raise QuiverError("the zero representation is excluded from indecomposability queries")
    basis = hom_basis(m, m)
    if len(basis) == 1:
        return IndecomposableResult(True, "end_dim_1", LocalityCertificate("end_dim_1"))
    dec = decompose(m, seed)
    if len(dec.blocks) == 1:
        cert = dec.blocks[0].certificate
        return IndecomposableResult(True, cert.kind, cert)
    # idempotent projecting onto the first block along the others
    comps = []
    for i, c in enumerate(dec.change_of_basis):
        k = dec.blocks[0].basis[i].ncols
        d = m.dims[i]
        diag = ExactMatrix(m.field, [[1 if (r == s and r < k) else 0 for s in range(d)] for r in range(d)], d)
        comps.append(c @ diag @ c.inverse() if d else c)
    e = RepMorphism(m, m, tuple(comps))
    return IndecomposableResult(False, "idempotent", e)


def radical_basis(x: Representation) -> List[RepMorphism]:
    """Spanning set of ``rad End(x)`` for an indecomposable ``x``."""
    cert = locality_certificate(x)
    if not isinstance(cert, LocalityCertificate):
        raise DecompositionError(f"{x} is not certified indecomposable")
    return cert.radical


# ---------------------------------------------------------------------------
# isomorphism


def indecomposable_iso(x: Representation, y: Representation) -> Optional[RepMorphism]:
    """Isomorphism between indecomposables, or ``None``.

    If ``x ≅ y`` then some basis element of ``Hom(x, y)`` is already an
    isomorphism: the products ``g_j ∘ f_i`` span a space containing ``1``,
    so one of them escapes the radical of the local ring ``End(x)``.
    """
    if x.dims != y.dims:
        return None
    for f in hom_basis(x, y):
        if f.is_isomorphism():
            return f
    return None


def _random_iso(m: Representation, n: Representation, basis: List[RepMorphism], rng, tries: int,
                poly_degree: int = 0) -> Optional[RepMorphism]:
    F = m.field
    for f in basis:
        if f.is_isomorphism():
            return f
    for _ in range(tries):
        if F.kind == "ratfunc":
            coeffs = [F.coerce(F.base.poly([F.base.random(rng, 1 << 20) for _ in range(poly_degree)]))
                      for _ in basis]
        elif F.kind == "Q":
            coeffs = [F.coerce(rng.randint(-(1 << 30), 1 << 30)) for _ in basis]
        else:
            coeffs = [F.random(rng) for _ in basis]
        f = combine(basis, coeffs)
        if f.is_isomorphism():
            return f
    return None


def hom_obstruction(m: Representation, n: Representation) -> Optional[dict]:
    """Hom-dimension evidence that ``m ≇ n`` (exact), or ``None``."""
    if m.dims != n.dims:
        return {"kind": "dimension_vector", "m": list(m.dims), "n": list(n.dims)}
    dm, dn = len(hom_basis(m, m)), len(hom_basis(n, n))
    dmn, dnm = len(hom_basis(m, n)), len(hom_basis(n, m))
    if len({dm, dn, dmn, dnm}) > 1:
        return {"kind": "hom_dimensions", "End(m)": dm, "End(n)": dn, "Hom(m,n)": dmn, "Hom(n,m)": dnm}
    return None


def is_isomorphic(m: Representation, n: Representation, seed: int = 0) -> Optional[RepMorphism]:
    """An isomorphism ``m -> n`` if one exists, else ``None``.

    Over Q and F_p the answer is exact: both sides are decomposed and
    matched summand by summand. Over k(t) a ``None`` not explained by
    :func:`hom_obstruction` rests on random sampling (see
    :data:`RATFUNC_TRIES`).
    """
    if m.quiver != n.quiver or m.field != n.field or m.dims != n.dims:
        return None
    if m.total_dim == 0:
        return RepMorphism.identity(m) if m.same_data(n) else RepMorphism.zero(m, n)
    if m.same_data(n):
        return RepMorphism.identity(m)
    if hom_obstruction(m, n) is not None:
        return None
    rng = random.Random(seed)
    basis = hom_basis(m, n)
    F = m.field
    if F.kind == "ratfunc":
        return _random_iso(m, n, basis, rng, RATFUNC_TRIES, poly_degree=RATFUNC_DEGREE)
    found = _random_iso(m, n, basis, rng, 8)
    if found is not None:
        return found
    return _iso_by_decomposition(m, n, seed)


# sample set: polynomials of degree < RATFUNC_DEGREE with coefficients of size 2^20
# (or all of F_p); each try misses an existing isomorphism with probability
# at most dim / |sample set|.
RATFUNC_TRIES = 4
RATFUNC_DEGREE = 6


def _iso_by_decomposition(m: Representation, n: Representation, seed: int) -> Optional[RepMorphism]:
    dm, dn = decompose(m, seed), decompose(n, seed)
    if len(dm.blocks) != len(dn.blocks):
        return None
    used = [False] * len(dn.blocks)
    pairs = []
    for bi in dm.blocks:
        for j, bj in enumerate(dn.blocks):
            if used[j] or bj.rep.dims != bi.rep.dims:
                continue
            phi = indecomposable_iso(bi.rep, bj.rep)
            if phi is not None:
                used[j] = True
                pairs.append((bi, bj, phi))
                break
        else:
            return None
    F = m.field
    comps = []
    for v in range(len(m.dims)):
        if m.dims[v] == 0:
            comps.append(ExactMatrix.zeros(F, 0, 0))
            continue
        cinv = dm.change_of_basis[v].inverse()
        acc = ExactMatrix.zeros(F, n.dims[v], m.dims[v])
        off = 0
        offsets = {}
        for blk in dm.blocks:
            offsets[id(blk)] = off
            off += blk.basis[v].ncols
        for bi, bj, phi in pairs:
            k = bi.basis[v].ncols
            if k == 0:
                continue
            o = offsets[id(bi)]
            rows = ExactMatrix._raw(F, cinv.rows[o:o + k], k, m.dims[v])
            acc = acc + bj.basis[v] @ phi.components[v] @ rows
        comps.append(acc)
    iso = RepMorphism(m, n, tuple(comps))
    if not iso.is_isomorphism():
        raise ArithmeticError("assembled isomorphism is not invertible")
    return iso
