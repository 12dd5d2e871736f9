"""Exhaustive enumeration of representations over tiny prime fields.

Base change at a vertex ``v`` acts on the matrix ``X_v`` obtained by
stacking every arrow leaving ``v`` by column operations. Working through
the vertices from the sinks upwards, each ``X_v`` can be brought to
reduced column-echelon form without disturbing the ones already fixed, so
it is enough to enumerate tuples of echelon forms.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Dict, Iterator, List, Sequence, Tuple

from .decompose import indecomposable_iso, is_indecomposable
from .linalg import ExactMatrix, FieldSpec
from .quiver import Quiver, QuiverError, Representation, direct_sum, hom_dim

MAX_ENTRY = 3
MAX_PRIME = 5
MAX_CANDIDATES = 200_000


class EnumerationBoundError(QuiverError):
    """The requested enumeration is outside the supported bounds."""


def _echelon_count(rows: int, cols: int, p: int) -> int:
    """Number of ``rows × cols`` matrices in reduced row-echelon form over F_p."""
    total = 0
    for r in range(min(rows, cols) + 1):
        for piv in itertools.combinations(range(cols), r):
            free = sum(cols - c - 1 - (r - 1 - k) for k, c in enumerate(piv))
            total += p ** free
    return total


def echelon_forms(rows: int, cols: int, field: FieldSpec) -> Iterator[ExactMatrix]:
    """All reduced row-echelon matrices of the given shape, in a fixed order."""
    p = field.p
    for r in range(min(rows, cols) + 1):
        for piv in itertools.combinations(range(cols), r):
            slots = [(i, j) for i, c in enumerate(piv) for j in range(c + 1, cols) if j not in piv]
            for vals in itertools.product(range(p), repeat=len(slots)):
                m = [[0] * cols for _ in range(rows)]
                for i, c in enumerate(piv):
                    m[i][c] = 1
                for (i, j), x in zip(slots, vals):
                    m[i][j] = x
                yield ExactMatrix(field, m, cols)


def _out_arrows(q: Quiver) -> Dict[str, List[int]]:
    out = {v: [] for v in q.vertices}
    for k, a in enumerate(q.arrows):
        out[a.src].append(k)
    return out


def _check_bounds(q: Quiver, field: FieldSpec, max_dim: Sequence[int]):
    if q.relations:
        raise EnumerationBoundError("enumeration requires a quiver without relations")
    if field.kind != "Fp" or field.p > MAX_PRIME:
        raise EnumerationBoundError(f"enumeration needs F_p with p <= {MAX_PRIME}, got {field}")
    if any(d > MAX_ENTRY for d in max_dim):
        raise EnumerationBoundError(f"dimension bound {tuple(max_dim)} has an entry above {MAX_ENTRY}")


def candidate_count(q: Quiver, dims: Sequence[int], p: int) -> int:
    out = _out_arrows(q)
    total = 1
    for v in q.vertices:
        if out[v]:
            rows = sum(dims[q.index(q.arrows[k].tgt)] for k in out[v])
            total *= _echelon_count(dims[q.index(v)], rows, p)
    return total


def candidates(q: Quiver, field: FieldSpec, dims: Sequence[int]) -> Iterator[Representation]:
    """One or more representatives of every iso-class with dimension vector ``dims``."""
    out = _out_arrows(q)
    choices = []
    for v in q.vertices:
        ks = out[v]
        if not ks:
            continue
        heights = [dims[q.index(q.arrows[k].tgt)] for k in ks]
        # X_v^T in row-echelon form, i.e. X_v in column-echelon form
        choices.append((v, ks, heights, list(echelon_forms(dims[q.index(v)], sum(heights), field))))
    for pick in itertools.product(*[c[3] for c in choices]):
        mats = {}
        for (v, ks, heights, _), e in zip(choices, pick):
            x = e.T
            r0 = 0
            for k, h in zip(ks, heights):
                mats[q.arrows[k].name] = x.submatrix(r0, r0 + h, 0, x.ncols)
                r0 += h
        yield Representation.build(q, field, dims, mats)


def dimension_vectors(max_dim: Sequence[int]) -> List[Tuple[int, ...]]:
    vecs = itertools.product(*[range(d + 1) for d in max_dim])
    return sorted((v for v in vecs if any(v)), key=lambda v: (sum(v), v))


def _label(x: Representation, q: Quiver) -> str:
    f = x.field
    for v in q.vertices:
        s = Representation.simple(q, f, v)
        if s.dims == x.dims:
            return f"S{v}"
    for v in q.vertices:
        p = Representation.projective(q, f, v)
        if p.dims == x.dims and indecomposable_iso(p, x) is not None:
            return f"P{v}"
    for v in q.vertices:
        i = Representation.injective(q, f, v)
        if i.dims == x.dims and indecomposable_iso(i, x) is not None:
            return f"I{v}"
    return "M" + "".join(str(d) for d in x.dims)


@lru_cache(maxsize=64)
def _indecomposables(q: Quiver, field: FieldSpec, max_dim: Tuple[int, ...]) -> Tuple[Representation, ...]:
    found: List[Representation] = []
    for dims in dimension_vectors(max_dim):
        same: List[Representation] = []
        for x in candidates(q, field, dims):
            if not is_indecomposable(x):
                continue
            if any(indecomposable_iso(y, x) is not None for y in same):
                continue
            same.append(x)
        found.extend(same)
    labels = [_label(x, q) for x in found]
    # disambiguate repeated generic labels
    out = []
    for i, (x, lab) in enumerate(zip(found, labels)):
        if labels.count(lab) > 1:
            lab = f"{lab}_{labels[:i].count(lab) + 1}"
        out.append(x.with_name(lab))
    return tuple(out)


def enumerate_indecomposables(q: Quiver, max_dim, field: FieldSpec) -> List[Representation]:
    """Every indecomposable with dimension vector ``<= max_dim``, one per iso-class."""
    max_dim = tuple(max_dim[v] for v in q.vertices) if isinstance(max_dim, dict) else tuple(max_dim)
    if len(max_dim) != len(q.vertices):
        raise QuiverError("dimension bound has the wrong length")
    _check_bounds(q, field, max_dim)
    est = sum(candidate_count(q, d, field.p) for d in dimension_vectors(max_dim))
    if est > MAX_CANDIDATES:
        raise EnumerationBoundError(
            f"enumeration would test about {est} candidate representations (limit {MAX_CANDIDATES})")
    return list(_indecomposables(q, field, max_dim))


def _multisets(pool: Sequence[Representation], target: Tuple[int, ...], start: int = 0):
    if not any(target):
        yield []
        return
    for i in range(start, len(pool)):
        d = pool[i].dims
        if all(a <= b for a, b in zip(d, target)):
            rest = tuple(b - a for a, b in zip(d, target))
            for tail in _multisets(pool, rest, i):
                yield [i] + tail


def multiset_label(parts: Sequence[Representation]) -> str:
    if not parts:
        return "0"
    counts: Dict[str, int] = {}
    for x in parts:
        counts[x.name] = counts.get(x.name, 0) + 1
    return "+".join((f"{counts[n]}{n}" if counts[n] > 1 else n) for n in sorted(counts))


def module_from_parts(parts: Sequence[Representation], q: Quiver, field: FieldSpec) -> Representation:
    rep = direct_sum(list(parts), q, field).rep
    return rep.with_name(multiset_label(parts))


def enumerate_modules(q: Quiver, dimvec, field: FieldSpec) -> List[Representation]:
    """All iso-classes with dimension vector ``dimvec`` as sums of indecomposables."""
    dimvec = tuple(dimvec[v] for v in q.vertices) if isinstance(dimvec, dict) else tuple(dimvec)
    if not any(dimvec):
        return [Representation.zero(q, field)]
    pool = enumerate_indecomposables(q, dimvec, field)
    out = []
    for combo in _multisets(pool, dimvec):
        out.append(module_from_parts([pool[i] for i in combo], q, field))
    # most generic first: smallest endomorphism ring
    out.sort(key=lambda m: (hom_dim(m, m), m.name))
    return out
