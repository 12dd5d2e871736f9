"""Degeneration of modules: necessary conditions, Riedtmann–Zwara witnesses, verdicts.

``m ≤ n`` ("n is a degeneration of m") is certified by an exact sequence
``0 -> Z -(v,u)-> Z ⊕ m -> n -> 0`` with ``v`` a nilpotent endomorphism of
``Z``. Refutations come from the hom-order (``dim Hom(X, m) ≤ dim Hom(X, n)``
and its dual for every X) and from orbit dimensions.
"""
from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .certify import CertificateError, verify_rz
from .decompose import decompose, is_isomorphic, radical_basis
from .linalg import ExactMatrix, right_inverse
from .quiver import (
    QuiverError,
    Representation,
    RepMorphism,
    column_morphism,
    combine,
    direct_sum,
    hom_basis,
    hom_dim,
    kernel_cokernel,
)

log = logging.getLogger(__name__)

YES, NO, UNKNOWN = "yes", "no", "unknown"


# ---------------------------------------------------------------------------
# witnesses


@dataclass(eq=False)
class RZWitness:
    """Exact sequence ``0 -> z -> z ⊕ m -> n -> 0`` with nilpotent ``v``.

    ``projection`` is the map ``z ⊕ m -> n``; it equals the isomorphism
    ``coker(embedding) ≅ n`` composed with the cokernel projection, which
    keeps the certificate independent of any choice of cokernel basis.
    """

    m: Representation
    n: Representation
    z: Representation
    v: RepMorphism
    u: RepMorphism
    projection: RepMorphism

    @property
    def middle(self) -> Representation:
        return direct_sum([self.z, self.m], self.m.quiver, self.m.field).rep

    @property
    def embedding(self) -> RepMorphism:
        return column_morphism(self.z, self.middle, [self.v, self.u])

    def cokernel_iso(self) -> RepMorphism:
        """The induced isomorphism ``coker(embedding) -> n``."""
        kc = kernel_cokernel(self.embedding)
        comps = []
        for pv, qv in zip(self.projection.components, kc.projection.components):
            comps.append(pv @ right_inverse(qv) if qv.nrows else ExactMatrix.zeros(pv.field, pv.nrows, 0))
        return RepMorphism(kc.cokernel, self.n, tuple(comps))

    def verify(self) -> bool:
        try:
            verify_rz_witness(self)
        except CertificateError:
            return False
        return True


def verify_rz_witness(w: RZWitness) -> None:
    """Re-check every witness invariant from the raw matrices; raise on failure."""
    q = w.m.quiver
    for r in (w.n, w.z):
        if r.quiver != q or r.field != w.m.field:
            raise CertificateError("witness representations live over different quivers or fields")
    verify_rz(q, w.m.field, w.m.dims, w.m.maps, w.n.dims, w.n.maps, w.z.dims, w.z.maps,
              w.v.components, w.u.components, w.projection.components)


def trivial_witness(m: Representation, n: Representation, iso: RepMorphism) -> RZWitness:
    """``z = 0`` witness for ``m ≤ n`` when ``iso: m -> n`` is an isomorphism."""
    z = Representation.zero(m.quiver, m.field)
    mid = direct_sum([z, m], m.quiver, m.field).rep
    proj = RepMorphism(mid, n, iso.components)
    return RZWitness(m, n, z, RepMorphism.zero(z, z), RepMorphism.zero(z, m), proj)


def add_summand(w: RZWitness, x: Representation) -> RZWitness:
    """Witness for ``m ⊕ x ≤ n ⊕ x`` reusing the same ``z`` and ``v``."""
    q, F = w.m.quiver, w.m.field
    mx = direct_sum([w.m, x], q, F).rep
    nx = direct_sum([w.n, x], q, F).rep
    u2 = column_morphism(w.z, mx, [w.u, RepMorphism.zero(w.z, x)])
    mid = direct_sum([w.z, mx], q, F).rep
    comps = []
    for i, pv in enumerate(w.projection.components):
        xd = x.dims[i]
        top = pv.hstack(ExactMatrix.zeros(F, pv.nrows, xd))
        bottom = ExactMatrix.zeros(F, xd, pv.ncols).hstack(ExactMatrix.identity(F, xd))
        comps.append(top.vstack(bottom))
    return RZWitness(mx, nx, w.z, w.v, u2, RepMorphism(mid, nx, tuple(comps)))


def extension_degeneration(inclusion: RepMorphism) -> RZWitness:
    """From ``u0 ⊂ e`` with quotient ``w``, the witness for ``e ≤ u0 ⊕ w`` (``z = u0``, ``v = 0``)."""
    if not inclusion.is_injective():
        raise QuiverError("extension_degeneration needs an injective morphism")
    u0, e = inclusion.source, inclusion.target
    q, F = e.quiver, e.field
    kc = kernel_cokernel(inclusion)
    n = direct_sum([u0, kc.cokernel], q, F).rep
    mid = direct_sum([u0, e], q, F).rep
    comps = []
    for i, pv in enumerate(kc.projection.components):
        d0, de, dw = u0.dims[i], e.dims[i], kc.cokernel.dims[i]
        top = ExactMatrix.identity(F, d0).hstack(ExactMatrix.zeros(F, d0, de))
        bottom = ExactMatrix.zeros(F, dw, d0).hstack(pv)
        comps.append(top.vstack(bottom))
    w = RZWitness(e, n, u0, RepMorphism.zero(u0, u0), inclusion, RepMorphism(mid, n, tuple(comps)))
    verify_rz_witness(w)
    return w


# ---------------------------------------------------------------------------
# invariants and necessary conditions


def orbit_dimension(m: Representation) -> int:
    """``Σ d_v² − dim End(m)``: dimension of the base-change orbit of ``m``."""
    return sum(d * d for d in m.dims) - hom_dim(m, m)


@dataclass
class HomOrderResult:
    holds: bool
    x: Optional[Representation] = None
    direction: Optional[str] = None      # "covariant": Hom(X, -); "contravariant": Hom(-, X)
    dim_m: Optional[int] = None
    dim_n: Optional[int] = None

    def __bool__(self):
        return self.holds


def hom_order_leq(m: Representation, n: Representation, test_set: Sequence[Representation]) -> HomOrderResult:
    """Check ``dim Hom(X, m) ≤ dim Hom(X, n)`` and ``dim Hom(m, X) ≤ dim Hom(n, X)``."""
    for x in test_set:
        a, b = hom_dim(x, m), hom_dim(x, n)
        if a > b:
            return HomOrderResult(False, x, "covariant", a, b)
    for x in test_set:
        a, b = hom_dim(m, x), hom_dim(n, x)
        if a > b:
            return HomOrderResult(False, x, "contravariant", a, b)
    return HomOrderResult(True)


def default_test_set(m: Representation, n: Representation) -> List[Representation]:
    """All indecomposables up to ``dims(m)`` when enumerable, else a smaller stand-in.

    The fallback (simples, projectives, summands of m and n) still gives
    sound obstructions; it only weakens the filter.
    """
    from .enumeration import EnumerationBoundError, enumerate_indecomposables

    q, F = m.quiver, m.field
    try:
        return enumerate_indecomposables(q, tuple(min(d, 3) for d in m.dims), F)
    except EnumerationBoundError:
        pass
    out = [Representation.simple(q, F, v) for v in q.vertices]
    if not q.relations:
        out += [Representation.projective(q, F, v) for v in q.vertices]
    if F.kind in ("Q", "Fp"):
        for r in (m, n):
            if r.total_dim:
                out += [s for s, _ in decompose(r).summands]
    return out


def check_obstruction(m: Representation, n: Representation, ob: dict) -> bool:
    """Recompute a refutation from scratch."""
    kind = ob.get("condition")
    if kind == "dimension_vector":
        return m.dims != n.dims
    if kind == "hom_order":
        x = ob["X_rep"]
        if ob["direction"] == "covariant":
            return hom_dim(x, m) > hom_dim(x, n)
        return hom_dim(m, x) > hom_dim(n, x)
    if kind == "orbit_dimension":
        return hom_dim(m, m) >= hom_dim(n, n) and is_isomorphic(m, n) is None
    return False


# ---------------------------------------------------------------------------
# search


def _rank_profile(r: Representation) -> Tuple[int, ...]:
    """Ranks of all path maps: a cheap isomorphism invariant."""
    q = r.quiver
    out = []
    for s in q.vertices:
        for t in q.vertices:
            for p in q.paths(s, t):
                if p:
                    out.append(r.evaluate_path(p).rank())
    return tuple(out)


def _sum_radical(parts: Sequence[Tuple[int, Representation]], total: Representation, inc, proj,
                 radicals: Dict[int, List[RepMorphism]]) -> List[RepMorphism]:
    """Basis of rad End(⊕ X_i) built block by block from pairwise distinct pool entries."""
    out = []
    for i, (ki, xi) in enumerate(parts):
        for j, (kj, xj) in enumerate(parts):
            gens = radicals[ki] if ki == kj else hom_basis(xj, xi)
            for f in gens:
                out.append(inc[i] @ f @ proj[j])
    return out


def _coefficient_vectors(F, k: int, rng: random.Random, limit: int, samples: int) -> Iterator[list]:
    """Nonzero coefficient vectors: all of them over small F_p, else basis vectors plus random ones."""
    if k == 0:
        return
    if F.kind == "Fp" and F.p ** k <= limit:
        for c in itertools.product(range(F.p), repeat=k):
            if any(c):
                yield [F.coerce(x) for x in c]
        return
    for i in range(k):
        yield [F.one if j == i else F.zero for j in range(k)]
    for _ in range(samples):
        if F.kind == "Q":
            yield [F.coerce(rng.randint(-5, 5)) for _ in range(k)]
        else:
            yield [F.random(rng) for _ in range(k)]


def candidate_pool(m: Representation, n: Representation) -> List[Representation]:
    """Indecomposables that may appear in ``z``, pairwise non-isomorphic."""
    from .enumeration import EnumerationBoundError, enumerate_indecomposables

    q, F = m.quiver, m.field
    try:
        return enumerate_indecomposables(q, tuple(min(d, 3) for d in m.dims), F)
    except EnumerationBoundError:
        pass
    pool: List[Representation] = []
    for r in (m, n):
        if not r.total_dim:
            continue
        for s, _ in decompose(r).summands:
            if all(is_isomorphic(s, t) is None for t in pool):
                pool.append(s)
    return pool


def _z_candidates(pool: Sequence[Representation], bound: int) -> Iterator[List[int]]:
    sizes = [p.total_dim for p in pool]
    for total in range(1, bound + 1):
        def rec(start, left):
            if left == 0:
                yield []
                return
            for i in range(start, len(pool)):
                if sizes[i] <= left:
                    for tail in rec(i, left - sizes[i]):
                        yield [i] + tail
        yield from rec(0, total)


def rz_witness_search(m: Representation, n: Representation, dim_bound: Optional[int] = None,
                      seed: int = 0, pool: Optional[Sequence[Representation]] = None,
                      per_z: int = 400) -> Optional[RZWitness]:
    """Look for a Riedtmann–Zwara witness for ``m ≤ n``; ``None`` when the bounds are exhausted."""
    if m.quiver != n.quiver or m.field != n.field or m.dims != n.dims:
        return None
    iso = is_isomorphic(m, n, seed)
    if iso is not None:
        return trivial_witness(m, n, iso)
    if dim_bound is None:
        dim_bound = 2 * m.total_dim
    q, F = m.quiver, m.field
    rng = random.Random(seed)
    pool = list(pool) if pool is not None else candidate_pool(m, n)
    radicals: Dict[int, List[RepMorphism]] = {}
    target_profile = _rank_profile(n)
    for combo in _z_candidates(pool, dim_bound):
        for k in set(combo):
            if k not in radicals:
                radicals[k] = radical_basis(pool[k])
        parts = [(k, pool[k]) for k in combo]
        ds = direct_sum([x for _, x in parts], q, F)
        z = ds.rep
        hz = hom_basis(z, m)
        if not hz:
            continue
        rad = _sum_radical(parts, z, ds.inclusions, ds.projections, radicals)
        rad_vecs = [[F.zero] * len(rad)] + list(_coefficient_vectors(F, len(rad), rng, 27, 6))
        mid = direct_sum([z, m], q, F).rep
        tried = 0
        for cv in rad_vecs:
            v = combine(rad, cv) if rad else RepMorphism.zero(z, z)
            for cu in _coefficient_vectors(F, len(hz), rng, 64, 16):
                tried += 1
                if tried > per_z:
                    break
                u = combine(hz, cu)
                emb = column_morphism(z, mid, [v, u])
                if not emb.is_injective():
                    continue
                kc = kernel_cokernel(emb)
                if _rank_profile(kc.cokernel) != target_profile:
                    continue
                phi = is_isomorphic(kc.cokernel, n, seed)
                if phi is None:
                    continue
                proj = phi @ kc.projection
                w = RZWitness(m, n, z, v, u, RepMorphism(mid, n, proj.components))
                verify_rz_witness(w)
                log.debug("witness found with z of dims %s", z.dims)
                return w
            if tried > per_z:
                break
    return None


# ---------------------------------------------------------------------------
# verdicts


@dataclass
class Verdict:
    status: str
    witness: object = None
    obstruction: Optional[dict] = None
    bounds: Dict[str, int] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return {YES: 0, NO: 1, UNKNOWN: 2}[self.status]

    def __bool__(self):
        return self.status == YES


def decide_deg(m: Representation, n: Representation, dim_bound: Optional[int] = None, seed: int = 0,
               test_set: Optional[Sequence[Representation]] = None) -> Verdict:
    """Three-valued decision of ``m ≤_deg n``."""
    if m.quiver != n.quiver or m.field != n.field:
        raise QuiverError("decide_deg needs representations over the same quiver and field")
    if dim_bound is None:
        dim_bound = 2 * m.total_dim
    bounds = {"dim_bound": dim_bound, "seed": seed}
    if m.dims != n.dims:
        return Verdict(NO, obstruction={"condition": "dimension_vector", "message": "dimension vector mismatch",
                                        "m": list(m.dims), "n": list(n.dims)}, bounds=bounds)
    iso = is_isomorphic(m, n, seed)
    if iso is not None:
        return Verdict(YES, witness=trivial_witness(m, n, iso), bounds=bounds)
    tests = list(test_set) if test_set is not None else default_test_set(m, n)
    ho = hom_order_leq(m, n, tests)
    if not ho:
        return Verdict(NO, obstruction={"condition": "hom_order", "direction": ho.direction,
                                        "X": ho.x.name, "X_rep": ho.x, "hom_m": ho.dim_m, "hom_n": ho.dim_n},
                       bounds=bounds)
    em, en = hom_dim(m, m), hom_dim(n, n)
    if em >= en:
        return Verdict(NO, obstruction={"condition": "orbit_dimension", "end_m": em, "end_n": en,
                                        "orbit_m": orbit_dimension(m), "orbit_n": orbit_dimension(n)},
                       bounds=bounds)
    w = rz_witness_search(m, n, dim_bound, seed)
    if w is not None:
        return Verdict(YES, witness=w, bounds=bounds)
    return Verdict(UNKNOWN, bounds=bounds)
