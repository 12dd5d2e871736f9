"""Bounded complexes over a hereditary path algebra.

Over a hereditary algebra every bounded complex is isomorphic in the
derived category to the sum of its shifted homology modules, so derived
isomorphism reduces to isomorphism of homology and

    dim Hom_D(c, d[n]) = Σ_i dim Hom(H^i c, H^(i+n) d) + dim Ext¹(H^i c, H^(i+n-1) d).

Triangle degenerations ``m ≤_Δ n`` are certified by a triangle
``z -> z ⊕ m -> n -> z[1]`` whose first component ``v`` is a strictly
nilpotent chain map, with ``n`` identified with the mapping cone.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .certify import CertificateError
from .decompose import is_isomorphic, radical_basis
from .linalg import ExactMatrix, FieldSpec, left_inverse
from .quiver import (
    Quiver,
    QuiverError,
    Representation,
    RepMorphism,
    direct_sum,
    ext1_dim,
    hom_dim,
    kernel_cokernel,
    restrict,
    solve_matrix_equations,
)


class ChainMapError(ValueError):
    """Components do not commute with the differentials."""


# ---------------------------------------------------------------------------
# complexes


@dataclass(frozen=True, eq=False)
class Complex:
    """Terms in degrees ``lo..hi`` with differentials ``d_i: c_i -> c_(i+1)``."""

    quiver: Quiver
    field: FieldSpec
    lo: int
    terms: Tuple[Representation, ...]
    diffs: Tuple[RepMorphism, ...]       # diffs[k] leaves degree lo + k; length len(terms) - 1
    name: Optional[str] = None

    def __post_init__(self):
        if self.quiver.relations:
            raise QuiverError("complexes are only supported over quivers without relations")
        if not self.terms:
            raise QuiverError("a complex needs at least one term")
        if len(self.diffs) != len(self.terms) - 1:
            raise QuiverError("wrong number of differentials")
        for t in self.terms:
            if t.quiver != self.quiver or t.field != self.field:
                raise QuiverError("complex terms live over different quivers or fields")
        for k, d in enumerate(self.diffs):
            if d.source.dims != self.terms[k].dims or d.target.dims != self.terms[k + 1].dims:
                raise QuiverError(f"differential in degree {self.lo + k} has the wrong shape")
            if d.source.maps != self.terms[k].maps or d.target.maps != self.terms[k + 1].maps:
                raise QuiverError(f"differential in degree {self.lo + k} joins the wrong terms")
        for k in range(len(self.diffs) - 1):
            if not (self.diffs[k + 1] @ self.diffs[k]).is_zero():
                raise QuiverError(f"d∘d is not zero in degree {self.lo + k}")

    # construction ---------------------------------------------------------
    @classmethod
    def stalk(cls, m: Representation, degree: int = 0, name: Optional[str] = None) -> "Complex":
        """``m`` concentrated in one degree."""
        return cls(m.quiver, m.field, degree, (m,), (), name if name is not None else m.name)

    @classmethod
    def zero(cls, quiver: Quiver, field: FieldSpec) -> "Complex":
        return cls.stalk(Representation.zero(quiver, field), 0, "0")

    @classmethod
    def from_map(cls, f: RepMorphism, lo: int = -1, name: Optional[str] = None) -> "Complex":
        """Two-term complex ``source -> target`` in degrees ``lo, lo+1``."""
        return cls(f.source.quiver, f.source.field, lo, (f.source, f.target), (f,), name)

    # accessors -------------------------------------------------------------
    @property
    def hi(self) -> int:
        return self.lo + len(self.terms) - 1

    def term(self, i: int) -> Representation:
        if self.lo <= i <= self.hi:
            return self.terms[i - self.lo]
        return Representation.zero(self.quiver, self.field)

    def diff(self, i: int) -> RepMorphism:
        if self.lo <= i < self.hi:
            return self.diffs[i - self.lo]
        return RepMorphism.zero(self.term(i), self.term(i + 1))

    @property
    def total_dim(self) -> int:
        return sum(t.total_dim for t in self.terms)

    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def trimmed(self) -> "Complex":
        """Drop zero terms at both ends (keeps one term for the zero complex)."""
        nz = [i for i in self.degrees() if self.term(i).total_dim]
        if not nz:
            return Complex.zero(self.quiver, self.field)
        lo, hi = nz[0], nz[-1]
        return Complex(self.quiver, self.field, lo, tuple(self.term(i) for i in range(lo, hi + 1)),
                       tuple(self.diff(i) for i in range(lo, hi)), self.name)

    def with_name(self, name: Optional[str]) -> "Complex":
        return Complex(self.quiver, self.field, self.lo, self.terms, self.diffs, name)

    def __repr__(self):
        dims = ", ".join(f"{i}:{self.term(i).dims}" for i in self.degrees())
        return f"<Complex {self.name or ''} [{dims}]>"


def _span(c: Complex, d: Complex, extra: int = 0) -> range:
    return range(min(c.lo, d.lo) - extra, max(c.hi, d.hi) + 1 + extra)


@dataclass(frozen=True, eq=False)
class ChainMap:
    source: Complex
    target: Complex
    components: Dict[int, RepMorphism]     # degrees missing from the dict are zero
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        for i, f in self.components.items():
            if f.source.dims != self.source.term(i).dims or f.target.dims != self.target.term(i).dims:
                raise QuiverError(f"chain map component in degree {i} has the wrong shape")
        if self.check:
            bad = self.commutation_failure()
            if bad is not None:
                raise ChainMapError(f"chain map does not commute with the differentials in degree {bad}")

    def at(self, i: int) -> RepMorphism:
        f = self.components.get(i)
        if f is None:
            return RepMorphism.zero(self.source.term(i), self.target.term(i))
        return f

    def degrees(self) -> range:
        return _span(self.source, self.target)

    def commutation_failure(self) -> Optional[int]:
        for i in _span(self.source, self.target, 1):
            lhs = [a @ b for a, b in zip(self.at(i + 1).components, self.source.diff(i).components)]
            rhs = [a @ b for a, b in zip(self.target.diff(i).components, self.at(i).components)]
            if lhs != rhs:
                return i
            f = self.at(i)
            if f.intertwining_failure() is not None:
                return i
        return None

    @classmethod
    def identity(cls, c: Complex) -> "ChainMap":
        return cls(c, c, {i: RepMorphism.identity(c.term(i)) for i in c.degrees()}, check=False)

    @classmethod
    def zero(cls, c: Complex, d: Complex) -> "ChainMap":
        return cls(c, d, {}, check=False)

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        comps = {}
        for i in _span(other.source, self.target):
            comps[i] = _compose(self.at(i), other.at(i), other.source.term(i), self.target.term(i))
        return ChainMap(other.source, self.target, comps, check=False)

    def power(self, e: int) -> "ChainMap":
        return ChainMap(self.source, self.target, {i: f.power(e) for i, f in self.components.items()}, check=False)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.components.values())

    def is_strictly_nilpotent(self) -> bool:
        return self.power(max(1, self.source.total_dim)).is_zero()


def _compose(f: RepMorphism, g: RepMorphism, src: Representation, tgt: Representation) -> RepMorphism:
    return RepMorphism(src, tgt, tuple(a @ b for a, b in zip(f.components, g.components)), check=False)


def chain_map_basis(c: Complex, d: Complex) -> List[ChainMap]:
    """Basis of the space of chain maps ``c -> d`` (not up to homotopy)."""
    if c.quiver != d.quiver or c.field != d.field:
        raise QuiverError("complexes over different quivers or fields")
    q = c.quiver
    degs = [i for i in range(max(c.lo, d.lo), min(c.hi, d.hi) + 1)]
    nv = len(q.vertices)
    shapes, index = [], {}
    for i in degs:
        for v in range(nv):
            index[i, v] = len(shapes)
            shapes.append((d.term(i).dims[v], c.term(i).dims[v]))
    eqs = []
    for i in degs:
        ci, di = c.term(i), d.term(i)
        for a, ca, da in zip(q.arrows, ci.maps, di.maps):
            s, t = q.index(a.src), q.index(a.tgt)
            if shapes[index[i, t]][0] and shapes[index[i, s]][1]:
                eqs.append([(index[i, t], None, ca, 1), (index[i, s], da, None, -1)])
    for i in range(min(degs, default=0) - 1, max(degs, default=-1) + 1):
        for v in range(nv):
            rows = d.term(i + 1).dims[v]
            cols = c.term(i).dims[v]
            if not rows or not cols:
                continue
            terms = []
            if (i + 1, v) in index:
                terms.append((index[i + 1, v], None, c.diff(i).components[v], 1))
            if (i, v) in index:
                terms.append((index[i, v], d.diff(i).components[v], None, -1))
            if terms:
                eqs.append(terms)
    out = []
    for sol in solve_matrix_equations(c.field, shapes, eqs):
        comps = {i: RepMorphism(c.term(i), d.term(i), tuple(sol[index[i, v]] for v in range(nv)), check=False)
                 for i in degs}
        out.append(ChainMap(c, d, comps))
    return out


def combine_chain(basis: Sequence[ChainMap], coeffs: Sequence, c: Complex, d: Complex) -> ChainMap:
    comps = {}
    for i in _span(c, d):
        parts = [b.at(i).scale(x) for b, x in zip(basis, coeffs)]
        acc = RepMorphism.zero(c.term(i), d.term(i))
        for p in parts:
            acc = acc + p
        comps[i] = acc
    return ChainMap(c, d, comps, check=False)


# ---------------------------------------------------------------------------
# homology, shift, cone


def homology(c: Complex, i: int) -> Representation:
    """``ker d_i / im d_(i-1)`` with the induced arrow matrices."""
    kc = kernel_cokernel(c.diff(i))
    cycles, inc = kc.kernel, kc.inclusion
    prev = c.diff(i - 1)
    comps = []
    for v, (iv, dv) in enumerate(zip(inc.components, prev.components)):
        if iv.ncols == 0:
            comps.append(ExactMatrix.zeros(c.field, 0, dv.ncols))
        else:
            comps.append(left_inverse(iv) @ dv)
    to_cycles = RepMorphism(c.term(i - 1), cycles, tuple(comps))
    return kernel_cokernel(to_cycles).cokernel


def homology_dims(c: Complex) -> Dict[int, Tuple[int, ...]]:
    return {i: homology(c, i).dims for i in c.degrees()}


def shift(c: Complex, n: int) -> Complex:
    """``c[n]``: terms ``c_(i+n)``, differentials ``(−1)^n d_(i+n)``."""
    sign = -1 if n % 2 else 1
    diffs = tuple(d.scale(c.field.coerce(sign)) if sign < 0 else d for d in c.diffs)
    return Complex(c.quiver, c.field, c.lo - n, c.terms, diffs,
                   f"{c.name}[{n}]" if c.name and n else c.name)


def shift_map(f: ChainMap, n: int) -> ChainMap:
    return ChainMap(shift(f.source, n), shift(f.target, n), {i - n: g for i, g in f.components.items()})


def direct_sum_complex(cs: Sequence[Complex], quiver: Quiver = None, field: FieldSpec = None) -> Complex:
    if not cs:
        return Complex.zero(quiver, field)
    q, F = cs[0].quiver, cs[0].field
    lo = min(c.lo for c in cs)
    hi = max(c.hi for c in cs)
    terms = {i: direct_sum([c.term(i) for c in cs], q, F).rep for i in range(lo, hi + 1)}
    diffs = []
    for i in range(lo, hi):
        comps = tuple(ExactMatrix.block_diag(F, [c.diff(i).components[v] for c in cs]) for v in range(len(q.vertices)))
        diffs.append(RepMorphism(terms[i], terms[i + 1], comps, check=False))
    return Complex(q, F, lo, tuple(terms[i] for i in range(lo, hi + 1)), tuple(diffs))


def column_chain_map(src: Complex, tgt: Complex, parts: Sequence[ChainMap]) -> ChainMap:
    """``src -> ⊕ tgt_k`` from components ``src -> tgt_k`` (``tgt`` must be their block sum)."""
    comps = {}
    for i in _span(src, tgt):
        mats = []
        for v in range(len(src.quiver.vertices)):
            blocks = [p.at(i).components[v] for p in parts]
            acc = blocks[0]
            for b in blocks[1:]:
                acc = acc.vstack(b)
            mats.append(acc)
        comps[i] = RepMorphism(src.term(i), tgt.term(i), tuple(mats), check=False)
    return ChainMap(src, tgt, comps)


def mapping_cone(f: ChainMap) -> Complex:
    """``cone(f)_i = c_(i+1) ⊕ d_i`` with differential ``[[−d_c, 0], [f, d_d]]``."""
    c, d = f.source, f.target
    bad = f.commutation_failure()
    if bad is not None:
        raise ChainMapError(f"mapping cone of a non-chain map (degree {bad})")
    q, F = c.quiver, c.field
    lo = min(c.lo - 1, d.lo)
    hi = max(c.hi - 1, d.hi)
    terms = {i: direct_sum([c.term(i + 1), d.term(i)], q, F).rep for i in range(lo, hi + 1)}
    minus = F.coerce(-1)
    diffs = []
    for i in range(lo, hi):
        mats = []
        for v in range(len(q.vertices)):
            dc = c.diff(i + 1).components[v].scale(minus)
            dd = d.diff(i).components[v]
            fv = f.at(i + 1).components[v]
            top = dc.hstack(ExactMatrix.zeros(F, dc.nrows, dd.ncols))
            bottom = fv.hstack(dd)
            mats.append(top.vstack(bottom))
        diffs.append(RepMorphism(terms[i], terms[i + 1], tuple(mats)))
    return Complex(q, F, lo, tuple(terms[i] for i in range(lo, hi + 1)), tuple(diffs))


# ---------------------------------------------------------------------------
# derived category


def homology_isos(c: Complex, d: Complex, seed: int = 0) -> Optional[Dict[int, RepMorphism]]:
    """Degreewise isomorphisms ``H^i(c) -> H^i(d)``, or ``None`` if some degree fails."""
    out = {}
    for i in _span(c, d):
        hc, hd = homology(c, i), homology(d, i)
        if hc.dims != hd.dims:
            return None
        if hc.total_dim == 0:
            continue
        iso = is_isomorphic(hc, hd, seed)
        if iso is None:
            return None
        out[i] = iso
    return out


def derived_iso(c: Complex, d: Complex) -> bool:
    """Isomorphism in D^b (via formality: compare homology degree by degree)."""
    return homology_isos(c, d) is not None


def hom_dim_derived(c: Complex, d: Complex, n: int) -> int:
    """``dim Hom_D(c, d[n])``."""
    if c.quiver != d.quiver or c.field != d.field:
        raise QuiverError("complexes over different quivers or fields")
    if n < d.lo - c.hi or n > d.hi - c.lo + 1:
        return 0
    total = 0
    hd = {j: homology(d, j) for j in d.degrees()}
    for i in c.degrees():
        hc = homology(c, i)
        if hc.total_dim == 0:
            continue
        if i + n in hd and hd[i + n].total_dim:
            total += hom_dim(hc, hd[i + n])
        if i + n - 1 in hd and hd[i + n - 1].total_dim:
            total += ext1_dim(hc, hd[i + n - 1])
    return total


def vanishing_shift(c: Complex, d: Complex) -> int:
    """A shift ``n`` with ``Hom_D(c, d[n]) = 0`` (just past the support)."""
    return (d.hi - c.lo) + 2


# ---------------------------------------------------------------------------
# triangle witnesses


@dataclass(eq=False)
class TriangleWitness:
    """Triangle ``z -(v,u)-> z ⊕ m -> n -> z[1]`` with ``v`` strictly nilpotent.

    ``cone_iso`` maps each nonzero ``H^i(cone(v,u))`` isomorphically onto
    ``H^i(n)``.
    """

    m: Complex
    n: Complex
    z: Complex
    v: ChainMap
    u: ChainMap
    cone_iso: Dict[int, RepMorphism]

    @property
    def middle(self) -> Complex:
        return direct_sum_complex([self.z, self.m])

    @property
    def embedding(self) -> ChainMap:
        return column_chain_map(self.z, self.middle, [self.v, self.u])

    def cone(self) -> Complex:
        return mapping_cone(self.embedding)

    def verify(self) -> bool:
        try:
            verify_triangle_witness(self)
        except (CertificateError, ChainMapError, QuiverError):
            return False
        return True


def verify_triangle_witness(w: TriangleWitness) -> None:
    """Re-check a triangle witness; raise :class:`CertificateError` on failure."""
    for x in (w.n, w.z):
        if x.quiver != w.m.quiver or x.field != w.m.field:
            raise CertificateError("witness complexes live over different quivers or fields")
    for label, f, src, tgt in (("v", w.v, w.z, w.z), ("u", w.u, w.z, w.m)):
        if f.source.total_dim != src.total_dim or f.target.total_dim != tgt.total_dim:
            raise CertificateError(f"{label} has the wrong source or target")
        if f.commutation_failure() is not None:
            raise CertificateError(f"{label} is not a chain map")
    if not w.v.is_strictly_nilpotent():
        raise CertificateError("v is not nilpotent")
    cone = w.cone()
    for i in _span(cone, w.n):
        hc, hn = homology(cone, i), homology(w.n, i)
        if hc.total_dim == 0 and hn.total_dim == 0:
            continue
        iso = w.cone_iso.get(i)
        if iso is None:
            raise CertificateError(f"missing homology isomorphism in degree {i}")
        if iso.source.dims != hc.dims or iso.target.dims != hn.dims:
            raise CertificateError(f"homology isomorphism in degree {i} has the wrong shape")
        src = RepMorphism(hc, hn, iso.components, check=False)
        if src.intertwining_failure() is not None or not src.is_isomorphism():
            raise CertificateError(f"homology map in degree {i} is not an isomorphism")


def _triangle(m: Complex, n: Complex, z: Complex, v: ChainMap, u: ChainMap, seed: int = 0) -> Optional[TriangleWitness]:
    w = TriangleWitness(m, n, z, v, u, {})
    isos = homology_isos(w.cone(), n, seed)
    if isos is None:
        return None
    w.cone_iso = isos
    return w


def trivial_triangle(m: Complex, n: Complex) -> Optional[TriangleWitness]:
    """``z = 0`` witness when ``m ≅ n`` in D^b."""
    z = Complex.zero(m.quiver, m.field)
    return _triangle(m, n, z, ChainMap.zero(z, z), ChainMap.zero(z, m))


def ses_to_triangle(w) -> TriangleWitness:
    """The distinguished triangle of a module-level RZ witness (everything in degree 0)."""
    from .degeneration import verify_rz_witness

    verify_rz_witness(w)
    m, n, z = Complex.stalk(w.m), Complex.stalk(w.n), Complex.stalk(w.z)
    v = ChainMap(z, z, {0: w.v})
    u = ChainMap(z, m, {0: w.u})
    t = _triangle(m, n, z, v, u)
    if t is None:
        raise CertificateError("cone of the witness embedding is not isomorphic to n")
    return t


def shift_witness(w: TriangleWitness, k: int) -> TriangleWitness:
    """Image of a triangle witness under the shift functor ``[k]``."""
    t = _triangle(shift(w.m, k), shift(w.n, k), shift(w.z, k), shift_map(w.v, k), shift_map(w.u, k))
    if t is None:
        raise CertificateError("shifted triangle lost its cone isomorphism")
    return t


def _check_subquiver(sub: Quiver, ambient: Quiver):
    verts = set(sub.vertices)
    if not verts <= set(ambient.vertices):
        raise QuiverError("subquiver has vertices outside the ambient quiver")
    inside = {a.name for a in ambient.arrows if a.src in verts and a.tgt in verts}
    if {a.name for a in sub.arrows} != inside:
        raise QuiverError("subquiver is not full")
    if not ambient.is_convex(verts):
        raise QuiverError("restriction is only supported along convex subquivers")


def apply_restriction_functor(sub: Quiver, c: Complex) -> Complex:
    """Termwise restriction to a full convex subquiver (an exact, hence triangle, functor)."""
    _check_subquiver(sub, c.quiver)
    terms = tuple(restrict(t, sub) for t in c.terms)
    diffs = []
    keep = [c.quiver.index(v) for v in sub.vertices]
    for k, d in enumerate(c.diffs):
        diffs.append(RepMorphism(terms[k], terms[k + 1], tuple(d.components[i] for i in keep), check=False))
    return Complex(sub, c.field, c.lo, terms, tuple(diffs), c.name)


def _restrict_map(sub: Quiver, f: ChainMap, src: Complex, tgt: Complex) -> ChainMap:
    keep = [f.source.quiver.index(v) for v in sub.vertices]
    comps = {i: RepMorphism(src.term(i), tgt.term(i), tuple(g.components[j] for j in keep), check=False)
             for i, g in f.components.items() if src.lo <= i <= src.hi and tgt.lo <= i <= tgt.hi}
    return ChainMap(src, tgt, comps)


def restrict_witness(w: TriangleWitness, sub: Quiver) -> TriangleWitness:
    """Image of a triangle witness under restriction; ``F(v)`` stays nilpotent."""
    m, n, z = (apply_restriction_functor(sub, x) for x in (w.m, w.n, w.z))
    v = _restrict_map(sub, w.v, z, z)
    u = _restrict_map(sub, w.u, z, m)
    t = _triangle(m, n, z, v, u)
    if t is None:
        raise CertificateError("restricted triangle lost its cone isomorphism")
    return t


# ---------------------------------------------------------------------------
# search


def euler_characteristic(c: Complex) -> Tuple[int, ...]:
    out = [0] * len(c.quiver.vertices)
    for i in c.degrees():
        sign = -1 if i % 2 else 1
        for v, d in enumerate(c.term(i).dims):
            out[v] += sign * d
    return tuple(out)


@dataclass
class HomLengthObstruction:
    x: Complex
    shift: int
    direction: str           # "covariant": Hom(X, -[n]); "contravariant": Hom(-, X[n])
    dim_m: int
    dim_n: int


def hom_length_obstruction(m: Complex, n: Complex, tests: Sequence[Representation],
                           shifts: Sequence[int]) -> Optional[HomLengthObstruction]:
    """First violation of ``dim Hom(X, m[k]) ≤ dim Hom(X, n[k])`` or its dual."""
    stalks = [Complex.stalk(x) for x in tests]
    for xc in stalks:
        for k in shifts:
            a, b = hom_dim_derived(xc, m, k), hom_dim_derived(xc, n, k)
            if a > b:
                return HomLengthObstruction(xc, k, "covariant", a, b)
    for xc in stalks:
        for k in shifts:
            a, b = hom_dim_derived(m, xc, k), hom_dim_derived(n, xc, k)
            if a > b:
                return HomLengthObstruction(xc, k, "contravariant", a, b)
    return None


def _stalk_pool(pool: Sequence[Representation], degrees: Sequence[int]) -> List[Tuple[Representation, int]]:
    return [(x, d) for d in degrees for x in pool]


def _z_combos(sizes: Sequence[int], bound: int) -> Iterator[List[int]]:
    for total in range(1, bound + 1):
        def rec(start, left):
            if left == 0:
                yield []
                return
            for i in range(start, len(sizes)):
                if sizes[i] <= left:
                    for tail in rec(i, left - sizes[i]):
                        yield [i] + tail
        yield from rec(0, total)


def _coefficients(F, k: int, rng: random.Random, limit: int, samples: int, include_zero: bool = False):
    if include_zero:
        yield [F.zero] * k
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
        yield [F.random(rng) if F.kind == "Fp" else F.coerce(rng.randint(-5, 5)) for _ in range(k)]


def _stalk_sum_radical(entries: Sequence[Tuple[int, Representation, int]], z: Complex,
                       radicals: Dict[int, List[RepMorphism]]) -> List[ChainMap]:
    """Nilpotent chain endomorphisms of a sum of stalk complexes, degree by degree."""
    from .quiver import hom_basis

    out = []
    by_degree: Dict[int, List[Tuple[int, int, Representation]]] = {}
    for pos, (k, x, deg) in enumerate(entries):
        by_degree.setdefault(deg, []).append((pos, k, x))
    for deg, items in by_degree.items():
        term = z.term(deg)
        ds = direct_sum([x for _, _, x in items], z.quiver, z.field)
        if ds.rep.dims != term.dims:
            raise AssertionError("stalk sum out of step with its terms")
        for a, (_, ka, xa) in enumerate(items):
            for b, (_, kb, xb) in enumerate(items):
                gens = radicals[ka] if ka == kb else hom_basis(xb, xa)
                for f in gens:
                    g = ds.inclusions[a] @ f @ ds.projections[b]
                    out.append(ChainMap(z, z, {deg: RepMorphism(term, term, g.components, check=False)}, check=False))
    return out


@dataclass
class DeltaResult:
    status: str                                   # "yes" | "no" | "unknown"
    witness: Optional[TriangleWitness] = None
    obstruction: Optional[dict] = None
    bounds: Dict[str, int] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return {"yes": 0, "no": 1, "unknown": 2}[self.status]


def delta_witness_search(m: Complex, n: Complex, bound: Optional[int] = None, seed: int = 0,
                         pool: Optional[Sequence[Representation]] = None, shift_range: int = 1,
                         per_z: int = 300) -> Optional[TriangleWitness]:
    """Bounded search for a triangle witness of ``m ≤_Δ n``."""
    if m.quiver != n.quiver or m.field != n.field:
        raise QuiverError("complexes over different quivers or fields")
    if euler_characteristic(m) != euler_characteristic(n):
        return None
    t = trivial_triangle(m, n)
    if t is not None:
        return t
    q, F = m.quiver, m.field
    if bound is None:
        bound = 2 * m.total_dim
    if pool is None:
        pool = _default_pool(m, n)
    degrees = list(range(min(m.lo, n.lo) - shift_range, max(m.hi, n.hi) + shift_range + 1))
    cands = _stalk_pool(pool, degrees)
    rng = random.Random(seed)
    radicals: Dict[int, List[RepMorphism]] = {}
    for combo in _z_combos([x.total_dim for x, _ in cands], bound):
        entries = []
        for k in combo:
            x, deg = cands[k]
            kx = k % len(pool)
            if kx not in radicals:
                radicals[kx] = radical_basis(pool[kx])
            entries.append((kx, x, deg))
        entries.sort(key=lambda e: e[2])
        z = direct_sum_complex([Complex.stalk(x, deg) for _, x, deg in entries], q, F)
        us = chain_map_basis(z, m)
        if not us:
            continue
        rad = _stalk_sum_radical(entries, z, radicals)
        tried = 0
        for cv in _coefficients(F, len(rad), rng, 27, 6, include_zero=True):
            v = combine_chain(rad, cv, z, z) if rad else ChainMap.zero(z, z)
            for cu in _coefficients(F, len(us), rng, 64, 16):
                tried += 1
                if tried > per_z:
                    break
                u = combine_chain(us, cu, z, m)
                w = _triangle(m, n, z, v, u, seed)
                if w is not None:
                    verify_triangle_witness(w)
                    return w
            if tried > per_z:
                break
    return None


def _default_pool(m: Complex, n: Complex) -> List[Representation]:
    from .degeneration import candidate_pool

    dims = [0] * len(m.quiver.vertices)
    for c in (m, n):
        for i in c.degrees():
            for v, d in enumerate(c.term(i).dims):
                dims[v] = max(dims[v], d)
    fake = Representation.build(m.quiver, m.field, dims)
    return candidate_pool(fake, fake)


def delta_check(m: Complex, n: Complex, bound: Optional[int] = None, seed: int = 0,
                shift_range: int = 1, tests: Optional[Sequence[Representation]] = None) -> DeltaResult:
    """Three-valued check of ``m ≤_Δ n``: witness, hom-length obstruction, or unknown."""
    bounds = {"bound": bound if bound is not None else 2 * m.total_dim, "seed": seed, "shift_range": shift_range}
    if euler_characteristic(m) != euler_characteristic(n):
        return DeltaResult("no", obstruction={"condition": "euler_characteristic",
                                              "m": list(euler_characteristic(m)),
                                              "n": list(euler_characteristic(n))}, bounds=bounds)
    if tests is None:
        tests = _default_pool(m, n)
    width = max(m.hi, n.hi) - min(m.lo, n.lo) + 1
    ob = hom_length_obstruction(m, n, tests, range(-width - 1, width + 2))
    if ob is not None:
        return DeltaResult("no", obstruction={"condition": "hom_length", "direction": ob.direction,
                                              "X": ob.x.name, "X_rep": ob.x.terms[0], "shift": ob.shift,
                                              "hom_m": ob.dim_m, "hom_n": ob.dim_n}, bounds=bounds)
    w = delta_witness_search(m, n, bound, seed, shift_range=shift_range)
    if w is not None:
        return DeltaResult("yes", witness=w, bounds=bounds)
    return DeltaResult("unknown", bounds=bounds)


# ---------------------------------------------------------------------------
# subcategory experiment


@dataclass
class DescentEntry:
    m: Representation
    n: Representation
    ambient_found: bool
    sub_found: bool
    ambient_witness: Optional[TriangleWitness] = None
    sub_witness: Optional[TriangleWitness] = None
    obstruction: Optional[HomLengthObstruction] = None    # rules out both relations exactly


def subcategory_descent_report(ambient: Quiver, sub_vertices: Sequence, dimvecs: Sequence, field: FieldSpec,
                               bound: Optional[int] = None, seed: int = 0) -> List[DescentEntry]:
    """Compare ``≤_Δ`` witnesses found in the ambient category and in a full subcategory.

    Objects are modules supported on ``sub_vertices``; the subcategory
    search only allows ``z`` built from indecomposables supported there.
    The outcome is recorded, never asserted.
    """
    from .enumeration import enumerate_indecomposables, enumerate_modules

    keep = {str(v) for v in sub_vertices}
    out = []
    for dv in dimvecs:
        dv = tuple(dv)
        if any(d and v not in keep for v, d in zip(ambient.vertices, dv)):
            raise QuiverError(f"dimension vector {dv} is not supported on {sorted(keep)}")
        mods = enumerate_modules(ambient, dv, field)
        cap = tuple(min(3, max(1, 2 * d)) for d in dv)
        full = enumerate_indecomposables(ambient, cap, field)
        inside = [x for x in full if all(d == 0 or v in keep for v, d in zip(ambient.vertices, x.dims))]
        for a in mods:
            for b in mods:
                if a is b:
                    continue
                ma, mb = Complex.stalk(a), Complex.stalk(b)
                ob = hom_length_obstruction(ma, mb, full, range(-2, 3))
                if ob is not None:
                    out.append(DescentEntry(a, b, False, False, obstruction=ob))
                    continue
                wa = delta_witness_search(ma, mb, bound, seed, pool=full)
                ws = delta_witness_search(ma, mb, bound, seed, pool=inside)
                out.append(DescentEntry(a, b, wa is not None, ws is not None, wa, ws))
    return out


def format_descent_report(entries: Sequence[DescentEntry]) -> str:
    """One line per tested pair: ambient result, subcategory result, and how each was settled."""
    lines = []
    for e in entries:
        how = "obstructed" if e.obstruction is not None else "searched"
        lines.append(f"{e.m.name} -> {e.n.name}: ambient={'found' if e.ambient_found else 'not found'} "
                     f"sub={'found' if e.sub_found else 'not found'} ({how})")
    return "\n".join(lines)
