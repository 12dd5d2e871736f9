"""One-parameter families over k[t] and degeneration along a discrete valuation ring.

A family is a representation whose arrow matrices have entries in k[t],
acting on free k[t]-modules of rank d_v; freeness makes it flat over the
local ring at t = 0. Its special fiber is the value at t = 0 and its
generic fiber lives over k(t).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence

from .decompose import is_isomorphic
from .degeneration import RZWitness, rz_witness_search, verify_rz_witness
from .linalg import ExactMatrix, FieldSpec, check_smith, smith_normal_form
from .quiver import Quiver, QuiverError, Representation, RepMorphism

log = logging.getLogger(__name__)


class FlatnessError(ArithmeticError):
    """A presentation that should be free over k[t] has a non-unit invariant factor."""


@dataclass(frozen=True, eq=False)
class FamilyRep:
    """A representation over k[t]; ``base`` is the ground field k."""

    quiver: Quiver
    base: FieldSpec
    dims: tuple
    maps: tuple
    name: Optional[str] = None

    def __post_init__(self):
        if self.base.kind not in ("Q", "Fp"):
            raise QuiverError(f"family base must be Q or F_p, got {self.base}")
        # shape and relation checks are inherited from Representation
        self.as_representation()

    @property
    def ring(self) -> FieldSpec:
        return FieldSpec.polynomials(self.base)

    @classmethod
    def build(cls, quiver: Quiver, base: FieldSpec, dims, matrices: Dict[str, Sequence], name=None) -> "FamilyRep":
        r = Representation.build(quiver, FieldSpec.polynomials(base), dims,
                                 {a: _poly_matrix(base, m) for a, m in matrices.items()})
        return cls(quiver, base, r.dims, r.maps, name)

    @classmethod
    def constant(cls, m: Representation) -> "FamilyRep":
        R = FieldSpec.polynomials(m.field)
        return cls(m.quiver, m.field, m.dims, tuple(x.change_field(R) for x in m.maps), m.name)

    def as_representation(self) -> Representation:
        return Representation(self.quiver, self.ring, self.dims, self.maps, self.name)

    def evaluate(self, c) -> Representation:
        """The fiber at ``t = c``."""
        c = self.base.coerce(c)
        maps = tuple(x.map(lambda p: p(c), self.base) for x in self.maps)
        return Representation(self.quiver, self.base, self.dims, maps)

    def special_fiber(self) -> Representation:
        return self.evaluate(0)

    def generic_fiber(self) -> Representation:
        K = FieldSpec.rational_functions(self.base)
        return Representation(self.quiver, K, self.dims, tuple(x.change_field(K) for x in self.maps))

    def __repr__(self):
        return f"<FamilyRep {self.name or ''} dims={self.dims} over {self.ring}>"


def _poly_matrix(base: FieldSpec, rows) -> ExactMatrix:
    R = FieldSpec.polynomials(base)
    if isinstance(rows, ExactMatrix):
        return rows.change_field(R)
    out = [[R.parse(x) if isinstance(x, str) else R.coerce(x) for x in r] for r in rows]
    return ExactMatrix(R, out, len(out[0]) if out else 0)


def special_fiber(q: FamilyRep) -> Representation:
    return q.special_fiber()


def generic_fiber(q: FamilyRep) -> Representation:
    return q.generic_fiber()


@dataclass
class DvrReport:
    generic_ok: bool
    special_ok: bool
    generic_iso: Optional[RepMorphism] = None      # m ⊗ k(t) -> generic fiber
    special_iso: Optional[RepMorphism] = None      # special fiber -> n
    notes: Dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.generic_ok and self.special_ok

    def __bool__(self):
        return self.passed


def check_dvr_degeneration(m: Representation, n: Representation, q: FamilyRep, seed: int = 0) -> DvrReport:
    """Check ``m ⊗ k(t) ≅`` generic fiber and special fiber ``≅ n``.

    Any isomorphism returned is exact. Over k(t) a failure to find one is
    exact when explained by a Hom-dimension obstruction (recorded in
    ``notes``) and otherwise rests on random sampling.
    """
    from .decompose import hom_obstruction

    if m.quiver != q.quiver or n.quiver != q.quiver:
        raise QuiverError("family and representations use different quivers")
    if m.field != q.base or n.field != q.base:
        raise QuiverError("family and representations use different base fields")
    gen = q.generic_fiber()
    mk = m.change_field(gen.field)
    giso = is_isomorphic(mk, gen, seed)
    notes: Dict[str, object] = {}
    if giso is None:
        ob = hom_obstruction(mk, gen)
        notes["generic"] = ob if ob is not None else "no isomorphism found by sampling"
    sp = q.special_fiber()
    siso = is_isomorphic(sp, n, seed)
    if siso is None:
        notes["special"] = "special fiber not isomorphic to n"
    return DvrReport(giso is not None, siso is not None, giso, siso, notes)


def rz_to_family(w: RZWitness) -> FamilyRep:
    """Family ``coker(z[t] -> (z ⊕ m)[t])`` of ``z ↦ (v(z) − t z, u(z))``.

    The presentation matrix at each vertex has a unit Smith form because
    ``v`` is nilpotent and the embedding is injective at ``t = 0``; the
    cokernel is then free and the arrows are transported along the Smith
    basis.
    """
    verify_rz_witness(w)
    m, z = w.m, w.z
    k = m.field
    R = FieldSpec.polynomials(k)
    t = R.t
    q = m.quiver
    proj, sect = [], []
    for i, (vz, uz) in enumerate(zip(w.v.components, w.u.components)):
        dz, dm = z.dims[i], m.dims[i]
        if dz == 0:
            proj.append(ExactMatrix.identity(R, dm))
            sect.append(ExactMatrix.identity(R, dm))
            continue
        a = (vz.change_field(R) - ExactMatrix.identity(R, dz).scale(t)).vstack(uz.change_field(R))
        form = smith_normal_form(a)
        if not check_smith(a, form):
            raise ArithmeticError("Smith form failed its own check")
        if any(d != R.one for d in form.diagonal):
            raise FlatnessError(f"non-unit invariant factor {[str(d) for d in form.diagonal]} at vertex {q.vertices[i]}")
        # rows dz.. of u span a complement of the image; u_inv columns give a section
        proj.append(form.u.submatrix(dz, dz + dm, 0, dz + dm))
        sect.append(form.u_inv.submatrix(0, dz + dm, dz, dz + dm))
    maps = []
    for a, za, ma in zip(q.arrows, z.maps, m.maps):
        s, tg = q.index(a.src), q.index(a.tgt)
        mid = ExactMatrix.block_diag(R, [za.change_field(R), ma.change_field(R)])
        maps.append(proj[tg] @ mid @ sect[s])
    return FamilyRep(q, k, m.dims, tuple(maps))


@dataclass
class FamilyWitnessResult:
    status: str                       # "yes" | "no" | "unknown"
    witness: Optional[RZWitness] = None
    report: Optional[DvrReport] = None


def family_to_witness(m: Representation, n: Representation, q: FamilyRep, seed: int = 0,
                      dim_bound: Optional[int] = None) -> FamilyWitnessResult:
    """Recover an RZ witness from a passing family by bounded search.

    ``no`` only means the family itself fails the check; an exhausted
    search is reported as ``unknown``.
    """
    report = check_dvr_degeneration(m, n, q, seed)
    if not report.passed:
        return FamilyWitnessResult("no", report=report)
    bound = dim_bound if dim_bound is not None else sum(q.dims)
    w = rz_witness_search(m, n, bound, seed)
    return FamilyWitnessResult("yes" if w is not None else "unknown", w, report)
