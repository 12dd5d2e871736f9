"""Quivers, representations and the Hom/Ext linear algebra between them.

Conventions: vectors are columns, the matrix of an arrow ``a: s -> t`` has
shape ``dim_t × dim_s``, and a morphism ``f: M -> N`` satisfies
``f_t @ M_a == N_a @ f_s`` for every arrow.
"""
from __future__ import annotations

import random
from functools import lru_cache
from dataclasses import dataclass, field as dc_field
from typing import Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .linalg import ExactMatrix, FieldSpec, kernel_matrix, left_inverse, left_kernel_matrix, right_inverse
from .linalg.matrix import _eliminate, _kernel_from_rref


class QuiverError(ValueError):
    pass


class IntertwiningError(ValueError):
    """A family of matrices fails to commute with the arrow maps."""


@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    tgt: str


@dataclass(frozen=True)
class Quiver:
    """Finite acyclic quiver with optional relations.

    A relation is a tuple of ``(coefficient, path)`` terms; a path is a tuple
    of arrow names listed in the order they are traversed.
    """

    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...] = ()
    relations: Tuple[Tuple[Tuple[object, Tuple[str, ...]], ...], ...] = ()

    def __post_init__(self):
        verts = tuple(str(v) for v in self.vertices)
        arrows = tuple(a if isinstance(a, Arrow) else Arrow(str(a[0]), str(a[1]), str(a[2]))
                       for a in self.arrows)
        arrows = tuple(Arrow(str(a.name), str(a.src), str(a.tgt)) for a in arrows)
        rels = tuple(tuple((c, tuple(str(x) for x in path)) for c, path in rel)
                     for rel in self.relations)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "relations", rels)
        if len(set(verts)) != len(verts):
            raise QuiverError("duplicate vertex")
        names = [a.name for a in arrows]
        if len(set(names)) != len(names):
            raise QuiverError("arrow names must be unique")
        vs = set(verts)
        for a in arrows:
            if a.src not in vs or a.tgt not in vs:
                raise QuiverError(f"arrow {a.name} has an undeclared endpoint")
        self.topological_order()  # raises on cycles
        by_name = {a.name: a for a in arrows}
        for rel in rels:
            ends = set()
            for _, path in rel:
                if len(path) < 2:
                    raise QuiverError("relation paths must have length at least 2")
                for x in path:
                    if x not in by_name:
                        raise QuiverError(f"relation uses unknown arrow {x}")
                for a, b in zip(path, path[1:]):
                    if by_name[a].tgt != by_name[b].src:
                        raise QuiverError(f"path {path} does not compose")
                ends.add((by_name[path[0]].src, by_name[path[-1]].tgt))
            if len(ends) > 1:
                raise QuiverError("paths of one relation must share source and target")

    # construction helpers ------------------------------------------------
    @classmethod
    def linear_a(cls, n: int) -> "Quiver":
        """``1 -> 2 -> ... -> n``."""
        vs = [str(i) for i in range(1, n + 1)]
        return cls(tuple(vs), tuple(Arrow(f"a{i}", vs[i - 1], vs[i]) for i in range(1, n)))

    @classmethod
    def d4(cls) -> "Quiver":
        """Three sources ``1, 2, 3`` into the sink ``4``."""
        return cls(("1", "2", "3", "4"), tuple(Arrow(f"a{i}", str(i), "4") for i in (1, 2, 3)))

    @classmethod
    def from_json(cls, d: Mapping) -> "Quiver":
        arrows = tuple(Arrow(str(a["name"]), str(a["src"]), str(a["tgt"])) for a in d.get("arrows", []))
        rels = tuple(tuple((t["coef"], tuple(t["path"])) for t in rel) for rel in d.get("relations", []))
        return cls(tuple(d["vertices"]), arrows, rels)

    def to_json(self) -> dict:
        out = {
            "vertices": list(self.vertices),
            "arrows": [{"name": a.name, "src": a.src, "tgt": a.tgt} for a in self.arrows],
        }
        if self.relations:
            out["relations"] = [[{"coef": c, "path": list(p)} for c, p in rel] for rel in self.relations]
        return out

    # queries ---------------------------------------------------------------
    @property
    def is_hereditary(self) -> bool:
        return not self.relations

    def index(self, v) -> int:
        return self.vertices.index(str(v))

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise KeyError(name)

    def topological_order(self) -> List[str]:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.tgt] += 1
        ready = [v for v in self.vertices if indeg[v] == 0]
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a in self.arrows:
                if a.src == v:
                    indeg[a.tgt] -= 1
                    if indeg[a.tgt] == 0:
                        ready.append(a.tgt)
        if len(order) != len(self.vertices):
            raise QuiverError("quiver has an oriented cycle")
        return order

    def paths(self, start: str, end: str) -> List[Tuple[str, ...]]:
        """All paths (arrow-name tuples) from ``start`` to ``end``; the trivial path is ``()``."""
        out = []

        def walk(v, acc):
            if v == end:
                out.append(tuple(acc))
            for a in self.arrows:
                if a.src == v:
                    walk(a.tgt, acc + [a.name])

        walk(str(start), [])
        return out

    def is_convex(self, subset: Iterable) -> bool:
        """Every path between two vertices of ``subset`` stays inside it."""
        sub = {str(v) for v in subset}
        reach = {v: self._reachable(v) for v in self.vertices}
        for x in self.vertices:
            if x in sub:
                continue
            if any(x in reach[s] for s in sub) and any(t in reach[x] for t in sub):
                return False
        return True

    def _reachable(self, v: str) -> set:
        seen, stack = set(), [v]
        while stack:
            w = stack.pop()
            for a in self.arrows:
                if a.src == w and a.tgt not in seen:
                    seen.add(a.tgt)
                    stack.append(a.tgt)
        return seen

    def full_subquiver(self, subset: Iterable) -> "Quiver":
        sub = [v for v in self.vertices if v in {str(s) for s in subset}]
        arrows = tuple(a for a in self.arrows if a.src in sub and a.tgt in sub)
        names = {a.name for a in arrows}
        rels = tuple(rel for rel in self.relations if all(x in names for _, p in rel for x in p))
        return Quiver(tuple(sub), arrows, rels)

    def underlying_edges(self) -> List[Tuple[int, int]]:
        return [(self.index(a.src), self.index(a.tgt)) for a in self.arrows]


@lru_cache(maxsize=256)
def _zero_rep(quiver: Quiver, field: FieldSpec) -> "Representation":
    # representations are immutable, so one zero object per (quiver, field) is shared
    return Representation.build(quiver, field, [0] * len(quiver.vertices), name="0")


def _as_dims(quiver: Quiver, dims) -> Tuple[int, ...]:
    if isinstance(dims, Mapping):
        d = {str(k): int(v) for k, v in dims.items()}
        for k in d:
            if k not in quiver.vertices:
                raise QuiverError(f"unknown vertex {k}")
        return tuple(d.get(v, 0) for v in quiver.vertices)
    out = tuple(int(x) for x in dims)
    if len(out) != len(quiver.vertices):
        raise QuiverError("dimension vector has the wrong length")
    return out


@dataclass(frozen=True, eq=False)
class Representation:
    """Per-vertex dimensions and per-arrow matrices over one field."""

    quiver: Quiver
    field: FieldSpec
    dims: Tuple[int, ...]
    maps: Tuple[ExactMatrix, ...]
    name: Optional[str] = dc_field(default=None, compare=False)

    def __post_init__(self):
        if any(d < 0 for d in self.dims):
            raise QuiverError("negative dimension")
        if len(self.dims) != len(self.quiver.vertices) or len(self.maps) != len(self.quiver.arrows):
            raise QuiverError("representation does not match its quiver")
        for a, m in zip(self.quiver.arrows, self.maps):
            want = (self.dim(a.tgt), self.dim(a.src))
            if m.shape != want:
                raise QuiverError(f"arrow {a.name}: matrix shape {m.shape}, expected {want}")
            if m.field != self.field:
                raise QuiverError(f"arrow {a.name}: matrix over {m.field}, representation over {self.field}")
        for rel in self.quiver.relations:
            if not self.evaluate_relation(rel).is_zero():
                raise QuiverError(f"relation {rel} does not vanish")

    @classmethod
    def build(cls, quiver: Quiver, field: FieldSpec, dims, matrices: Optional[Mapping] = None,
              name: Optional[str] = None) -> "Representation":
        """Convenience constructor; arrows missing from ``matrices`` get zero maps."""
        dims = _as_dims(quiver, dims)
        matrices = matrices or {}
        maps = []
        for a in quiver.arrows:
            nr, nc = dims[quiver.index(a.tgt)], dims[quiver.index(a.src)]
            m = matrices.get(a.name)
            if m is None:
                maps.append(ExactMatrix.zeros(field, nr, nc))
            elif isinstance(m, ExactMatrix):
                maps.append(m)
            else:
                try:
                    maps.append(ExactMatrix(field, m, nc))
                except ValueError as e:
                    raise QuiverError(f"arrow {a.name}: {e}; expected shape {(nr, nc)}") from e
        return cls(quiver, field, dims, tuple(maps), name)

    @classmethod
    def zero(cls, quiver: Quiver, field: FieldSpec) -> "Representation":
        return _zero_rep(quiver, field)

    @classmethod
    def simple(cls, quiver: Quiver, field: FieldSpec, v) -> "Representation":
        return cls.build(quiver, field, {str(v): 1}, name=f"S{v}")

    @classmethod
    def projective(cls, quiver: Quiver, field: FieldSpec, v) -> "Representation":
        """Indecomposable projective at ``v``: basis at ``w`` = paths ``v ~> w``."""
        if quiver.relations:
            raise QuiverError("projectives are only built for quivers without relations")
        v = str(v)
        paths = {w: quiver.paths(v, w) for w in quiver.vertices}
        mats = {}
        for a in quiver.arrows:
            src, tgt = paths[a.src], paths[a.tgt]
            rows = [[1 if q == p + (a.name,) else 0 for p in src] for q in tgt]
            mats[a.name] = ExactMatrix(field, rows, len(src))
        return cls.build(quiver, field, {w: len(paths[w]) for w in quiver.vertices}, mats, name=f"P{v}")

    @classmethod
    def injective(cls, quiver: Quiver, field: FieldSpec, v) -> "Representation":
        """Indecomposable injective at ``v``: basis at ``w`` = paths ``w ~> v``."""
        if quiver.relations:
            raise QuiverError("injectives are only built for quivers without relations")
        v = str(v)
        paths = {w: quiver.paths(w, v) for w in quiver.vertices}
        mats = {}
        for a in quiver.arrows:
            src, tgt = paths[a.src], paths[a.tgt]
            rows = [[1 if p == (a.name,) + q else 0 for p in src] for q in tgt]
            mats[a.name] = ExactMatrix(field, rows, len(src))
        return cls.build(quiver, field, {w: len(paths[w]) for w in quiver.vertices}, mats, name=f"I{v}")

    # accessors ----------------------------------------------------------------
    def dim(self, v) -> int:
        return self.dims[self.quiver.index(v)]

    def map(self, arrow: str) -> ExactMatrix:
        return self.maps[self.quiver.arrow_index(arrow)]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def dimvec(self) -> Tuple[int, ...]:
        return self.dims

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def evaluate_path(self, path: Sequence[str]) -> ExactMatrix:
        m = None
        for x in path:
            a = self.map(x)
            m = a if m is None else a @ m
        return m

    def evaluate_relation(self, rel) -> ExactMatrix:
        acc = None
        for coef, path in rel:
            term = self.evaluate_path(path).scale(self.field.parse(coef))
            acc = term if acc is None else acc + term
        return acc

    def with_name(self, name: Optional[str]) -> "Representation":
        return Representation(self.quiver, self.field, self.dims, self.maps, name)

    def change_field(self, field: FieldSpec) -> "Representation":
        return Representation(self.quiver, field, self.dims,
                              tuple(m.change_field(field) for m in self.maps), self.name)

    def same_data(self, other: "Representation") -> bool:
        """Literal equality of quiver, field, dimensions and matrices."""
        return (self.quiver == other.quiver and self.field == other.field
                and self.dims == other.dims and self.maps == other.maps)

    def __repr__(self):
        label = self.name or "Rep"
        return f"<{label} dims={self.dims} over {self.field}>"


@dataclass(frozen=True, eq=False)
class RepMorphism:
    """Per-vertex matrices ``f_v: M_v -> N_v`` commuting with all arrows."""

    source: Representation
    target: Representation
    components: Tuple[ExactMatrix, ...]
    check: bool = dc_field(default=True, compare=False, repr=False)

    def __post_init__(self):
        s, t = self.source, self.target
        if s.quiver != t.quiver or s.field != t.field:
            raise QuiverError("morphism between representations of different quivers or fields")
        if len(self.components) != len(s.quiver.vertices):
            raise QuiverError("wrong number of morphism components")
        for v, f in zip(s.quiver.vertices, self.components):
            if f.shape != (t.dim(v), s.dim(v)):
                raise QuiverError(f"component at {v} has shape {f.shape}")
        if self.check:
            bad = self.intertwining_failure()
            if bad is not None:
                raise IntertwiningError(f"morphism does not commute with arrow {bad}")

    def intertwining_failure(self) -> Optional[str]:
        q = self.source.quiver
        for a, ma, na in zip(q.arrows, self.source.maps, self.target.maps):
            ft = self.components[q.index(a.tgt)]
            fs = self.components[q.index(a.src)]
            if ft @ ma != na @ fs:
                return a.name
        return None

    @classmethod
    def identity(cls, m: Representation) -> "RepMorphism":
        return cls(m, m, tuple(ExactMatrix.identity(m.field, d) for d in m.dims), check=False)

    @classmethod
    def zero(cls, m: Representation, n: Representation) -> "RepMorphism":
        return cls(m, n, tuple(ExactMatrix.zeros(m.field, e, d) for d, e in zip(m.dims, n.dims)),
                   check=False)

    def component(self, v) -> ExactMatrix:
        return self.components[self.source.quiver.index(v)]

    def __matmul__(self, other: "RepMorphism") -> "RepMorphism":
        """``self @ other`` is ``self ∘ other``."""
        if other.target.dims != self.source.dims:
            raise QuiverError("morphisms do not compose")
        return RepMorphism(other.source, self.target,
                           tuple(f @ g for f, g in zip(self.components, other.components)), check=False)

    def __add__(self, other: "RepMorphism") -> "RepMorphism":
        return RepMorphism(self.source, self.target,
                           tuple(f + g for f, g in zip(self.components, other.components)), check=False)

    def __sub__(self, other: "RepMorphism") -> "RepMorphism":
        return RepMorphism(self.source, self.target,
                           tuple(f - g for f, g in zip(self.components, other.components)), check=False)

    def scale(self, c) -> "RepMorphism":
        return RepMorphism(self.source, self.target, tuple(f.scale(c) for f in self.components), check=False)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.components)

    def is_injective(self) -> bool:
        return all(f.rank() == f.ncols for f in self.components)

    def is_surjective(self) -> bool:
        return all(f.rank() == f.nrows for f in self.components)

    def is_isomorphism(self) -> bool:
        return all(f.is_square() and f.rank() == f.nrows for f in self.components)

    def inverse(self) -> "RepMorphism":
        return RepMorphism(self.target, self.source, tuple(f.inverse() for f in self.components), check=False)

    def power(self, e: int) -> "RepMorphism":
        return RepMorphism(self.source, self.target, tuple(f ** e for f in self.components), check=False)

    def is_nilpotent(self) -> bool:
        """Exact test: ``f^(total dim)`` vanishes."""
        n = max(1, self.source.total_dim)
        return self.power(n).is_zero()

    def total_matrix(self) -> ExactMatrix:
        """Block-diagonal matrix acting on the total space."""
        return ExactMatrix.block_diag(self.source.field, self.components)

    def as_vector(self) -> tuple:
        return tuple(x for f in self.components for r in f.rows for x in r)


# ----------------------------------------------------------------------------
# linear matrix equations


def solve_matrix_equations(field: FieldSpec, shapes: Sequence[Tuple[int, int]],
                           equations: Sequence[Sequence[Tuple[int, Optional[ExactMatrix], Optional[ExactMatrix], int]]],
                           ) -> List[Tuple[ExactMatrix, ...]]:
    """Basis of solutions of a homogeneous system in matrix unknowns.

    Unknown ``k`` is a matrix of shape ``shapes[k]``. Each equation is a
    list of terms ``(k, A, B, sign)`` standing for ``sign * A @ X_k @ B``;
    ``A`` or ``B`` may be ``None`` for the identity. The terms of one
    equation must sum to the zero matrix.
    """
    offsets = []
    n = 0
    for r, c in shapes:
        offsets.append(n)
        n += r * c
    zero = field.zero
    rows = []
    for eq in equations:
        # output shape from the first term
        k, A, B, _ = eq[0]
        out_r = A.nrows if A is not None else shapes[k][0]
        out_c = B.ncols if B is not None else shapes[k][1]
        for i in range(out_r):
            for j in range(out_c):
                row = [zero] * n
                nonzero = False
                for k, A, B, sign in eq:
                    r, c = shapes[k]
                    off = offsets[k]
                    if A is None and B is None:
                        row[off + i * c + j] = row[off + i * c + j] + sign
                        nonzero = True
                        continue
                    arow = A.rows[i] if A is not None else None
                    for p in range(r):
                        a = arow[p] if arow is not None else (1 if p == i else 0)
                        if not a:
                            continue
                        if B is None:
                            idx = off + p * c + j
                            row[idx] = row[idx] + a * sign
                            nonzero = True
                        else:
                            base = off + p * c
                            for q in range(c):
                                b = B.rows[q][j]
                                if b:
                                    row[base + q] = row[base + q] + a * b * sign
                                    nonzero = True
                if nonzero:
                    rows.append(row)
    rows = [[field.coerce(x) if isinstance(x, int) else x for x in r] for r in rows]
    pivots = _eliminate(rows, n)
    basis = _kernel_from_rref(rows, pivots, n, field)
    out = []
    for vec in basis:
        mats = []
        for (r, c), off in zip(shapes, offsets):
            mats.append(ExactMatrix._raw(field, tuple(tuple(vec[off + i * c: off + (i + 1) * c]) for i in range(r)), r, c))
        out.append(tuple(mats))
    return out


def _check_compatible(m: Representation, n: Representation):
    if m.quiver != n.quiver:
        raise QuiverError("representations of different quivers")
    if m.field != n.field:
        raise QuiverError(f"representations over different fields ({m.field} vs {n.field})")


def hom_basis(m: Representation, n: Representation) -> List[RepMorphism]:
    """Basis of ``Hom(m, n)`` from the kernel of the stacked intertwining system."""
    _check_compatible(m, n)
    sols = _hom_solutions(m.quiver, m.field, m.dims, m.maps, n.dims, n.maps)
    return [RepMorphism(m, n, comps, check=False) for comps in sols]


@lru_cache(maxsize=4096)
def _hom_solutions(q, field, mdims, mmaps, ndims, nmaps):
    m = Representation(q, field, mdims, mmaps)
    n = Representation(q, field, ndims, nmaps)
    shapes = [(n.dims[i], m.dims[i]) for i in range(len(q.vertices))]
    eqs = []
    for a, ma, na in zip(q.arrows, m.maps, n.maps):
        s, t = q.index(a.src), q.index(a.tgt)
        if shapes[t][0] == 0 or shapes[s][1] == 0:
            continue
        # f_t M_a - N_a f_s = 0
        eqs.append([(t, None, ma, 1), (s, na, None, -1)])
    return tuple(solve_matrix_equations(m.field, shapes, eqs))


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_basis(m, n))


def combine(basis: Sequence[RepMorphism], coeffs: Sequence) -> RepMorphism:
    f = basis[0].scale(coeffs[0])
    for b, c in zip(basis[1:], coeffs[1:]):
        if c:
            f = f + b.scale(c)
    return f


def random_combination(basis: Sequence[RepMorphism], rng: random.Random) -> RepMorphism:
    field = basis[0].source.field
    return combine(basis, [field.random(rng) for _ in basis])


# ----------------------------------------------------------------------------
# sums, kernels, cokernels


class DirectSum(NamedTuple):
    rep: Representation
    inclusions: List[RepMorphism]
    projections: List[RepMorphism]


def direct_sum(reps: Sequence[Representation], quiver: Optional[Quiver] = None,
               field: Optional[FieldSpec] = None, name: Optional[str] = None) -> DirectSum:
    """Block-diagonal sum with canonical inclusions and projections.

    ``quiver`` and ``field`` are only needed for the empty sum.
    """
    if not reps:
        if quiver is None or field is None:
            raise QuiverError("the empty direct sum needs a quiver and a field")
        z = Representation.zero(quiver, field)
        return DirectSum(z, [], [])
    q, F = reps[0].quiver, reps[0].field
    for r in reps[1:]:
        _check_compatible(reps[0], r)
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(len(q.vertices)))
    maps = tuple(ExactMatrix.block_diag(F, [r.maps[k] for r in reps]) for k in range(len(q.arrows)))
    total = Representation(q, F, dims, maps, name)
    incs, projs = [], []
    offs = [0] * len(q.vertices)
    for r in reps:
        ic, pc = [], []
        for i, d in enumerate(r.dims):
            D = dims[i]
            rows_i = [[1 if row == offs[i] + col else 0 for col in range(d)] for row in range(D)]
            inc = ExactMatrix(F, rows_i, d)
            ic.append(inc)
            pc.append(inc.T)
            offs[i] += d
        incs.append(RepMorphism(r, total, tuple(ic), check=False))
        projs.append(RepMorphism(total, r, tuple(pc), check=False))
    return DirectSum(total, incs, projs)


def morphism_sum(fs: Sequence[RepMorphism], source: Representation, target: Representation) -> RepMorphism:
    """Block-diagonal ``⊕ f_i`` between given sums (which must be the block sums)."""
    F = source.field
    comps = tuple(ExactMatrix.block_diag(F, [f.components[i] for f in fs]) for i in range(len(source.dims)))
    return RepMorphism(source, target, comps, check=False)


def column_morphism(source: Representation, target: Representation, parts: Sequence[RepMorphism]) -> RepMorphism:
    """Morphism into a block sum given by its components ``source -> target_i`` stacked vertically."""
    comps = []
    for i in range(len(source.dims)):
        mats = [p.components[i] for p in parts]
        acc = mats[0]
        for m in mats[1:]:
            acc = acc.vstack(m)
        comps.append(acc)
    return RepMorphism(source, target, tuple(comps))


def row_morphism(source: Representation, target: Representation, parts: Sequence[RepMorphism]) -> RepMorphism:
    """Morphism out of a block sum given by its components ``source_i -> target``."""
    comps = []
    for i in range(len(target.dims)):
        mats = [p.components[i] for p in parts]
        acc = mats[0]
        for m in mats[1:]:
            acc = acc.hstack(m)
        comps.append(acc)
    return RepMorphism(source, target, tuple(comps))


class KernelCokernel(NamedTuple):
    kernel: Representation
    inclusion: RepMorphism
    cokernel: Representation
    projection: RepMorphism


def kernel_cokernel(f: RepMorphism) -> KernelCokernel:
    """Kernel with its inclusion and cokernel with its projection."""
    bad = f.intertwining_failure()
    if bad is not None:
        raise IntertwiningError(f"input is not a morphism (arrow {bad})")
    m, n = f.source, f.target
    q, F = m.quiver, m.field
    kers = [kernel_matrix(c) for c in f.components]            # d_v × k_v
    quots = [left_kernel_matrix(c) for c in f.components]      # c_v × e_v
    kmaps, cmaps = [], []
    for a, ma, na in zip(q.arrows, m.maps, n.maps):
        s, t = q.index(a.src), q.index(a.tgt)
        ks, kt = kers[s], kers[t]
        if kt.ncols == 0 or ks.ncols == 0:
            kmaps.append(ExactMatrix.zeros(F, kt.ncols, ks.ncols))
        else:
            kmaps.append(left_inverse(kt) @ ma @ ks)
        qs, qt = quots[s], quots[t]
        if qt.nrows == 0 or qs.nrows == 0:
            cmaps.append(ExactMatrix.zeros(F, qt.nrows, qs.nrows))
        else:
            cmaps.append(qt @ na @ right_inverse(qs))
    ker = Representation(q, F, tuple(k.ncols for k in kers), tuple(kmaps))
    cok = Representation(q, F, tuple(c.nrows for c in quots), tuple(cmaps))
    inc = RepMorphism(ker, m, tuple(kers))
    proj = RepMorphism(n, cok, tuple(quots))
    for i in range(len(q.vertices)):
        if m.dims[i] - ker.dims[i] - n.dims[i] + cok.dims[i] != 0:
            raise ArithmeticError("rank-nullity violated")
    if not (f @ inc).is_zero() or not (proj @ f).is_zero():
        raise ArithmeticError("kernel/cokernel maps do not compose to zero")
    return KernelCokernel(ker, inc, cok, proj)


def conjugate(m: Representation, g: Sequence[ExactMatrix], name: Optional[str] = None) -> Tuple[Representation, RepMorphism]:
    """Base change by invertible ``g_v``: returns ``m'`` and the isomorphism ``g: m -> m'``."""
    q = m.quiver
    ginv = [x.inverse() for x in g]
    maps = tuple(g[q.index(a.tgt)] @ ma @ ginv[q.index(a.src)] for a, ma in zip(q.arrows, m.maps))
    new = Representation(q, m.field, m.dims, maps, name if name is not None else m.name)
    return new, RepMorphism(m, new, tuple(g))


def random_invertible(field: FieldSpec, n: int, rng: random.Random) -> ExactMatrix:
    while True:
        g = ExactMatrix.random(field, n, n, rng)
        if g.rank() == n:
            return g


def random_conjugate(m: Representation, rng: random.Random) -> Tuple[Representation, RepMorphism]:
    return conjugate(m, [random_invertible(m.field, d, rng) for d in m.dims])


def random_representation(quiver: Quiver, field: FieldSpec, dims, rng: random.Random,
                          name: Optional[str] = None) -> Representation:
    if quiver.relations:
        raise QuiverError("random representations are only drawn for quivers without relations")
    dims = _as_dims(quiver, dims)
    mats = {a.name: ExactMatrix.random(field, dims[quiver.index(a.tgt)], dims[quiver.index(a.src)], rng)
            for a in quiver.arrows}
    return Representation.build(quiver, field, dims, mats, name)


# ----------------------------------------------------------------------------
# hereditary homological algebra


def euler_pairing(q: Quiver, d: Sequence[int], e: Sequence[int]) -> int:
    """``⟨d, e⟩ = Σ_v d_v e_v − Σ_a d_src(a) e_tgt(a)``."""
    if q.relations:
        raise QuiverError("the Euler form formula needs a quiver without relations")
    d, e = _as_dims(q, d), _as_dims(q, e)
    val = sum(x * y for x, y in zip(d, e))
    for a in q.arrows:
        val -= d[q.index(a.src)] * e[q.index(a.tgt)]
    return val


def ext1_dim(m: Representation, n: Representation) -> int:
    """``dim Ext¹(m, n) = dim Hom(m, n) − ⟨dim m, dim n⟩`` (hereditary case)."""
    _check_compatible(m, n)
    if m.quiver.relations:
        raise QuiverError("ext1_dim requires a quiver without relations")
    return hom_dim(m, n) - euler_pairing(m.quiver, m.dims, n.dims)


def restrict(m: Representation, sub: Quiver) -> Representation:
    """Drop vertices and arrows outside ``sub``."""
    mats = {a.name: m.map(a.name) for a in sub.arrows}
    return Representation.build(sub, m.field, {v: m.dim(v) for v in sub.vertices}, mats, m.name)


def extend_by_zero(m: Representation, ambient: Quiver) -> Representation:
    mats = {a.name: m.map(a.name) for a in m.quiver.arrows}
    return Representation.build(ambient, m.field, {v: m.dim(v) for v in m.quiver.vertices}, mats, m.name)
