"""JSON encodings of quivers, representations, morphisms, families, complexes and certificates.

Scalars are strings (``"a/b"`` over Q, residues over F_p, ``"c0+c1*t"``
for polynomials). Matrices are row-major lists of rows. Keys are emitted in
a fixed order so equal objects always serialize to identical text.
"""
from __future__ import annotations

import json
from typing import Any, Dict, Mapping, Optional

from .linalg import ExactMatrix, FieldSpec
from .quiver import Quiver, QuiverError, Representation, RepMorphism


class FormatError(QuiverError):
    """Malformed JSON input; the message names the offending field."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


# matrices ------------------------------------------------------------------


def matrix_to_json(m: ExactMatrix):
    return [[m.field.format(x) for x in row] for row in m.rows]


def matrix_from_json(field: FieldSpec, rows, nrows: int, ncols: int, what: str) -> ExactMatrix:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        raise FormatError(f"{what}: matrix must be a list of rows")
    if len(rows) != nrows or any(len(r) != ncols for r in rows):
        got = (len(rows), len(rows[0]) if rows else 0)
        raise FormatError(f"{what}: matrix shape {got}, expected {(nrows, ncols)}")
    try:
        vals = [[field.parse(str(x)) for x in r] for r in rows]
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise FormatError(f"{what}: bad scalar ({e})") from None
    return ExactMatrix(field, vals, ncols) if nrows else ExactMatrix.zeros(field, 0, ncols)


# quivers and representations ----------------------------------------------


def quiver_from_json(d: Mapping) -> Quiver:
    try:
        return Quiver.from_json(d)
    except (KeyError, TypeError) as e:
        raise FormatError(f"quiver: missing or malformed field {e}") from None


def field_from_json(d: Mapping) -> FieldSpec:
    try:
        return FieldSpec.from_json(d)
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"field: {e}") from None


def rep_to_json(m: Representation, with_quiver: bool = False) -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    if with_quiver:
        out["quiver"] = m.quiver.to_json()
    out["field"] = m.field.to_json()
    if m.name:
        out["name"] = m.name
    out["dims"] = {v: d for v, d in zip(m.quiver.vertices, m.dims)}
    out["matrices"] = {a.name: matrix_to_json(x) for a, x in zip(m.quiver.arrows, m.maps)}
    return out


def _dims(q: Quiver, d: Mapping, what: str):
    if not isinstance(d, Mapping):
        raise FormatError(f"{what}: dims must be an object keyed by vertex")
    unknown = set(map(str, d)) - set(q.vertices)
    if unknown:
        raise FormatError(f"{what}: dims name unknown vertices {sorted(unknown)}")
    dims = []
    for v in q.vertices:
        x = d.get(v, 0)
        if not isinstance(x, int) or x < 0:
            raise FormatError(f"{what}: dimension at {v} must be a nonnegative integer")
        dims.append(x)
    return tuple(dims)


def rep_from_json(d: Mapping, quiver: Optional[Quiver] = None, field: Optional[FieldSpec] = None,
                  what: str = "representation") -> Representation:
    if quiver is None:
        if "quiver" not in d:
            raise FormatError(f"{what}: no quiver given")
        quiver = quiver_from_json(d["quiver"])
    if field is None:
        if "field" not in d:
            raise FormatError(f"{what}: missing field")
        field = field_from_json(d["field"])
    elif "field" in d and field_from_json(d["field"]) != field:
        raise FormatError(f"{what}: field {field_from_json(d['field'])} does not match {field}")
    dims = _dims(quiver, d.get("dims", {}), what)
    mats_in = d.get("matrices", {})
    names = {a.name for a in quiver.arrows}
    extra = set(mats_in) - names
    if extra:
        raise FormatError(f"{what}: matrices for unknown arrows {sorted(extra)}")
    mats = {}
    for a in quiver.arrows:
        nr, nc = dims[quiver.index(a.tgt)], dims[quiver.index(a.src)]
        if a.name in mats_in:
            mats[a.name] = matrix_from_json(field, mats_in[a.name], nr, nc, f"{what}: arrow {a.name}")
    return Representation.build(quiver, field, dims, mats, d.get("name"))


def morphism_to_json(f: RepMorphism) -> Dict[str, Any]:
    return {v: matrix_to_json(c) for v, c in zip(f.source.quiver.vertices, f.components)}


def morphism_from_json(d: Mapping, source: Representation, target: Representation, what: str) -> RepMorphism:
    q, F = source.quiver, source.field
    if not isinstance(d, Mapping):
        raise FormatError(f"{what}: morphism must be an object keyed by vertex")
    comps = []
    for v in q.vertices:
        nr, nc = target.dim(v), source.dim(v)
        rows = d.get(v)
        if rows is None:
            if nr and nc:
                raise FormatError(f"{what}: missing component at vertex {v}")
            comps.append(ExactMatrix.zeros(F, nr, nc))
        else:
            comps.append(matrix_from_json(F, rows, nr, nc, f"{what}: vertex {v}"))
    return RepMorphism(source, target, tuple(comps), check=False)


# families ------------------------------------------------------------------


def family_to_json(fam) -> Dict[str, Any]:
    R = fam.ring
    return {
        "field": fam.base.to_json(),
        "dims": {v: d for v, d in zip(fam.quiver.vertices, fam.dims)},
        "matrices": {a.name: [[R.format(x) for x in r] for r in m.rows]
                     for a, m in zip(fam.quiver.arrows, fam.maps)},
    }


def family_from_json(d: Mapping, quiver: Quiver, field: Optional[FieldSpec] = None):
    from .dvr import FamilyRep

    base = field_from_json(d["field"]) if "field" in d else field
    if base is None:
        raise FormatError("family: missing field")
    R = FieldSpec.polynomials(base)
    dims = _dims(quiver, d.get("dims", {}), "family")
    mats = {}
    for a in quiver.arrows:
        nr, nc = dims[quiver.index(a.tgt)], dims[quiver.index(a.src)]
        if a.name in d.get("matrices", {}):
            mats[a.name] = matrix_from_json(R, d["matrices"][a.name], nr, nc, f"family: arrow {a.name}")
    r = Representation.build(quiver, R, dims, mats)
    return FamilyRep(quiver, base, r.dims, r.maps, d.get("name"))


# complexes -----------------------------------------------------------------


def complex_to_json(c) -> Dict[str, Any]:
    return {
        "field": c.field.to_json(),
        "lo": c.lo,
        "hi": c.hi,
        "terms": {str(i): rep_to_json(c.term(i)) for i in c.degrees()},
        "differentials": {str(i): morphism_to_json(c.diff(i)) for i in range(c.lo, c.hi)},
    }


def complex_from_json(d: Mapping, quiver: Quiver, field: Optional[FieldSpec] = None):
    from .derived import Complex

    if field is None:
        field = field_from_json(d["field"])
    try:
        lo, hi = int(d["lo"]), int(d["hi"])
    except (KeyError, ValueError, TypeError):
        raise FormatError("complex: lo and hi must be integers") from None
    if hi < lo:
        raise FormatError("complex: hi < lo")
    terms_in = d.get("terms", {})
    terms = []
    for i in range(lo, hi + 1):
        t = terms_in.get(str(i))
        terms.append(rep_from_json(t, quiver, field, f"complex term {i}") if t is not None
                     else Representation.zero(quiver, field))
    diffs = []
    dj = d.get("differentials", {})
    for i in range(lo, hi):
        src, tgt = terms[i - lo], terms[i - lo + 1]
        if str(i) in dj:
            f = morphism_from_json(dj[str(i)], src, tgt, f"differential {i}")
            bad = f.intertwining_failure()
            if bad is not None:
                raise FormatError(f"differential {i} does not commute with arrow {bad}")
            diffs.append(RepMorphism(src, tgt, f.components))
        else:
            diffs.append(RepMorphism.zero(src, tgt))
    return Complex(quiver, field, lo, tuple(terms), tuple(diffs), d.get("name"))


def as_complex(d: Mapping, quiver: Quiver, field: Optional[FieldSpec] = None):
    """Accept either complex.json or a plain rep.json (placed in degree 0)."""
    from .derived import Complex

    if "terms" in d:
        return complex_from_json(d, quiver, field)
    return Complex.stalk(rep_from_json(d, quiver, field))


def chain_map_to_json(f) -> Dict[str, Any]:
    return {str(i): morphism_to_json(g) for i, g in sorted(f.components.items())
            if g.source.total_dim and g.target.total_dim}


def chain_map_from_json(d: Mapping, source, target, what: str):
    from .derived import ChainMap

    comps = {}
    for k, v in d.items():
        i = int(k)
        comps[i] = morphism_from_json(v, source.term(i), target.term(i), f"{what} degree {i}")
    return ChainMap(source, target, comps, check=False)


# certificates --------------------------------------------------------------


def rz_witness_to_json(w) -> Dict[str, Any]:
    return {
        "kind": "rz",
        "quiver": w.m.quiver.to_json(),
        "field": w.m.field.to_json(),
        "m": rep_to_json(w.m),
        "n": rep_to_json(w.n),
        "z": rep_to_json(w.z),
        "v": morphism_to_json(w.v),
        "u": morphism_to_json(w.u),
        "projection": morphism_to_json(w.projection),
        "coker_iso": morphism_to_json(w.cokernel_iso()),
    }


def rz_witness_from_json(d: Mapping):
    from .degeneration import RZWitness
    from .quiver import direct_sum

    q = quiver_from_json(d["quiver"])
    F = field_from_json(d["field"])
    m, n, z = (rep_from_json(d[k], q, F, f"witness {k}") for k in ("m", "n", "z"))
    v = morphism_from_json(d["v"], z, z, "witness v")
    u = morphism_from_json(d["u"], z, m, "witness u")
    mid = direct_sum([z, m], q, F).rep
    p = morphism_from_json(d["projection"], mid, n, "witness projection")
    return RZWitness(m, n, z, v, u, p)


def triangle_witness_to_json(w) -> Dict[str, Any]:
    return {
        "kind": "triangle",
        "quiver": w.m.quiver.to_json(),
        "field": w.m.field.to_json(),
        "m": complex_to_json(w.m),
        "n": complex_to_json(w.n),
        "z": complex_to_json(w.z),
        "v": chain_map_to_json(w.v),
        "u": chain_map_to_json(w.u),
        "cone_iso": {str(i): {"source": rep_to_json(f.source), "map": morphism_to_json(f)}
                     for i, f in sorted(w.cone_iso.items())},
    }


def triangle_witness_from_json(d: Mapping):
    from .derived import TriangleWitness, homology

    q = quiver_from_json(d["quiver"])
    F = field_from_json(d["field"])
    m, n, z = (complex_from_json(d[k], q, F) for k in ("m", "n", "z"))
    v = chain_map_from_json(d["v"], z, z, "witness v")
    u = chain_map_from_json(d["u"], z, m, "witness u")
    w = TriangleWitness(m, n, z, v, u, {})
    cone = w.cone()
    isos = {}
    for k, entry in d.get("cone_iso", {}).items():
        i = int(k)
        src = homology(cone, i)
        tgt = homology(n, i)
        isos[i] = morphism_from_json(entry["map"], src, tgt, f"cone_iso degree {i}")
    w.cone_iso = isos
    return w


def witness_to_json(w) -> Dict[str, Any]:
    from .derived import TriangleWitness

    if isinstance(w, TriangleWitness):
        return triangle_witness_to_json(w)
    return rz_witness_to_json(w)


def obstruction_to_json(ob: Optional[Mapping]) -> Optional[Dict[str, Any]]:
    if ob is None:
        return None
    out = {}
    for k, v in ob.items():
        out[k] = rep_to_json(v) if isinstance(v, Representation) else v
    return out


def verdict_to_json(v) -> Dict[str, Any]:
    return {
        "status": v.status,
        "witness": witness_to_json(v.witness) if v.witness is not None else None,
        "obstruction": obstruction_to_json(v.obstruction),
        "bounds": dict(v.bounds),
    }


def dvr_report_to_json(r) -> Dict[str, Any]:
    return {
        "generic_ok": r.generic_ok,
        "special_ok": r.special_ok,
        "passed": r.passed,
        "certificates": {
            "generic_iso": morphism_to_json(r.generic_iso) if r.generic_iso is not None else None,
            "special_iso": morphism_to_json(r.special_iso) if r.special_iso is not None else None,
        },
        "notes": {k: (v if not isinstance(v, dict) else dict(v)) for k, v in r.notes.items()},
    }


def poset_to_json(p) -> Dict[str, Any]:
    return {
        "nodes": [{"label": lab, "dims": list(x.dims), "rep": rep_to_json(x)} for lab, x in zip(p.labels, p.nodes)],
        "relation": [[p.status(i, j) for j in range(len(p.nodes))] for i in range(len(p.nodes))],
        "hasse": [list(e) for e in p.hasse],
        "unknown": [list(e) for e in p.unknown],
    }
