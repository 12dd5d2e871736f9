"""Command-line front end.

Exit codes: 0 yes/pass, 1 no/fail, 2 unknown, 3 input error. The primary
result goes to standard output as JSON; diagnostics go to standard error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from importlib import resources
from pathlib import Path
from typing import List, Optional

from . import serialize as ser
from .certify import CertificateError
from .linalg import FieldSpec

log = logging.getLogger("quiverdegen")

EXIT_YES, EXIT_NO, EXIT_UNKNOWN, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("quiverdegen").joinpath("fixtures", name)))


def _load_json(path: str, what: str):
    p = Path(path)
    if not p.exists():
        alt = fixture_path(p.name)
        if alt.exists():
            p = alt
        elif alt.with_suffix(".json").exists():
            p = alt.with_suffix(".json")
        else:
            raise InputError(f"{what}: file not found: {path}")
    try:
        return json.loads(p.read_text())
    except json.JSONDecodeError as e:
        raise InputError(f"{what}: malformed JSON ({e})") from None


class Context:
    def __init__(self, args):
        self.args = args
        self.field: Optional[FieldSpec] = None
        if getattr(args, "field", None):
            try:
                self.field = FieldSpec.from_flag(args.field)
            except ValueError as e:
                raise InputError(str(e)) from None
        self.quiver = None
        if getattr(args, "quiver", None):
            self.quiver = ser.quiver_from_json(_load_json(args.quiver, "quiver"))

    def _quiver_for(self, d, what):
        if self.quiver is not None:
            return self.quiver
        if "quiver" in d:
            self.quiver = ser.quiver_from_json(d["quiver"])
            return self.quiver
        raise InputError(f"{what}: no quiver (pass --quiver or embed one in the file)")

    def _field_for(self, d):
        if self.field is None and "field" in d:
            self.field = ser.field_from_json(d["field"])
        return self.field

    def rep(self, flag: str):
        path = getattr(self.args, flag, None)
        if not path:
            raise InputError(f"--{flag.replace('_', '-')} is required")
        d = _load_json(path, flag)
        q = self._quiver_for(d, flag)
        F = self._field_for(d)
        if F is None:
            raise InputError(f"{flag}: no field (pass --field or include one in the file)")
        return ser.rep_from_json(d, q, F, flag)

    def complex(self, flag: str, fallback: str):
        path = getattr(self.args, flag, None) or getattr(self.args, fallback, None)
        if not path:
            raise InputError(f"--{flag.replace('_', '-')} (or --{fallback}) is required")
        d = _load_json(path, flag)
        q = self._quiver_for(d, flag)
        F = self._field_for(d)
        if F is None:
            raise InputError(f"{flag}: no field (pass --field or include one in the file)")
        return ser.as_complex(d, q, F)

    def require_quiver(self):
        if self.quiver is None:
            raise InputError("--quiver is required")
        return self.quiver

    def require_field(self):
        if self.field is None:
            raise InputError("--field is required")
        return self.field


def _parse_dims(s: str, q) -> tuple:
    try:
        vals = json.loads(s) if s.strip().startswith(("{", "[")) else [int(x) for x in s.split(",")]
    except (ValueError, json.JSONDecodeError):
        raise InputError(f"bad dimension vector {s!r}") from None
    if isinstance(vals, dict):
        vals = [int(vals.get(v, 0)) for v in q.vertices]
    if len(vals) != len(q.vertices):
        raise InputError(f"dimension vector {s!r} has {len(vals)} entries, quiver has {len(q.vertices)} vertices")
    return tuple(vals)


def _emit(args, payload) -> None:
    text = ser.dumps(payload)
    sys.stdout.write(text)
    if getattr(args, "json", None):
        Path(args.json).write_text(text)


# commands -------------------------------------------------------------------


def cmd_decide(ctx: Context) -> int:
    from .degeneration import decide_deg

    m, n = ctx.rep("m"), ctx.rep("n")
    v = decide_deg(m, n, ctx.args.bound, ctx.args.seed)
    if v.obstruction and v.obstruction.get("condition") == "dimension_vector":
        log.error("dimension vector mismatch: %s vs %s", list(m.dims), list(n.dims))
    _emit(ctx.args, ser.verdict_to_json(v))
    return v.exit_code


def cmd_zwara_search(ctx: Context) -> int:
    from .degeneration import rz_witness_search

    m, n = ctx.rep("m"), ctx.rep("n")
    if m.dims != n.dims:
        log.error("dimension vector mismatch: %s vs %s", list(m.dims), list(n.dims))
        _emit(ctx.args, {"status": "no", "witness": None, "obstruction": {"condition": "dimension_vector"}})
        return EXIT_NO
    w = rz_witness_search(m, n, ctx.args.bound, ctx.args.seed)
    _emit(ctx.args, {"status": "yes" if w else "unknown",
                     "witness": ser.rz_witness_to_json(w) if w else None,
                     "bounds": {"dim_bound": ctx.args.bound if ctx.args.bound is not None else 2 * m.total_dim,
                                "seed": ctx.args.seed}})
    return EXIT_YES if w else EXIT_UNKNOWN


def cmd_dvr_check(ctx: Context) -> int:
    from .dvr import check_dvr_degeneration

    m, n = ctx.rep("m"), ctx.rep("n")
    if not ctx.args.family:
        raise InputError("--family is required")
    fam = ser.family_from_json(_load_json(ctx.args.family, "family"), ctx.require_quiver(), ctx.field)
    r = check_dvr_degeneration(m, n, fam, ctx.args.seed)
    _emit(ctx.args, ser.dvr_report_to_json(r))
    return EXIT_YES if r.passed else EXIT_NO


def cmd_rz_to_family(ctx: Context) -> int:
    from .degeneration import rz_witness_search
    from .dvr import rz_to_family

    if ctx.args.witness:
        d = _unwrap_witness(_load_json(ctx.args.witness, "witness"))
        if d.get("kind") != "rz":
            raise InputError("rz-to-family needs an RZ witness")
        w = ser.rz_witness_from_json(d)
    else:
        m, n = ctx.rep("m"), ctx.rep("n")
        w = rz_witness_search(m, n, ctx.args.bound, ctx.args.seed)
        if w is None:
            _emit(ctx.args, {"status": "unknown", "family": None})
            return EXIT_UNKNOWN
    fam = rz_to_family(w)
    _emit(ctx.args, {"status": "yes", "family": ser.family_to_json(fam)})
    return EXIT_YES


def cmd_delta_check(ctx: Context) -> int:
    from .derived import delta_check

    m = ctx.complex("complex_m", "m")
    n = ctx.complex("complex_n", "n")
    r = delta_check(m, n, ctx.args.bound, ctx.args.seed, ctx.args.shift_range)
    _emit(ctx.args, {"status": r.status,
                     "witness": ser.witness_to_json(r.witness) if r.witness else None,
                     "obstruction": ser.obstruction_to_json(r.obstruction),
                     "bounds": r.bounds})
    return r.exit_code


def cmd_decompose(ctx: Context) -> int:
    from .decompose import decompose

    m = ctx.rep("m")
    d = decompose(m, ctx.args.seed)
    _emit(ctx.args, {
        "summands": [{"rep": ser.rep_to_json(r), "multiplicity": k} for r, k in d.summands],
        "change_of_basis": {v: ser.matrix_to_json(c) for v, c in zip(m.quiver.vertices, d.change_of_basis)},
        "certificates": [b.certificate.kind for b in d.blocks],
        "verified": d.verify(),
    })
    return EXIT_YES


def cmd_orbit_dim(ctx: Context) -> int:
    from .degeneration import orbit_dimension
    from .quiver import hom_dim

    m = ctx.rep("m")
    _emit(ctx.args, {"dims": list(m.dims), "dim_end": hom_dim(m, m), "orbit_dimension": orbit_dimension(m)})
    return EXIT_YES


def cmd_hom_table(ctx: Context) -> int:
    from .degeneration import default_test_set
    from .quiver import hom_dim

    if not ctx.args.m:
        # square table dim Hom(X, Y) over all indecomposables up to --max-dim
        from .enumeration import enumerate_indecomposables

        q, F = ctx.require_quiver(), ctx.require_field()
        if not ctx.args.max_dim:
            raise InputError("hom-table needs --m, or --max-dim for a table of indecomposables")
        xs = enumerate_indecomposables(q, _parse_dims(ctx.args.max_dim, q), F)
        _emit(ctx.args, {"objects": [x.name for x in xs],
                         "hom": [[hom_dim(x, y) for y in xs] for x in xs]})
        return EXIT_YES
    m = ctx.rep("m")
    n = ctx.rep("n") if ctx.args.n else m
    tests = default_test_set(m, n)
    reps = {"m": m, "n": n} if ctx.args.n else {"m": m}
    _emit(ctx.args, {
        "test_set": [x.name for x in tests],
        "hom_from_X": {k: [hom_dim(x, r) for x in tests] for k, r in reps.items()},
        "hom_to_X": {k: [hom_dim(r, x) for x in tests] for k, r in reps.items()},
    })
    return EXIT_YES


def cmd_enumerate(ctx: Context) -> int:
    from .enumeration import enumerate_indecomposables, enumerate_modules
    from .roots import count_positive_roots

    q, F = ctx.require_quiver(), ctx.require_field()
    if ctx.args.dims:
        dims = _parse_dims(ctx.args.dims, q)
        mods = enumerate_modules(q, dims, F)
        _emit(ctx.args, {"dims": list(dims), "count": len(mods),
                         "modules": [{"label": x.name, "rep": ser.rep_to_json(x)} for x in mods]})
        return EXIT_YES
    if not ctx.args.max_dim:
        raise InputError("enumerate needs --max-dim (indecomposables) or --dims (modules)")
    bound = _parse_dims(ctx.args.max_dim, q)
    xs = enumerate_indecomposables(q, bound, F)
    payload = {"max_dim": list(bound), "count": len(xs),
               "indecomposables": [{"label": x.name, "dims": list(x.dims), "rep": ser.rep_to_json(x)} for x in xs]}
    try:
        payload["positive_roots"] = count_positive_roots(len(q.vertices), q.underlying_edges(), bound)
    except ValueError:
        payload["positive_roots"] = None
    _emit(ctx.args, payload)
    return EXIT_YES


def cmd_hasse(ctx: Context) -> int:
    from .poset import hasse_diagram, verify_partial_order

    q, F = ctx.require_quiver(), ctx.require_field()
    if not ctx.args.dims:
        raise InputError("--dims is required")
    p = hasse_diagram(q, _parse_dims(ctx.args.dims, q), F, ctx.args.bound, ctx.args.seed)
    rep = verify_partial_order(p)
    payload = ser.poset_to_json(p)
    payload["partial_order"] = {"reflexive": rep.reflexive, "antisymmetric": rep.antisymmetric,
                                "transitive": rep.transitive, "witnesses_ok": rep.witnesses_ok,
                                "failures": rep.failures, "gaps": [list(g) for g in rep.gaps]}
    if ctx.args.dot:
        Path(ctx.args.dot).write_text(p.to_dot())
    _emit(ctx.args, payload)
    if not rep.passed:
        return EXIT_NO
    return EXIT_UNKNOWN if p.unknown else EXIT_YES


def cmd_verify_witness(ctx: Context) -> int:
    path = ctx.args.witness or ctx.args.witness_file
    if not path:
        raise InputError("--witness is required")
    d = _unwrap_witness(_load_json(path, "witness"))
    kind = d.get("kind")
    try:
        if kind == "rz":
            _verify_rz_json(d)
        elif kind == "triangle":
            from .derived import verify_triangle_witness
            verify_triangle_witness(ser.triangle_witness_from_json(d))
        else:
            raise InputError(f"unknown witness kind {kind!r}")
    except CertificateError as e:
        _emit(ctx.args, {"kind": kind, "valid": False, "error": str(e)})
        return EXIT_NO
    _emit(ctx.args, {"kind": kind, "valid": True, "error": None})
    return EXIT_YES


def _unwrap_witness(d):
    """Accept a bare witness or a verdict/search result that wraps one."""
    if "kind" not in d and "witness" in d:
        d = d["witness"]
        if d is None:
            raise InputError("file carries no witness")
    return d


def _verify_rz_json(d) -> None:
    # rebuild plain matrices only; no search code is involved
    from .certify import verify_rz

    w = ser.rz_witness_from_json(d)
    q, F = w.m.quiver, w.m.field
    verify_rz(q, F, w.m.dims, w.m.maps, w.n.dims, w.n.maps, w.z.dims, w.z.maps,
              w.v.components, w.u.components, w.projection.components)


COMMANDS = {
    "decide": (cmd_decide, "three-valued decision of m <=_deg n"),
    "zwara-search": (cmd_zwara_search, "bounded search for a Riedtmann-Zwara witness"),
    "dvr-check": (cmd_dvr_check, "check a one-parameter family against m and n"),
    "rz-to-family": (cmd_rz_to_family, "turn an RZ witness into a family over k[t]"),
    "delta-check": (cmd_delta_check, "triangle degeneration of complexes"),
    "decompose": (cmd_decompose, "Krull-Schmidt decomposition"),
    "orbit-dim": (cmd_orbit_dim, "orbit dimension sum(d_v^2) - dim End"),
    "hom-table": (cmd_hom_table, "Hom dimensions against enumerated indecomposables"),
    "enumerate": (cmd_enumerate, "enumerate indecomposables or modules"),
    "hasse": (cmd_hasse, "degeneration Hasse diagram"),
    "verify-witness": (cmd_verify_witness, "re-check a witness file from scratch"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quiverdegen", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--quiver")
        p.add_argument("--m")
        p.add_argument("--n")
        p.add_argument("--family")
        p.add_argument("--complex-m", dest="complex_m")
        p.add_argument("--complex-n", dest="complex_n")
        p.add_argument("--witness")
        p.add_argument("--field", help="q or p=<prime>")
        p.add_argument("--bound", type=int)
        p.add_argument("--shift-range", dest="shift_range", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--dims")
        p.add_argument("--max-dim", dest="max_dim")
        p.add_argument("--dot")
        p.add_argument("--json")
        if name == "verify-witness":
            p.add_argument("witness_file", nargs="?")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else 0
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    if args.seed < 0 or args.seed >= 2 ** 64:
        log.error("seed must be a 64-bit unsigned integer")
        return EXIT_INPUT
    handler = COMMANDS[args.command][0]
    try:
        return handler(Context(args))
    except (InputError, ValueError, KeyError, TypeError) as e:
        # QuiverError, FormatError and EnumerationBoundError are ValueErrors
        log.error("%s", e)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
