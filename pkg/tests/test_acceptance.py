"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]``/``[FAIL]`` line. Run directly with
``python3 tests/test_acceptance.py`` for just those lines.
"""
import contextlib
import functools
import json
import random
import time

import pytest

from quiverdegen.cli import main as cli_main
from quiverdegen.decompose import decompose, is_isomorphic
from quiverdegen.degeneration import NO, UNKNOWN, YES, decide_deg, rz_witness_search, verify_rz_witness
from quiverdegen.derived import (
    Complex,
    delta_check,
    format_descent_report,
    hom_dim_derived,
    restrict_witness,
    ses_to_triangle,
    shift_witness,
    subcategory_descent_report,
    vanishing_shift,
)
from quiverdegen.dvr import FamilyRep, check_dvr_degeneration, rz_to_family
from quiverdegen.enumeration import enumerate_indecomposables
from quiverdegen.linalg import FieldSpec, kernel_basis
from quiverdegen.poset import hasse_diagram, verify_partial_order
from quiverdegen.quiver import (
    Quiver,
    Representation,
    direct_sum,
    hom_basis,
    hom_dim,
    kernel_cokernel,
    random_combination,
    random_conjugate,
    random_representation,
)
from quiverdegen.roots import count_positive_roots
from quiverdegen.serialize import rz_witness_to_json

A2 = Quiver.linear_a(2)
A3 = Quiver.linear_a(3)
F2, F3, F5 = (FieldSpec.prime(p) for p in (2, 3, 5))


class _Report:
    def __init__(self, capsys):
        self.capsys = capsys

    def emit(self, text: str):
        if self.capsys is None:
            print(text)
        else:
            with self.capsys.disabled():
                print("\n" + text)

    @contextlib.contextmanager
    def criterion(self, number: int, title: str):
        ok = False
        try:
            yield
            ok = True
        finally:
            self.emit(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")


@pytest.fixture
def report(capsys):
    return _Report(capsys)


def a2_modules(F):
    p = Representation.projective(A2, F, "1")
    s1, s2 = Representation.simple(A2, F, "1"), Representation.simple(A2, F, "2")
    return p, s1, s2, direct_sum([s1, s2], A2, F).rep


@functools.lru_cache(maxsize=None)
def rz_suite():
    """Every non-trivial Yes witness from small A2/A3 Hasse computations."""
    out = []
    for q, dv, F in [(A2, (1, 1), F5), (A2, (2, 2), F2), (A2, (2, 2), F3), (A3, (1, 1, 1), F2),
                     (A3, (1, 2, 1), F2), (A3, (1, 1, 1), F3)]:
        poset = hasse_diagram(q, dv, F)
        for i, row in enumerate(poset.verdicts):
            for j, v in enumerate(row):
                if i != j and v.status == YES:
                    out.append((q, v.witness))
    return out


@functools.lru_cache(maxsize=None)
def triangle_suite():
    """Triangle witnesses: images of the RZ suite plus a genuine complex example."""
    out = [(q, ses_to_triangle(w)) for q, w in rz_suite()]
    p, s1, s2, _ = a2_modules(F5)
    f = hom_basis(Representation.simple(A2, F5, "2"), p)[0]
    cone_like = Complex.from_map(f, lo=-1)
    r = delta_check(cone_like, Complex.stalk(s1), seed=0)
    assert r.status == YES
    out.append((A2, r.witness))
    out.append((A2, shift_witness(r.witness, 2)))
    return out


def test_criterion_1_flagship(report, tmp_path):
    with report.criterion(1, "A2 flagship: P deg S1+S2 is Yes with a valid witness, reverse is No via X=S1"):
        t0 = time.perf_counter()
        p, s1, s2, s12 = a2_modules(F5)
        yes = decide_deg(p, s12)
        no = decide_deg(s12, p)
        elapsed = time.perf_counter() - t0
        assert yes.status == YES
        verify_rz_witness(yes.witness)
        path = tmp_path / "w.json"
        path.write_text(json.dumps(rz_witness_to_json(yes.witness)))
        assert cli_main(["verify-witness", "--witness", str(path)]) == 0
        assert no.status == NO
        ob = no.obstruction
        assert ob["condition"] == "hom_order" and ob["direction"] == "covariant"
        assert is_isomorphic(ob["X_rep"], s1) is not None
        assert (ob["hom_m"], ob["hom_n"]) == (1, 0)
        assert elapsed < 1.0, elapsed


def test_criterion_2_rz_to_dvr(report):
    with report.criterion(2, "every RZ witness in the suite becomes a passing dvr family"):
        suite = rz_suite()
        assert len(suite) >= 10, len(suite)
        report.emit(f"{len(suite)} RZ witnesses from A2/A3 Hasse computations")
        for _, w in suite:
            fam = rz_to_family(w)
            assert check_dvr_degeneration(w.m, w.n, fam).passed
        p, _, _, s12 = a2_modules(F5)
        w = decide_deg(p, s12).witness
        fam = rz_to_family(w)
        arrow_t = FamilyRep.build(A2, F5, (1, 1), {"a1": [["t"]]})
        for c in range(5):
            assert is_isomorphic(fam.evaluate(F5.coerce(c)), arrow_t.evaluate(F5.coerce(c))) is not None
        assert is_isomorphic(fam.generic_fiber(), arrow_t.generic_fiber()) is not None


def test_criterion_3_dvr_to_rz(report):
    with report.criterion(3, "arrow-[t] and constant families give RZ witnesses within bound = total dim"):
        p, _, _, s12 = a2_modules(F5)
        arrow_t = FamilyRep.build(A2, F5, (1, 1), {"a1": [["t"]]})
        families = [(p, s12, arrow_t)] + [(x, x, FamilyRep.constant(x)) for x in (p, s12)]
        for m, n, fam in families:
            assert check_dvr_degeneration(m, n, fam).passed
            w = rz_witness_search(m, n, dim_bound=m.total_dim)
            assert w is not None
            verify_rz_witness(w)
            v = decide_deg(m, n, dim_bound=m.total_dim)
            assert v.status == YES and v.status != UNKNOWN


def test_criterion_4_gabriel(report):
    with report.criterion(4, "indecomposable counts 3/6/12 over F_2 match the positive-root oracle"):
        d4 = Quiver.d4()
        for q, bound, expected in [(A2, (3, 3), 3), (A3, (3, 3, 3), 6), (d4, (2, 2, 2, 2), 12)]:
            found = enumerate_indecomposables(q, bound, F2)
            edges = q.underlying_edges()
            oracle = count_positive_roots(len(q.vertices), edges, bound)
            assert len(found) == expected == oracle, (len(found), oracle)
            assert len({x.dims for x in found}) == expected


def test_criterion_5_hasse(report):
    with report.criterion(5, "A2 Hasse diagrams for (1,1) and (2,2), field independent, partial order verified"):
        expected = {(1, 1): [("P1", "S1+S2")], (2, 2): [("2P1", "P1+S1+S2"), ("P1+S1+S2", "2S1+2S2")]}
        for F in (F2, F3, F5):
            for dv, edges in expected.items():
                poset = hasse_diagram(A2, dv, F)
                assert sorted(poset.hasse_labels()) == sorted(edges), poset.hasse_labels()
                assert poset.unknown == []
                rep = verify_partial_order(poset)
                assert rep.passed, rep.failures


def test_criterion_6_hom_length(report):
    with report.criterion(6, "derived hom-length monotone on all triangle witnesses, vanishing shifts exhibited"):
        violations = []
        bounds = {A2: (1, 1), A3: (1, 1, 1)}
        by_field = {}
        for q, w in triangle_suite():
            F = w.m.field
            if (q, F) not in by_field:
                by_field[q, F] = [Complex.stalk(x) for x in enumerate_indecomposables(q, bounds[q], F)]
            for xc in by_field[q, F]:
                for k in range(-3, 4):
                    if hom_dim_derived(xc, w.m, k) > hom_dim_derived(xc, w.n, k):
                        violations.append(("cov", xc.name, k))
                    if hom_dim_derived(w.m, xc, k) > hom_dim_derived(w.n, xc, k):
                        violations.append(("contra", xc.name, k))
        assert not violations, violations[:5]
        for (q, F), stalks in by_field.items():
            objs = stalks + [w.m for qq, w in triangle_suite() if qq == q and w.m.field == F]
            for x in objs:
                for y in objs:
                    s = vanishing_shift(x, y)
                    assert hom_dim_derived(x, y, s) == 0


def test_criterion_7_functors(report):
    with report.criterion(7, "shift and restriction A2 -> A1 carry every witness to a valid witness"):
        failures = []
        for q, w in triangle_suite():
            for k in (-2, -1, 1, 3):
                if not shift_witness(w, k).verify():
                    failures.append(("shift", k))
            if q == A2:
                for v in ("1", "2"):
                    if not restrict_witness(w, A2.full_subquiver([v])).verify():
                        failures.append(("restrict", v))
        assert not failures, failures
        report.emit(f"{len(triangle_suite())} triangle witnesses re-verified under shift and restriction")


def test_criterion_8_descent_report(report):
    with report.criterion(8, "A2-in-A3 descent report produced, every found entry re-verifies"):
        entries = subcategory_descent_report(A3, ["1", "2"], [(1, 1, 0), (2, 1, 0), (2, 2, 0)], F2)
        assert entries
        text = format_descent_report(entries)
        assert len(text.splitlines()) == len(entries)
        report.emit(text)
        for e in entries:
            if e.ambient_found:
                assert e.ambient_witness.verify()
            if e.sub_found:
                assert e.sub_witness.verify()


def _fuzz_one(i: int):
    rng = random.Random(i)
    F = F2 if i % 2 == 0 else F3
    dims = tuple(rng.randint(0, 3) for _ in A3.vertices)
    m = random_representation(A3, F, dims, rng)
    d = decompose(m, seed=i)
    assert d.verify(), i
    rebuilt = direct_sum([r for r, k in d.summands for _ in range(k)], A3, F).rep
    conj, g = random_conjugate(rebuilt, rng)
    assert g.is_isomorphism() and g.intertwining_failure() is None, i
    d2 = decompose(conj, seed=i + 1)
    assert d2.verify() and d2.multiset() == d.multiset(), i
    for a in m.maps:
        assert a.rank() + len(kernel_basis(a)) == a.ncols, i
    n = random_representation(A3, F, tuple(rng.randint(0, 3) for _ in A3.vertices), rng)
    basis = hom_basis(m, n)
    if basis:
        f = random_combination(basis, rng)
        kc = kernel_cokernel(f)
        for v, c in enumerate(f.components):
            assert kc.kernel.dims[v] + c.rank() == m.dims[v], i
            assert kc.cokernel.dims[v] + c.rank() == n.dims[v], i
    s = direct_sum([m, n], A3, F).rep
    assert hom_dim(s, m) == hom_dim(m, m) + hom_dim(n, m), i
    assert hom_dim(m, s) == hom_dim(m, m) + hom_dim(m, n), i


def test_criterion_9_fuzz(report):
    with report.criterion(9, "1000 seeded random A3 representations over F_2/F_3 round-trip soundly"):
        for i in range(1000):
            _fuzz_one(i)


if __name__ == "__main__":
    import inspect
    import sys
    import tempfile
    from pathlib import Path

    rep = _Report(None)
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            args = {"report": rep}
            if "tmp_path" in inspect.signature(fn).parameters:
                args["tmp_path"] = Path(tempfile.mkdtemp())
            try:
                fn(**args)
            except Exception:
                failed += 1
    sys.exit(1 if failed else 0)
