"""Smith normal form over k[t]."""
from __future__ import annotations

from typing import List, NamedTuple

from .fields import Poly
from .matrix import ExactMatrix


class SmithForm(NamedTuple):
    diagonal: List[Poly]      # length min(rows, cols); zeros after the rank
    u: ExactMatrix
    v: ExactMatrix
    u_inv: ExactMatrix
    v_inv: ExactMatrix


def _ident(ring, n):
    z, o = ring.zero, ring.one
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def smith_normal_form(m: ExactMatrix) -> SmithForm:
    """Return ``u, v`` unimodular with ``u @ m @ v`` diagonal.

    Diagonal entries are monic and each divides the next. The inverses of
    ``u`` and ``v`` are tracked alongside so callers never have to invert
    a polynomial matrix themselves.
    """
    ring = m.field
    if ring.kind != "poly":
        raise ValueError(f"Smith normal form expects entries in k[t], got {ring}")
    nr, nc = m.shape
    a = [list(r) for r in m.rows]
    u, ui = _ident(ring, nr), _ident(ring, nr)
    v, vi = _ident(ring, nc), _ident(ring, nc)

    # elementary operations, each mirrored on the transforms and inverses
    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for row in ui:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]
        vi[i], vi[j] = vi[j], vi[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]
        for row in ui:
            row[src] = row[src] - q * row[dst]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for row in a:
            row[dst] = row[dst] + q * row[src]
        for row in v:
            row[dst] = row[dst] + q * row[src]
        vi[src] = [x - q * y for x, y in zip(vi[src], vi[dst])]

    def scale_row(i, c):  # c a unit of the ground field
        a[i] = [x * c for x in a[i]]
        u[i] = [x * c for x in u[i]]
        inv = ring.base.one / c
        for row in ui:
            row[i] = row[i] * inv

    for k in range(min(nr, nc)):
        while True:
            best = None
            for i in range(k, nr):
                for j in range(k, nc):
                    x = a[i][j]
                    if x and (best is None or x.degree < best[0]):
                        best = (x.degree, i, j)
            if best is None:
                break
            _, i, j = best
            if i != k:
                swap_rows(i, k)
            if j != k:
                swap_cols(j, k)
            piv = a[k][k]
            clean = True
            for i in range(k + 1, nr):
                if a[i][k]:
                    q, r = divmod(a[i][k], piv)
                    add_row(i, k, -q)
                    if r:
                        clean = False
            for j in range(k + 1, nc):
                if a[k][j]:
                    q, r = divmod(a[k][j], piv)
                    add_col(j, k, -q)
                    if r:
                        clean = False
            if not clean:
                continue
            bad = next(((i, j) for i in range(k + 1, nr) for j in range(k + 1, nc)
                        if a[i][j] % piv), None)
            if bad is None:
                break
            add_row(k, bad[0], ring.one)
        if best is None:
            break
        lead = a[k][k].lead
        if lead != 1:
            scale_row(k, ring.base.one / lead)

    diag = [a[i][i] if i < nr and i < nc else ring.zero for i in range(min(nr, nc))]
    mk = lambda rows, n: ExactMatrix(ring, rows, n)
    form = SmithForm(diag, mk(u, nr), mk(v, nc), mk(ui, nr), mk(vi, nc))
    return form


def invariant_factors(m: ExactMatrix) -> List[Poly]:
    return [d for d in smith_normal_form(m).diagonal if d]


def check_smith(m: ExactMatrix, form: SmithForm) -> bool:
    """Independent re-check of every Smith-form postcondition."""
    ring = m.field
    nr, nc = m.shape
    prod = form.u @ m @ form.v
    for i in range(nr):
        for j in range(nc):
            want = form.diagonal[i] if i == j else ring.zero
            if prod[i, j] != want:
                return False
    nonzero = [d for d in form.diagonal if d]
    if any(not d.is_monic() for d in nonzero):
        return False
    if form.diagonal[len(nonzero):] and any(form.diagonal[len(nonzero):]):
        return False
    for a, b in zip(nonzero, nonzero[1:]):
        if b % a:
            return False
    ident = lambda n: ExactMatrix.identity(ring, n)
    return (form.u @ form.u_inv == ident(nr) and form.u_inv @ form.u == ident(nr)
            and form.v @ form.v_inv == ident(nc) and form.v_inv @ form.v == ident(nc))
