"""Dense exact matrices and rank-revealing elimination."""
from __future__ import annotations

from typing import Iterable, List, Optional, Sequence, Tuple

from .fields import FieldSpec, NotAFieldError, Poly

Vector = Tuple


class ExactMatrix:
    """Immutable row-major matrix over a single :class:`FieldSpec`.

    Entries are coerced on construction. ``ExactMatrix(F, [])`` with an
    explicit ``ncols`` gives the ``0 × n`` matrix.
    """

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: FieldSpec, rows: Iterable[Sequence], ncols: Optional[int] = None):
        rows = tuple(tuple(field.coerce(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise ValueError(f"ragged matrix: row of length {len(r)}, expected {ncols}")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def _raw(cls, field, rows, nrows, ncols):
        obj = cls.__new__(cls)
        obj.field = field
        obj.rows = rows
        obj.nrows = nrows
        obj.ncols = ncols
        return obj

    # constructors ------------------------------------------------------
    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "ExactMatrix":
        z = field.zero
        return cls._raw(field, tuple((z,) * ncols for _ in range(nrows)), nrows, ncols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "ExactMatrix":
        z, o = field.zero, field.one
        rows = tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))
        return cls._raw(field, rows, n, n)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence], nrows: int) -> "ExactMatrix":
        if not columns:
            return cls.zeros(field, nrows, 0)
        return cls(field, zip(*columns), len(columns)) if nrows else cls.zeros(field, 0, len(columns))

    @classmethod
    def column(cls, field: FieldSpec, vec: Sequence) -> "ExactMatrix":
        return cls(field, [[x] for x in vec], 1)

    @classmethod
    def block_diag(cls, field: FieldSpec, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        nr = sum(b.nrows for b in blocks)
        nc = sum(b.ncols for b in blocks)
        z = field.zero
        out = []
        c0 = 0
        for b in blocks:
            for r in b.rows:
                out.append((z,) * c0 + r + (z,) * (nc - c0 - b.ncols))
            c0 += b.ncols
        return cls._raw(field, tuple(out), nr, nc)

    @classmethod
    def random(cls, field: FieldSpec, nrows: int, ncols: int, rng) -> "ExactMatrix":
        rows = tuple(tuple(field.random(rng) for _ in range(ncols)) for _ in range(nrows))
        return cls._raw(field, rows, nrows, ncols)

    # basic protocol ----------------------------------------------------
    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"ExactMatrix<{self.field}>({self.nrows}x{self.ncols}: [{body}])"

    def to_lists(self) -> List[list]:
        return [list(r) for r in self.rows]

    def is_zero(self) -> bool:
        return not any(x for r in self.rows for x in r)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def T(self) -> "ExactMatrix":
        if self.nrows == 0:
            return ExactMatrix.zeros(self.field, self.ncols, 0)
        return ExactMatrix._raw(self.field, tuple(zip(*self.rows)), self.ncols, self.nrows)

    def columns(self) -> List[tuple]:
        return list(self.T.rows)

    # arithmetic ---------------------------------------------------------
    def _check_same(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        rows = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        return ExactMatrix._raw(self.field, rows, self.nrows, self.ncols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        rows = tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows))
        return ExactMatrix._raw(self.field, rows, self.nrows, self.ncols)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._raw(self.field, tuple(tuple(-a for a in r) for r in self.rows),
                                self.nrows, self.ncols)

    def scale(self, c) -> "ExactMatrix":
        c = self.field.coerce(c)
        return ExactMatrix._raw(self.field, tuple(tuple(c * a for a in r) for r in self.rows),
                                self.nrows, self.ncols)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        z = self.field.zero
        cols = other.T.rows if other.nrows else ((),) * other.ncols
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = z
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return ExactMatrix._raw(self.field, tuple(out), self.nrows, other.ncols)

    def apply(self, vec: Sequence) -> tuple:
        z = self.field.zero
        out = []
        for r in self.rows:
            acc = z
            for a, b in zip(r, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def __pow__(self, e: int) -> "ExactMatrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        result = ExactMatrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def map(self, fn, field: Optional[FieldSpec] = None) -> "ExactMatrix":
        """Entrywise image, optionally into another field."""
        f = field or self.field
        return ExactMatrix(f, [[fn(x) for x in r] for r in self.rows], self.ncols)

    def change_field(self, field: FieldSpec) -> "ExactMatrix":
        return ExactMatrix(field, self.rows, self.ncols)

    # block helpers ------------------------------------------------------
    def hstack(self, *others: "ExactMatrix") -> "ExactMatrix":
        mats = (self,) + others
        for m in mats:
            if m.nrows != self.nrows:
                raise ValueError("hstack row mismatch")
        rows = tuple(sum((m.rows[i] for m in mats), ()) for i in range(self.nrows))
        return ExactMatrix._raw(self.field, rows, self.nrows, sum(m.ncols for m in mats))

    def vstack(self, *others: "ExactMatrix") -> "ExactMatrix":
        mats = (self,) + others
        for m in mats:
            if m.ncols != self.ncols:
                raise ValueError("vstack column mismatch")
        rows = sum((m.rows for m in mats), ())
        return ExactMatrix._raw(self.field, rows, len(rows), self.ncols)

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "ExactMatrix":
        rows = tuple(r[c0:c1] for r in self.rows[r0:r1])
        return ExactMatrix._raw(self.field, rows, r1 - r0, c1 - c0)

    # linear algebra shortcuts -----------------------------------------------
    def rank(self) -> int:
        return rref(self)[1]

    def det(self):
        return determinant(self)

    def inverse(self) -> "ExactMatrix":
        return inverse(self)

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows

    def is_nilpotent(self) -> bool:
        if self.nrows == 0:
            return True
        return (self ** self.nrows).is_zero()


# --------------------------------------------------------------------------
# elimination kernels on mutable row lists


def _require_field(field: FieldSpec):
    if not field.is_field:
        raise NotAFieldError(f"{field} is not a field; embed k[t] entries into k(t) first")


def _eliminate(rows: List[list], ncols: int, limit: Optional[int] = None):
    """Gauss-Jordan in place on the first ``limit`` columns; returns pivot columns."""
    nrows = len(rows)
    limit = ncols if limit is None else limit
    pivots = []
    r = 0
    for c in range(limit):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = 1 / prow[c] if not hasattr(prow[c], "inverse") else prow[c].inverse()
        if prow[c] != 1:
            prow = [x * inv for x in prow]
            rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    row = rows[i]
                    rows[i] = [a - f * b if b else a for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: ExactMatrix) -> Tuple[ExactMatrix, int, List[int]]:
    """Reduced row-echelon form, rank and pivot columns."""
    _require_field(m.field)
    rows = [list(r) for r in m.rows]
    pivots = _eliminate(rows, m.ncols)
    out = ExactMatrix._raw(m.field, tuple(tuple(r) for r in rows), m.nrows, m.ncols)
    return out, len(pivots), pivots


def _kernel_from_rref(rows, pivots, ncols, field) -> List[tuple]:
    pivset = set(pivots)
    zero, one = field.zero, field.one
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [zero] * ncols
        v[free] = one
        for i, pc in enumerate(pivots):
            x = rows[i][free]
            if x:
                v[pc] = -x
        basis.append(tuple(v))
    return basis


def kernel_basis(m: ExactMatrix) -> List[tuple]:
    """Basis of ``{x : m x = 0}``; vectors are tuples of length ``m.ncols``."""
    _require_field(m.field)
    rows = [list(r) for r in m.rows]
    pivots = _eliminate(rows, m.ncols)
    return _kernel_from_rref(rows, pivots, m.ncols, m.field)


def kernel_matrix(m: ExactMatrix) -> ExactMatrix:
    """Matrix whose columns are :func:`kernel_basis` (shape ``ncols × nullity``)."""
    return ExactMatrix.from_columns(m.field, kernel_basis(m), m.ncols)


def left_kernel_matrix(m: ExactMatrix) -> ExactMatrix:
    """Matrix whose rows span ``{y : y m = 0}``."""
    return kernel_matrix(m.T).T


def column_space(m: ExactMatrix) -> ExactMatrix:
    """Columns of ``m`` at pivot positions: a basis of the image."""
    _, _, piv = rref(m)
    cols = m.columns()
    return ExactMatrix.from_columns(m.field, [cols[c] for c in piv], m.nrows)


def solve(a: ExactMatrix, b: Sequence) -> Optional[tuple]:
    """Some ``x`` with ``a x = b``, or ``None`` when the system is inconsistent."""
    _require_field(a.field)
    if len(b) != a.nrows:
        raise ValueError(f"dimension mismatch: matrix has {a.nrows} rows, right side {len(b)}")
    field = a.field
    rows = [list(r) + [field.coerce(x)] for r, x in zip(a.rows, b)]
    pivots = _eliminate(rows, a.ncols + 1, limit=a.ncols)
    for r in rows[len(pivots):]:
        if r[-1]:
            return None
    x = [field.zero] * a.ncols
    for i, c in enumerate(pivots):
        x[c] = rows[i][-1]
    x = tuple(x)
    if a.apply(x) != tuple(field.coerce(v) for v in b):
        raise ArithmeticError("solve produced a non-solution")
    return x


def solve_matrix(a: ExactMatrix, b: ExactMatrix) -> Optional[ExactMatrix]:
    """Some ``X`` with ``a X = b`` (column by column), or ``None``."""
    _require_field(a.field)
    if a.nrows != b.nrows:
        raise ValueError("dimension mismatch in solve_matrix")
    field = a.field
    k = b.ncols
    rows = [list(r) + list(s) for r, s in zip(a.rows, b.rows)]
    pivots = _eliminate(rows, a.ncols + k, limit=a.ncols)
    for r in rows[len(pivots):]:
        if any(r[a.ncols:]):
            return None
    out = [[field.zero] * k for _ in range(a.ncols)]
    for i, c in enumerate(pivots):
        out[c] = rows[i][a.ncols:]
    return ExactMatrix._raw(field, tuple(tuple(r) for r in out), a.ncols, k)


def inverse(m: ExactMatrix) -> ExactMatrix:
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    x = solve_matrix(m, ExactMatrix.identity(m.field, m.nrows))
    if x is None:
        raise ZeroDivisionError("matrix is singular")
    return x


def left_inverse(m: ExactMatrix) -> ExactMatrix:
    """``L`` with ``L m = I`` for ``m`` of full column rank."""
    x = solve_matrix(m.T, ExactMatrix.identity(m.field, m.ncols))
    if x is None:
        raise ValueError("matrix does not have full column rank")
    return x.T


def right_inverse(m: ExactMatrix) -> ExactMatrix:
    """``R`` with ``m R = I`` for ``m`` of full row rank."""
    x = solve_matrix(m, ExactMatrix.identity(m.field, m.nrows))
    if x is None:
        raise ValueError("matrix does not have full row rank")
    return x


def determinant(m: ExactMatrix):
    if not m.is_square():
        raise ValueError("determinant of a non-square matrix")
    _require_field(m.field)
    rows = [list(r) for r in m.rows]
    n = m.nrows
    det = m.field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return m.field.zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        p = rows[c][c]
        det = det * p
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                q = f / p
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[c])]
    return det


def charpoly(m: ExactMatrix) -> Poly:
    """Characteristic polynomial ``det(x I - m)`` via Hessenberg reduction."""
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    field = m.field
    _require_field(field)
    if field.kind not in ("Q", "Fp"):
        raise ValueError("charpoly is implemented over Q and F_p only")
    n = m.nrows
    h = [list(r) for r in m.rows]
    # similarity transform to upper Hessenberg form
    for c in range(n - 2):
        piv = next((i for i in range(c + 1, n) if h[i][c]), None)
        if piv is None:
            continue
        if piv != c + 1:
            h[c + 1], h[piv] = h[piv], h[c + 1]
            for row in h:
                row[c + 1], row[piv] = row[piv], row[c + 1]
        p = h[c + 1][c]
        for i in range(c + 2, n):
            f = h[i][c] / p
            if f:
                h[i] = [a - f * b for a, b in zip(h[i], h[c + 1])]
                for row in h:
                    row[c + 1] = row[c + 1] + f * row[i]
    # p_k(x) = det(x I - H[:k,:k]) by the standard recurrence
    x = Poly([0, 1], field)
    polys = [Poly([1], field)]
    for k in range(1, n + 1):
        pk = (x - h[k - 1][k - 1]) * polys[k - 1]
        prod = field.one
        for i in range(1, k):
            prod = prod * h[k - i][k - i - 1]
            coef = prod * h[k - i - 1][k - 1]
            if coef:
                pk = pk - polys[k - i - 1] * coef
        polys.append(pk)
    return polys[n]


def poly_of_matrix(p: Poly, m: ExactMatrix) -> ExactMatrix:
    """Evaluate a polynomial at a square matrix (Horner)."""
    n = m.nrows
    acc = ExactMatrix.zeros(m.field, n, n)
    ident = ExactMatrix.identity(m.field, n)
    for c in reversed(p.coeffs):
        acc = acc @ m + ident.scale(c)
    return acc
