"""Exact sparse linear algebra.

Rows and vectors are dicts ``{column: value}`` holding only nonzero entries.
Over Q the elimination is fraction-free: rows are scaled to integers and
combined as ``a*row - b*pivot_row`` with the content divided out, so no
rational arithmetic happens until the final normalisation.  Entries from a
number field go through ordinary Gauss-Jordan with division.

Whatever the pivot order, the reduced echelon form of a row space is unique,
so results do not depend on the order rows are fed in.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import NFElement, NumberField, format_rational


class LinearAlgebraError(ArithmeticError):
    pass


def _is_rational(values: Iterable) -> bool:
    for v in values:
        if isinstance(v, NFElement):
            return False
    return True


def _int_row(row: dict) -> dict:
    den = 1
    for v in row.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = den * v.denominator // math.gcd(den, v.denominator)
    out = {c: int(v * den) for c, v in row.items() if v}
    return _primitive(out)


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = math.gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


class _IntEchelon:
    """Incremental reduced echelon basis over Q, integer rows."""

    def __init__(self):
        self.rows: dict[int, dict] = {}  # pivot column -> primitive integer row

    def reduce(self, row: dict) -> dict:
        for c in [c for c in row if c in self.rows]:
            b = row.get(c)
            if not b:
                continue
            prow = self.rows[c]
            a = prow[c]
            g = math.gcd(a, b)
            a, b = a // g, b // g
            new = {k: v * a for k, v in row.items()}
            for k, v in prow.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            row = _primitive(new)
        return row

    def add(self, row: dict) -> int | None:
        row = self.reduce(_int_row(row))
        if not row:
            return None
        piv = min(row)
        if row[piv] < 0:
            row = {k: -v for k, v in row.items()}
        for c, other in list(self.rows.items()):
            b = other.get(piv)
            if b:
                a = row[piv]
                g = math.gcd(a, b)
                a, b = a // g, b // g
                new = {k: v * a for k, v in other.items()}
                for k, v in row.items():
                    nv = new.get(k, 0) - b * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                new = _primitive(new)
                if new[c] < 0:
                    new = {k: -v for k, v in new.items()}
                self.rows[c] = new
        self.rows[piv] = row
        return piv

    def normalized(self) -> dict[int, dict]:
        out = {}
        for c in sorted(self.rows):
            row = self.rows[c]
            p = row[c]
            out[c] = {k: Fraction(v, p) for k, v in sorted(row.items())}
        return out


class _FieldEchelon:
    """Incremental reduced echelon basis over an arbitrary exact field."""

    def __init__(self):
        self.rows: dict[int, dict] = {}

    def reduce(self, row: dict) -> dict:
        row = {k: v for k, v in row.items() if v}
        for c in [c for c in row if c in self.rows]:
            b = row.get(c)
            if not b:
                continue
            for k, v in self.rows[c].items():
                nv = row.get(k, 0) - b * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row

    def add(self, row: dict) -> int | None:
        row = self.reduce(row)
        if not row:
            return None
        piv = min(row)
        inv = 1 / row[piv] if not isinstance(row[piv], NFElement) else row[piv].inverse()
        row = {k: v * inv for k, v in row.items()}
        for c, other in list(self.rows.items()):
            b = other.get(piv)
            if b:
                new = dict(other)
                for k, v in row.items():
                    nv = new.get(k, 0) - b * v
                    if nv:
                        new[k] = nv
                    else:
                        new.pop(k, None)
                self.rows[c] = new
        self.rows[piv] = row
        return piv

    def normalized(self) -> dict[int, dict]:
        return {c: dict(sorted(self.rows[c].items())) for c in sorted(self.rows)}


def echelon(rows: Sequence[dict], rational: bool | None = None):
    if rational is None:
        rational = all(_is_rational(r.values()) for r in rows)
    ech = _IntEchelon() if rational else _FieldEchelon()
    for r in rows:
        ech.add(r)
    return ech


def rref(rows: Sequence[dict], rational: bool | None = None) -> dict[int, dict]:
    """Reduced row echelon basis of the row space, keyed by pivot column."""
    return echelon(rows, rational).normalized()


def rank(rows: Sequence[dict]) -> int:
    return len(echelon(rows).rows)


def kernel_basis(rows: Sequence[dict], ncols: int) -> list[dict]:
    """Basis of {x : row . x = 0 for every row}, one vector per free column."""
    R = rref(rows)
    free = [c for c in range(ncols) if c not in R]
    out = []
    for f in free:
        v = {f: Fraction(1)}
        for p, row in R.items():
            x = row.get(f)
            if x:
                v[p] = -x
        out.append(dict(sorted(v.items())))
    return out


def solve_rows(rows: Sequence[dict], ncols: int, rhs: Sequence) -> list | None:
    """One solution of A x = rhs (free variables zero), or None if inconsistent."""
    aug = []
    for r, b in zip(rows, rhs):
        row = dict(r)
        if b:
            row[ncols] = b
        aug.append(row)
    R = rref(aug)
    if ncols in R:
        return None
    x = [Fraction(0)] * ncols
    for p, row in R.items():
        b = row.get(ncols)
        if b:
            x[p] = b
    return x


def inverse_rows(rows: Sequence[dict], n: int) -> list[dict]:
    aug = []
    for i, r in enumerate(rows):
        row = dict(r)
        row[n + i] = Fraction(1)
        aug.append(row)
    R = rref(aug)
    if any(p not in R for p in range(n)):
        raise LinearAlgebraError("inverse of a singular matrix")
    return [{k - n: v for k, v in R[p].items() if k >= n} for p in range(n)]


def coordinates_in(R: dict[int, dict], v: dict):
    """Coordinates of v in an RREF basis (pivot -> row); None if v is outside the span."""
    coords = {}
    residual = dict(v)
    for p, row in R.items():
        c = residual.get(p)
        if c:
            coords[p] = c
            for k, x in row.items():
                nv = residual.get(k, 0) - c * x
                if nv:
                    residual[k] = nv
                else:
                    residual.pop(k, None)
    if any(residual.values()):
        return None
    return coords


# ---------------------------------------------------------------------------
# vectors

def vadd(u: dict, v: dict, scale=1) -> dict:
    out = dict(u)
    for k, x in v.items():
        nv = out.get(k, 0) + scale * x
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def vaxpy(acc: dict, c, v: dict) -> None:
    """acc += c * v in place."""
    if not c:
        return
    for k, x in v.items():
        nv = acc.get(k, 0) + c * x
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


def vscale(v: dict, c) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vclean(v: dict) -> dict:
    return {k: x for k, x in sorted(v.items()) if x}


# ---------------------------------------------------------------------------
# matrices

class ExactMatrix:
    """Sparse exact matrix; ``rows[i]`` maps column -> nonzero entry."""

    def __init__(self, nrows: int, ncols: int, rows: Sequence[dict] | None = None,
                 base_field: NumberField | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [vclean(r) for r in rows] if rows is not None else [{} for _ in range(nrows)]
        if len(self.rows) != nrows:
            raise ValueError("row count mismatch")
        for r in self.rows:
            if r and (min(r) < 0 or max(r) >= ncols):
                raise ValueError("column index out of range")
        self.base_field = base_field

    @classmethod
    def from_dense(cls, data, base_field=None):
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix")
        rows = [{j: (Fraction(x) if isinstance(x, int) else x) for j, x in enumerate(r) if x} for r in data]
        return cls(len(data), ncols, rows, base_field)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[dict], base_field=None):
        rows = [{} for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, x in col.items():
                if x:
                    rows[i][j] = x
        return cls(nrows, len(columns), rows, base_field)

    @classmethod
    def identity(cls, n, base_field=None):
        return cls(n, n, [{i: Fraction(1)} for i in range(n)], base_field)

    def to_dense(self):
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                out[i][j] = x
        return out

    def columns(self) -> list[dict]:
        cols = [{} for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, x in r.items():
                cols[j][i] = x
        return cols

    def column(self, j) -> dict:
        return {i: r[j] for i, r in enumerate(self.rows) if j in r}

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.ncols, self.nrows, self.columns(), self.base_field)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        rows = []
        for r in self.rows:
            acc = {}
            for k, x in r.items():
                vaxpy(acc, x, other.rows[k])
            rows.append(acc)
        return ExactMatrix(self.nrows, other.ncols, rows, self.base_field or other.base_field)

    def apply(self, v: dict) -> dict:
        out = {}
        for i, r in enumerate(self.rows):
            s = 0
            for k, x in r.items():
                y = v.get(k)
                if y:
                    s = s + x * y
            if s:
                out[i] = s
        return out

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.nrows == other.nrows \
            and self.ncols == other.ncols and self.rows == other.rows

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols}, nnz={sum(map(len, self.rows))})"

    def rank(self) -> int:
        return rank(self.rows)

    def kernel(self) -> list[dict]:
        return kernel_basis(self.rows, self.ncols)

    def inverse(self) -> "ExactMatrix":
        if self.nrows != self.ncols:
            raise LinearAlgebraError("inverse of a non-square matrix")
        return ExactMatrix(self.nrows, self.nrows, inverse_rows(self.rows, self.nrows), self.base_field)

    def to_json(self):
        from .exactnum import element_to_json
        out = []
        for r in self.to_dense():
            out.append([format_rational(x) if not isinstance(x, NFElement) else element_to_json(x) for x in r])
        return out


def solve_exact(A: ExactMatrix, mode: str, rhs: Sequence | None = None):
    """Dispatch for rank / kernel_basis / solve / inverse."""
    if mode == "rank":
        return A.rank()
    if mode == "kernel_basis":
        return A.kernel()
    if mode == "solve":
        if rhs is None or len(rhs) != A.nrows:
            raise ValueError("solve needs a right-hand side of length nrows")
        sol = solve_rows(A.rows, A.ncols, rhs)
        if sol is None:
            raise LinearAlgebraError("inconsistent linear system")
        return sol
    if mode == "inverse":
        return A.inverse()
    raise ValueError(f"unknown mode {mode!r}")
