"""Exact dense linear algebra over GF(q).

Everything here is Gauss-Jordan with full reduction: the reduced row
echelon form is unique, so RREF bases double as canonical names for row
spaces and all subspace comparisons reduce to tuple equality.  Matrices
are immutable; operations return fresh objects.  Instances are desk-scale
(a few hundred columns), so there is no sparse representation.
"""

from __future__ import annotations

from .errors import DimensionMismatch, InvalidArgs, NotSubspace
from .gfq import FieldCtx


class MatGFq:
    """Immutable matrix over GF(q); data is a tuple of row tuples."""

    __slots__ = ("ctx", "rows", "cols", "data")

    def __init__(self, ctx: FieldCtx, rows: int, cols: int, data):
        data = tuple(tuple(r) for r in data)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise InvalidArgs(f"data shape does not match {rows}x{cols}")
        q = ctx.q
        for r in data:
            for x in r:
                if not 0 <= x < q:
                    raise InvalidArgs(f"entry {x} is not a GF({q}) encoding")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, name, value):
        raise AttributeError("MatGFq is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, MatGFq)
            and self.ctx == other.ctx
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.ctx.q, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(map(str, r)) for r in self.data)
        return f"MatGFq({self.ctx!r}, {self.rows}x{self.cols}, [{body}])"


def mat(ctx: FieldCtx, rows, cols: int | None = None) -> MatGFq:
    """Build a MatGFq from an iterable of rows."""
    rows = [tuple(r) for r in rows]
    if cols is None:
        if not rows:
            raise InvalidArgs("cannot infer cols from an empty matrix")
        cols = len(rows[0])
    return MatGFq(ctx, len(rows), cols, rows)


def rref_rows(ctx: FieldCtx, rows, cols: int):
    """RREF of raw row tuples; returns (rows_without_zeros, pivot_columns)."""
    work = [list(r) for r in rows]
    add_t, mul_t, neg_t = ctx.add_table, ctx.mul_table, ctx.neg_table
    inv_t = ctx.inv_table
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, len(work)):
            if work[i][c]:
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        row = work[r]
        pv = row[c]
        if pv != 1:
            scale = inv_t[pv]
            mrow = mul_t[scale]
            work[r] = row = [mrow[x] for x in row]
        for i in range(len(work)):
            if i == r:
                continue
            f = work[i][c]
            if f:
                mrow = mul_t[neg_t[f]]
                other = work[i]
                work[i] = [add_t[x][mrow[y]] for x, y in zip(other, row)]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def rref(m: MatGFq) -> tuple[MatGFq, int]:
    """Unique reduced row echelon form with zero rows dropped, plus rank."""
    rows, pivots = rref_rows(m.ctx, m.data, m.cols)
    return MatGFq(m.ctx, len(rows), m.cols, rows), len(rows)


def rank(m: MatGFq) -> int:
    return rref(m)[1]


def transpose(m: MatGFq) -> MatGFq:
    return MatGFq(m.ctx, m.cols, m.rows, tuple(zip(*m.data)) if m.rows else ((),) * m.cols)


def stack(a: MatGFq, b: MatGFq) -> MatGFq:
    _check_compatible(a, b)
    return MatGFq(a.ctx, a.rows + b.rows, a.cols, a.data + b.data)


def mat_mul(a: MatGFq, b: MatGFq) -> MatGFq:
    """Exact product over GF(q)."""
    if a.ctx != b.ctx:
        raise DimensionMismatch("contexts differ")
    if a.cols != b.rows:
        raise DimensionMismatch(f"inner dimensions differ: {a.cols} vs {b.rows}")
    ctx = a.ctx
    add_t, mul_t = ctx.add_table, ctx.mul_table
    bt = tuple(zip(*b.data)) if b.rows else ()
    out = []
    for ar in a.data:
        row = []
        for bc in bt:
            acc = 0
            for x, y in zip(ar, bc):
                if x and y:
                    acc = add_t[acc][mul_t[x][y]]
            row.append(acc)
        out.append(tuple(row))
    return MatGFq(ctx, a.rows, b.cols, out)


def _check_compatible(a: MatGFq, b: MatGFq):
    if a.ctx != b.ctx:
        raise DimensionMismatch("contexts differ")
    if a.cols != b.cols:
        raise DimensionMismatch(f"column counts differ: {a.cols} vs {b.cols}")


def intersect_dim(a: MatGFq, b: MatGFq) -> int:
    """dim(rowspace(a) ∩ rowspace(b)) = rank a + rank b - rank of the stack.

    Both inputs must already be in RREF, so their row counts are their ranks.
    """
    _check_compatible(a, b)
    return a.rows + b.rows - rank(stack(a, b))


def sum_space(a: MatGFq, b: MatGFq) -> MatGFq:
    """RREF basis of rowspace(a) + rowspace(b)."""
    _check_compatible(a, b)
    return rref(stack(a, b))[0]


class _Echelonizer:
    """Incremental row-echelon basis over GF(q) for independence testing."""

    def __init__(self, ctx: FieldCtx, cols: int):
        self.ctx = ctx
        self.cols = cols
        self.pivots: list[int] = []
        self.rows: list[list[int]] = []

    def reduce(self, row) -> list[int]:
        ctx = self.ctx
        add_t, mul_t, neg_t = ctx.add_table, ctx.mul_table, ctx.neg_table
        row = list(row)
        for p, er in zip(self.pivots, self.rows):
            f = row[p]
            if f:
                mrow = mul_t[neg_t[f]]
                row = [add_t[x][mrow[y]] for x, y in zip(row, er)]
        return row

    def try_add(self, row) -> bool:
        """Insert row if independent of the current basis; report success."""
        ctx = self.ctx
        red = self.reduce(row)
        for c, x in enumerate(red):
            if x:
                if x != 1:
                    mrow = ctx.mul_table[ctx.inv_table[x]]
                    red = [mrow[y] for y in red]
                self.pivots.append(c)
                self.rows.append(red)
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)


def extend_basis(independent: MatGFq, ambient: MatGFq) -> MatGFq:
    """Rows of ambient, first-fit in row order, completing independent to a
    basis of rowspace(ambient).  Returns only the added rows."""
    _check_compatible(independent, ambient)
    target = rank(ambient)
    ech = _Echelonizer(independent.ctx, independent.cols)
    for row in independent.data:
        if not ech.try_add(row):
            raise InvalidArgs("rows of `independent` are linearly dependent")
    if intersect_dim(rref(independent)[0], rref(ambient)[0]) != independent.rows:
        raise NotSubspace("independent rows do not lie in rowspace(ambient)")
    added = []
    for row in ambient.data:
        if ech.rank == target:
            break
        if ech.try_add(row):
            added.append(row)
    assert ech.rank == target
    return MatGFq(ambient.ctx, len(added), ambient.cols, added)
