"""Exact dense linear algebra over the integers.

Normal forms (Smith and Hermite), kernels, cokernels and exact linear
solving for dense integer matrices.  Every transformation is returned
together with the unimodular matrices that witness it, so results can be
certified by plain matrix multiplication.  All arithmetic is done with
Python's arbitrary-precision integers; overflow is impossible at any size.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers, row-major.

    >>> m = IntMatrix.from_rows([[1, 2], [3, 4]])
    >>> m @ IntMatrix.identity(2) == m
    True
    >>> m.transpose()[0, 1]
    3
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries) -> None:
        rows = int(rows)
        cols = int(cols)
        if rows < 0 or cols < 0:
            raise InputError("matrix dimensions must be nonnegative")
        grid = tuple(tuple(int(x) for x in row) for row in entries)
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise InputError(
                f"entry grid does not match declared shape {rows}x{cols}"
            )
        self.rows = rows
        self.cols = cols
        self.entries = grid

    @classmethod
    def from_rows(cls, rows) -> "IntMatrix":
        grid = [list(r) for r in rows]
        ncols = len(grid[0]) if grid else 0
        return cls(len(grid), ncols, grid)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, values) -> "IntMatrix":
        vals = [int(v) for v in values]
        n = len(vals)
        return cls(n, n, [[vals[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, idx) -> int:
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def to_rows(self) -> list:
        return [list(r) for r in self.entries]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows,
                         [[self.entries[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        tcols = list(zip(*other.entries)) if other.entries else []
        out = [[sum(a * b for a, b in zip(row, col)) for col in tcols]
               for row in self.entries]
        return IntMatrix(self.rows, other.cols, out)

    def apply(self, vec) -> tuple:
        """Matrix-vector product, vec of length self.cols."""
        v = [int(x) for x in vec]
        if len(v) != self.cols:
            raise InputError(f"vector length {len(v)} does not match {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         [[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols,
                         [[a - b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols,
                         [[-a for a in r] for r in self.entries])

    def _same_shape(self, other: "IntMatrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise InputError("matrix shapes differ")

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.entries]!r})"


def hstack(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.rows != b.rows:
        raise InputError("hstack needs equal row counts")
    return IntMatrix(a.rows, a.cols + b.cols,
                     [ra + rb for ra, rb in zip(a.entries, b.entries)])


def block_diag(blocks) -> IntMatrix:
    blocks = list(blocks)
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            out[r0 + i][c0:c0 + b.cols] = list(b.entries[i])
        r0 += b.rows
        c0 += b.cols
    return IntMatrix(rows, cols, out)


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form with unimodular certificates: u @ input @ v == d."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    def diagonal(self) -> list:
        return [self.d[i, i] for i in range(min(self.d.rows, self.d.cols))]


def _smallest_pivot(a, t, rows, cols):
    """Position of the entry of least nonzero absolute value in a[t:, t:]."""
    best = None
    best_abs = None
    for i in range(t, rows):
        row = a[i]
        for j in range(t, cols):
            x = row[j]
            if x != 0:
                ax = -x if x < 0 else x
                if best_abs is None or ax < best_abs:
                    best, best_abs = (i, j), ax
                    if ax == 1:
                        return best
    return best


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form of an integer matrix of any shape.

    Pivoting always selects the remaining entry of least nonzero absolute
    value, followed by full row/column gcd reduction; this keeps entry
    growth moderate.  The result satisfies, exactly:

    * ``u @ m @ v == d`` with ``|det u| == |det v| == 1``;
    * ``d`` is zero off the main diagonal, diagonal entries are
      nonnegative, and each nonzero diagonal entry divides the next.

    >>> snf(IntMatrix.from_rows([[1, 1], [-1, 2]])).diagonal()
    [1, 3]
    """
    rows, cols = m.rows, m.cols
    a = m.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()

    t = 0
    limit = min(rows, cols)
    while t < limit:
        pos = _smallest_pivot(a, t, rows, cols)
        if pos is None:
            break
        pi, pj = pos
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for r in a:
                r[t], r[pj] = r[pj], r[t]
            for r in v:
                r[t], r[pj] = r[pj], r[t]

        while True:
            # Clear column t by gcd reduction; re-pivot while remainders survive.
            col_dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    if q:
                        ai, at = a[i], a[t]
                        for j in range(cols):
                            ai[j] -= q * at[j]
                        ui, ut = u[i], u[t]
                        for j in range(rows):
                            ui[j] -= q * ut[j]
                    if a[i][t] != 0:
                        col_dirty = True
            if col_dirty:
                # Some remainder is smaller than the pivot: promote it.
                best = min((i for i in range(t, rows) if a[i][t] != 0),
                           key=lambda i: abs(a[i][t]))
                if best != t:
                    a[t], a[best] = a[best], a[t]
                    u[t], u[best] = u[best], u[t]
                continue

            row_dirty = False
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    if q:
                        for r in a:
                            r[j] -= q * r[t]
                        for r in v:
                            r[j] -= q * r[t]
                    if a[t][j] != 0:
                        row_dirty = True
            if row_dirty:
                best = min((j for j in range(t, cols) if a[t][j] != 0),
                           key=lambda j: abs(a[t][j]))
                if best != t:
                    for r in a:
                        r[t], r[best] = r[best], r[t]
                    for r in v:
                        r[t], r[best] = r[best], r[t]
                continue

            # Row and column are clean.  Enforce the divisibility chain:
            # fold in any entry the pivot fails to divide, then re-reduce.
            p = a[t][t]
            offender = None
            for i in range(t + 1, rows):
                ai = a[i]
                for j in range(t + 1, cols):
                    if ai[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            ao, at = a[offender], a[t]
            for j in range(cols):
                at[j] += ao[j]
            uo, ut = u[offender], u[t]
            for j in range(rows):
                ut[j] += uo[j]

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    return SnfResult(IntMatrix(rows, rows, u),
                     IntMatrix(rows, cols, a),
                     IntMatrix(cols, cols, v))


def hnf(m: IntMatrix) -> tuple:
    """Row-style Hermite normal form: returns (h, u) with h == u @ m.

    ``u`` is unimodular, ``h`` is in row-echelon form with positive pivots
    and entries above each pivot reduced into ``[0, pivot)``.  Zero rows
    sink to the bottom.  Deterministic for equal inputs.
    """
    rows, cols = m.rows, m.cols
    a = m.to_rows()
    u = IntMatrix.identity(rows).to_rows()

    pr = 0  # next pivot row
    for col in range(cols):
        if pr == rows:
            break
        # Euclidean elimination below the pivot position.
        while True:
            live = [i for i in range(pr, rows) if a[i][col] != 0]
            if not live:
                break
            best = min(live, key=lambda i: abs(a[i][col]))
            if best != pr:
                a[pr], a[best] = a[best], a[pr]
                u[pr], u[best] = u[best], u[pr]
            done = True
            for i in range(pr + 1, rows):
                if a[i][col] != 0:
                    q = a[i][col] // a[pr][col]
                    ai, ap = a[i], a[pr]
                    for j in range(cols):
                        ai[j] -= q * ap[j]
                    ui, up = u[i], u[pr]
                    for j in range(rows):
                        ui[j] -= q * up[j]
                    if a[i][col] != 0:
                        done = False
            if done:
                break
        if pr < rows and a[pr][col] != 0:
            if a[pr][col] < 0:
                a[pr] = [-x for x in a[pr]]
                u[pr] = [-x for x in u[pr]]
            p = a[pr][col]
            for i in range(pr):
                q = a[i][col] // p
                if q:
                    ai, ap = a[i], a[pr]
                    for j in range(cols):
                        ai[j] -= q * ap[j]
                    ui, up = u[i], u[pr]
                    for j in range(rows):
                        ui[j] -= q * up[j]
            pr += 1

    return IntMatrix(rows, cols, a), IntMatrix(rows, rows, u)


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel {x : m @ x == 0}, as matrix columns.

    The basis is Hermite-normalized so equal inputs give equal output;
    zero columns never appear.  A trivial kernel yields a cols x 0 matrix.

    >>> kernel_basis(IntMatrix.from_rows([[1, 2]])).entries
    ((2,), (-1,))
    """
    h, u = hnf(m.transpose())
    zero_rows = [u.entries[i] for i in range(h.rows)
                 if all(x == 0 for x in h.entries[i])]
    if not zero_rows:
        return IntMatrix(m.cols, 0, [[] for _ in range(m.cols)])
    normalized, _ = hnf(IntMatrix.from_rows(zero_rows))
    basis = [r for r in normalized.entries if any(x != 0 for x in r)]
    return IntMatrix.from_rows(basis).transpose()


def rank(m: IntMatrix) -> int:
    """Number of nonzero diagonal entries of the Smith normal form."""
    return sum(1 for x in snf(m).diagonal() if x != 0)


def cokernel(m: IntMatrix):
    """Canonical form of Z^rows / column-span(m), from the Smith diagonal.

    Returns an :class:`~ktcalc.fgab.FgAbGroup`.
    """
    from .fgab import FgAbGroup  # deferred: fgab builds on this module

    diag = snf(m).diagonal()
    nonzero = [x for x in diag if x != 0]
    return FgAbGroup(m.rows - len(nonzero), tuple(x for x in nonzero if x > 1))


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise InputError("determinant requires a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


class RowSpan:
    """Row space of an integer matrix with exact membership and solving.

    Hermite-reduces the matrix once; `contains` and `express` then run in
    a single pass of pivot reductions.
    """

    def __init__(self, m: IntMatrix) -> None:
        h, u = hnf(m)
        self.ambient = m.cols
        self.pivot_rows = []
        self.pivot_cols = []
        self.u_rows = []
        for i in range(h.rows):
            row = h.entries[i]
            pc = next((j for j, x in enumerate(row) if x != 0), None)
            if pc is not None:
                self.pivot_rows.append(row)
                self.pivot_cols.append(pc)
                self.u_rows.append(u.entries[i])

    def reduce(self, vec):
        """Pivot-reduce a row vector; returns (coefficients, remainder)."""
        rem = [int(x) for x in vec]
        if len(rem) != self.ambient:
            raise InputError(f"vector length {len(rem)} does not match ambient {self.ambient}")
        coeffs = [0] * len(self.pivot_rows)
        for idx, (row, pc) in enumerate(zip(self.pivot_rows, self.pivot_cols)):
            r = rem[pc]
            if r == 0:
                continue
            q, s = divmod(r, row[pc])
            if s != 0:
                # Not an exact multiple of the pivot: cannot lie in the span.
                return coeffs, rem
            if q:
                coeffs[idx] = q
                for j in range(pc, self.ambient):
                    rem[j] -= q * row[j]
        return coeffs, rem

    def contains(self, vec) -> bool:
        _, rem = self.reduce(vec)
        return all(x == 0 for x in rem)

    def express(self, vec):
        """Row y with y @ m == vec, or None if vec is outside the span."""
        coeffs, rem = self.reduce(vec)
        if any(x != 0 for x in rem):
            return None
        n = len(self.u_rows[0]) if self.u_rows else 0
        out = [0] * n
        for c, urow in zip(coeffs, self.u_rows):
            if c:
                for j in range(n):
                    out[j] += c * urow[j]
        return tuple(out)


def solve(m: IntMatrix, b) -> tuple | None:
    """One integer solution x of m @ x == b, or None if none exists."""
    y = RowSpan(m.transpose()).express(b)
    return y


def solve_columns(m: IntMatrix, targets: IntMatrix) -> IntMatrix | None:
    """Solve m @ X == targets columnwise; None if any column is unsolvable."""
    span = RowSpan(m.transpose())
    cols = []
    for j in range(targets.cols):
        y = span.express(targets.column(j))
        if y is None:
            return None
        cols.append(y)
    return IntMatrix.from_rows(cols).transpose()
