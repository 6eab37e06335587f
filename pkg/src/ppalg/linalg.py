"""Dense exact matrices over a field object from `ppalg.fields`.

Everything downstream (Hom spaces, Ext groups, path-algebra reduction, flag
counts) reduces to row echelon computations here, so this module stays small
and boring: lists of lists, Gaussian elimination, no floats anywhere.
"""

from __future__ import annotations

from .fields import QQ


class SingularMatrixError(ValueError):
    pass


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, rows, ncols=None):
        self.field = field
        self.rows = [[field.of(x) for x in row] for row in rows]
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != self.ncols:
                raise ValueError("ncols does not match row length")
        else:
            if ncols is None:
                raise ValueError("empty matrix needs explicit ncols")
            self.ncols = ncols

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, field, m, n):
        z = field.zero()
        return cls(field, [[z] * n for _ in range(m)], ncols=n)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero(), field.one()
        return cls(field,
                   [[o if i == j else z for j in range(n)] for i in range(n)],
                   ncols=n)

    @classmethod
    def from_cols(cls, field, cols, nrows=None):
        if not cols:
            if nrows is None:
                raise ValueError("empty column list needs explicit nrows")
            return cls.zeros(field, nrows, 0)
        m = len(cols[0])
        return cls(field, [[cols[j][i] for j in range(len(cols))]
                           for i in range(m)], ncols=len(cols))

    @classmethod
    def column(cls, field, entries):
        return cls(field, [[x] for x in entries], ncols=1)

    # -- basics ----------------------------------------------------------

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def copy(self):
        m = Matrix.__new__(Matrix)
        m.field = self.field
        m.rows = [row[:] for row in self.rows]
        m.nrows = self.nrows
        m.ncols = self.ncols
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __setitem__(self, ij, v):
        i, j = ij
        self.rows[i][j] = self.field.of(v)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.field == other.field
                and self.shape == other.shape and self.rows == other.rows)

    def __hash__(self):
        return hash((self.field, self.nrows, self.ncols,
                     tuple(tuple(r) for r in self.rows)))

    def __repr__(self):
        if self.nrows == 0 or self.ncols == 0:
            return f"Matrix({self.field}, {self.nrows}x{self.ncols})"
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix({self.field}, [{body}])"

    def _same_field(self, other):
        if self.field != other.field:
            raise TypeError(
                f"mixed-field arithmetic: {self.field} vs {other.field}")

    def is_zero(self):
        f = self.field
        return all(f.is_zero(x) for row in self.rows for x in row)

    def col(self, j):
        return [row[j] for row in self.rows]

    def column_matrix(self, j):
        return Matrix.column(self.field, self.col(j))

    def submatrix(self, row_idx, col_idx):
        return Matrix(self.field,
                      [[self.rows[i][j] for j in col_idx] for i in row_idx],
                      ncols=len(col_idx))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        self._same_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        f = self.field
        return Matrix(f, [[f.add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)],
                      ncols=self.ncols)

    def __sub__(self, other):
        self._same_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} - {other.shape}")
        f = self.field
        return Matrix(f, [[f.sub(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.rows, other.rows)],
                      ncols=self.ncols)

    def __neg__(self):
        f = self.field
        return Matrix(f, [[f.neg(a) for a in row] for row in self.rows],
                      ncols=self.ncols)

    def scale(self, c):
        f = self.field
        c = f.of(c)
        return Matrix(f, [[f.mul(c, a) for a in row] for row in self.rows],
                      ncols=self.ncols)

    def __mul__(self, other):
        self._same_field(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} * {other.shape}")
        f = self.field
        z = f.zero()
        ocols = list(zip(*other.rows)) if other.nrows else []
        out = []
        for row in self.rows:
            new = []
            for c in range(other.ncols):
                acc = z
                if ocols:
                    col = ocols[c]
                    for a, b in zip(row, col):
                        if not f.is_zero(a) and not f.is_zero(b):
                            acc = f.add(acc, f.mul(a, b))
                new.append(acc)
            out.append(new)
        return Matrix(f, out, ncols=other.ncols)

    def transpose(self):
        if self.nrows == 0 or self.ncols == 0:
            return Matrix.zeros(self.field, self.ncols, self.nrows)
        return Matrix(self.field, [list(col) for col in zip(*self.rows)],
                      ncols=self.nrows)

    def change_field(self, field):
        return Matrix(field, [[field.of(x) for x in row] for row in self.rows],
                      ncols=self.ncols)

    # -- elimination -------------------------------------------------------

    def rref(self):
        """Reduced row echelon form. Returns (R, pivot_columns)."""
        f = self.field
        R = [row[:] for row in self.rows]
        m, n = self.nrows, self.ncols
        pivots = []
        r = 0
        for c in range(n):
            if r >= m:
                break
            best, best_size = None, None
            for i in range(r, m):
                if not f.is_zero(R[i][c]):
                    s = f.pivot_size(R[i][c])
                    if best is None or s > best_size:
                        best, best_size = i, s
            if best is None:
                continue
            R[r], R[best] = R[best], R[r]
            inv = f.inv(R[r][c])
            R[r] = [f.mul(inv, x) for x in R[r]]
            for i in range(m):
                if i != r and not f.is_zero(R[i][c]):
                    t = R[i][c]
                    R[i] = [f.sub(a, f.mul(t, b))
                            for a, b in zip(R[i], R[r])]
            pivots.append(c)
            r += 1
        out = Matrix.__new__(Matrix)
        out.field, out.rows, out.nrows, out.ncols = f, R, m, n
        return out, pivots

    def rank(self):
        return len(self.rref()[1])

    def rank_and_kernel(self):
        """Rank and a basis of the right null space (as columns)."""
        R, pivots = self.rref()
        n = self.ncols
        f = self.field
        free = [c for c in range(n) if c not in pivots]
        cols = []
        for fc in free:
            v = [f.zero()] * n
            v[fc] = f.one()
            for r, pc in enumerate(pivots):
                v[pc] = f.neg(R.rows[r][fc])
            cols.append(v)
        return len(pivots), Matrix.from_cols(f, cols, nrows=n)

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of non-square matrix")
        f = self.field
        n = self.nrows
        R = [row[:] for row in self.rows]
        sign_flip = False
        acc = f.one()
        for c in range(n):
            piv = None
            for i in range(c, n):
                if not f.is_zero(R[i][c]):
                    piv = i
                    break
            if piv is None:
                return f.zero()
            if piv != c:
                R[c], R[piv] = R[piv], R[c]
                sign_flip = not sign_flip
            acc = f.mul(acc, R[c][c])
            inv = f.inv(R[c][c])
            for i in range(c + 1, n):
                if not f.is_zero(R[i][c]):
                    t = f.mul(inv, R[i][c])
                    R[i] = [f.sub(a, f.mul(t, b))
                            for a, b in zip(R[i], R[c])]
        return f.neg(acc) if sign_flip else acc

    def invert(self):
        if self.nrows != self.ncols:
            raise SingularMatrixError("cannot invert non-square matrix")
        n = self.nrows
        aug = hstack([self, Matrix.identity(self.field, n)])
        R, pivots = aug.rref()
        if pivots != list(range(n)):
            raise SingularMatrixError("matrix is singular")
        return R.submatrix(range(n), range(n, 2 * n))


def hstack(mats):
    mats = list(mats)
    if not mats:
        raise ValueError("hstack of nothing")
    f = mats[0].field
    m = mats[0].nrows
    for a in mats[1:]:
        if a.field != f:
            raise TypeError("mixed-field hstack")
        if a.nrows != m:
            raise ValueError("row count mismatch in hstack")
    rows = [[x for a in mats for x in a.rows[i]] for i in range(m)]
    return Matrix(f, rows, ncols=sum(a.ncols for a in mats))


def vstack(mats):
    mats = list(mats)
    if not mats:
        raise ValueError("vstack of nothing")
    f = mats[0].field
    n = mats[0].ncols
    for a in mats[1:]:
        if a.field != f:
            raise TypeError("mixed-field vstack")
        if a.ncols != n:
            raise ValueError("column count mismatch in vstack")
    rows = [row for a in mats for row in a.rows]
    return Matrix(f, rows, ncols=n)


def block_diag(field, mats):
    m = sum(a.nrows for a in mats)
    n = sum(a.ncols for a in mats)
    out = Matrix.zeros(field, m, n)
    i0 = j0 = 0
    for a in mats:
        if a.field != field:
            raise TypeError("mixed-field block_diag")
        for i in range(a.nrows):
            out.rows[i0 + i][j0:j0 + a.ncols] = a.rows[i][:]
        i0 += a.nrows
        j0 += a.ncols
    return out


def solve_linear(A, b):
    """Solve A x = b exactly.

    b may have several columns; returns (particular, kernel) where particular
    is a Matrix of the same column count as b, or None if any column is
    inconsistent, and kernel is a matrix whose columns span the null space
    of A.
    """
    A._same_field(b)
    if A.nrows != b.nrows:
        raise ValueError(f"shape mismatch {A.shape} vs rhs {b.shape}")
    f = A.field
    n = A.ncols
    aug = hstack([A, b])
    R, pivots = aug.rref()
    a_pivots = [c for c in pivots if c < n]
    if len(a_pivots) != len(pivots):
        particular = None
    else:
        cols = []
        for k in range(b.ncols):
            v = [f.zero()] * n
            for r, pc in enumerate(a_pivots):
                v[pc] = R.rows[r][n + k]
            cols.append(v)
        particular = Matrix.from_cols(f, cols, nrows=n)
    free = [c for c in range(n) if c not in a_pivots]
    kcols = []
    for fc in free:
        v = [f.zero()] * n
        v[fc] = f.one()
        for r, pc in enumerate(a_pivots):
            if pc < n:
                v[pc] = f.neg(R.rows[r][fc])
        kcols.append(v)
    kernel = Matrix.from_cols(f, kcols, nrows=n)
    return particular, kernel


def interpolate_polynomial(points, field=QQ):
    """Coefficients (ascending degree) of the unique polynomial through the
    given (x, y) pairs. Raises ValueError on duplicate x values."""
    xs = [field.of(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate x value in interpolation points")
    ys = [field.of(y) for _, y in points]
    n = len(points)
    if n == 0:
        return []
    rows = []
    for x in xs:
        acc = field.one()
        row = []
        for _ in range(n):
            row.append(acc)
            acc = field.mul(acc, x)
        rows.append(row)
    V = Matrix(field, rows, ncols=n)
    sol, _ = solve_linear(V, Matrix.column(field, ys))
    if sol is None:  # cannot happen with distinct x over a field
        raise RuntimeError("Vandermonde system inconsistent")
    return sol.col(0)
