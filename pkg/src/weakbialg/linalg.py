"""Exact sparse-row linear algebra over the fields in :mod:`fields`.

Matrices are stored as one dict per row (column -> nonzero raw value).
Elimination uses exact field arithmetic with first-nonzero pivot selection,
so every reduced form, kernel basis and idempotent splitting is
deterministic and reproducible.
"""

from __future__ import annotations


class NotIdempotent(ValueError):
    pass


# -- sparse vectors: dict index -> nonzero raw value ------------------------

def vec_add(field, u, v):
    out = dict(u)
    for k, x in v.items():
        y = field.add(out.get(k, field.zero), x)
        if field.is_zero(y):
            out.pop(k, None)
        else:
            out[k] = y
    return out

def vec_sub(field, u, v):
    out = dict(u)
    for k, x in v.items():
        y = field.sub(out.get(k, field.zero), x)
        if field.is_zero(y):
            out.pop(k, None)
        else:
            out[k] = y
    return out

def vec_scale(field, c, u):
    if field.is_zero(c):
        return {}
    return {k: field.mul(c, x) for k, x in u.items()}

def vec_eq(u, v):
    return u == v


class Matrix:
    """An exact matrix; rows are dicts of nonzero entries."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, nrows, ncols, rows=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]

    # -- constructors --------------------------------------------------
    @classmethod
    def from_rows(cls, field, dense):
        nrows = len(dense)
        ncols = len(dense[0]) if dense else 0
        rows = []
        for r in dense:
            rows.append({j: v for j, v in enumerate(r) if not field.is_zero(v)})
        return cls(field, nrows, ncols, rows)

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, [{i: field.one} for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, nrows, ncols)

    @classmethod
    def from_columns(cls, field, nrows, cols):
        m = cls(field, nrows, len(cols))
        for j, col in enumerate(cols):
            for i, v in col.items():
                if not field.is_zero(v):
                    m.rows[i][j] = v
        return m

    # -- accessors ------------------------------------------------------
    def entry(self, i, j):
        return self.rows[i].get(j, self.field.zero)

    def column(self, j):
        return {i: r[j] for i, r in enumerate(self.rows) if j in r}

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def dense(self):
        z = self.field.zero
        return [[r.get(j, z) for j in range(self.ncols)] for r in self.rows]

    def nnz(self):
        return sum(len(r) for r in self.rows)

    # -- algebra ----------------------------------------------------------
    def __mul__(self, other):
        assert self.ncols == other.nrows, (self.ncols, other.nrows)
        f = self.field
        out = Matrix(f, self.nrows, other.ncols)
        orows = other.rows
        for i, row in enumerate(self.rows):
            acc = out.rows[i]
            for k, a in row.items():
                for j, b in orows[k].items():
                    v = f.add(acc.get(j, f.zero), f.mul(a, b))
                    if f.is_zero(v):
                        acc.pop(j, None)
                    else:
                        acc[j] = v
        return out

    def __add__(self, other):
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        f = self.field
        return Matrix(f, self.nrows, self.ncols,
                      [vec_add(f, a, b) for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other):
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        f = self.field
        return Matrix(f, self.nrows, self.ncols,
                      [vec_sub(f, a, b) for a, b in zip(self.rows, other.rows)])

    def __neg__(self):
        f = self.field
        return self.scale(f.neg(f.one))

    def scale(self, c):
        f = self.field
        return Matrix(f, self.nrows, self.ncols,
                      [vec_scale(f, c, r) for r in self.rows])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.nrows == other.nrows \
            and self.ncols == other.ncols and self.rows == other.rows

    def transpose(self):
        out = Matrix(self.field, self.ncols, self.nrows)
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                out.rows[j][i] = v
        return out

    def kron(self, other):
        """Kronecker product; index (i, k) flattens to i * other.dim + k."""
        f = self.field
        out = Matrix(f, self.nrows * other.nrows, self.ncols * other.ncols)
        for i, row in enumerate(self.rows):
            for k, orow in enumerate(other.rows):
                dest = out.rows[i * other.nrows + k]
                for j, a in row.items():
                    for l, b in orow.items():
                        dest[j * other.ncols + l] = f.mul(a, b)
        return out

    def apply(self, vec):
        """Matrix times sparse column vector."""
        f = self.field
        out = {}
        for i, row in enumerate(self.rows):
            acc = f.zero
            hit = False
            for k, a in row.items():
                if k in vec:
                    acc = f.add(acc, f.mul(a, vec[k]))
                    hit = True
            if hit and not f.is_zero(acc):
                out[i] = acc
        return out

    def is_zero(self):
        return all(not r for r in self.rows)

    def rank(self):
        pivots, _ = rref([dict(r) for r in self.rows], self.ncols, self.field)
        return len(pivots)

    def is_idempotent(self):
        return self * self == self


def rref(rows, ncols, field):
    """In-place reduced row echelon form; returns (pivot columns, rows).

    Pivots are chosen as the first row carrying a nonzero entry in the
    leftmost unfinished column (deterministic).
    """
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if c in rows[i]:
                sel = i
                break
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = vec_scale(field, inv, rows[r])
        for i in range(nrows):
            if i != r and c in rows[i]:
                rows[i] = vec_sub(field, rows[i], vec_scale(field, rows[i][c], rows[r]))
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots, rows


def kernel_basis(M):
    """Exact basis of the null space of M, as sparse column vectors."""
    f = M.field
    pivots, rows = rref([dict(r) for r in M.rows], M.ncols, f)
    pivset = set(pivots)
    free = [c for c in range(M.ncols) if c not in pivset]
    basis = []
    for c in free:
        v = {c: f.one}
        for r, pc in enumerate(pivots):
            a = rows[r].get(c)
            if a is not None:
                v[pc] = f.neg(a)
        basis.append(v)
    return basis


def solve_matrix(A, B):
    """One exact solution X of A X = B, or None if inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    f = A.field
    assert A.nrows == B.nrows
    n = A.ncols
    aug = []
    for i in range(A.nrows):
        row = dict(A.rows[i])
        for j, v in B.rows[i].items():
            row[n + j] = v
        aug.append(row)
    pivots, rows = rref(aug, n, f)  # eliminate only the A-columns
    # rows beyond rank must have no A-part; if they carry B-entries -> no solution
    rank = len(pivots)
    for i in range(rank, len(rows)):
        if any(k < n for k in rows[i]):
            raise AssertionError("rref left stray entries")
        if rows[i]:
            return None
    X = Matrix(f, n, B.ncols)
    for r, pc in enumerate(pivots):
        for k, v in rows[r].items():
            if k >= n:
                X.rows[pc][k - n] = v
    # pivot rows may still involve free columns of A; verify exactly
    if A * X == B:
        return X
    return None


def solve_affine(A, b):
    """All solutions of A x = b: (particular dict | None, kernel basis)."""
    B = Matrix(A.field, A.nrows, 1)
    for i, v in b.items():
        if not A.field.is_zero(v):
            B.rows[i][0] = v
    X = solve_matrix(A, B)
    part = None if X is None else X.column(0)
    return part, kernel_basis(A)


def split_idempotent(E):
    """Split an exact idempotent E = inject . project.

    Returns (inject, project) with project * inject the identity on the
    rank(E)-dimensional image and inject * project = E.  The image basis is
    the set of pivot columns of E; project consists of the corresponding
    reduced-row-echelon rows, so output is deterministic.
    """
    if E.nrows != E.ncols or not (E * E == E):
        raise NotIdempotent("matrix is not idempotent")
    f = E.field
    pivots, rows = rref([dict(r) for r in E.rows], E.ncols, f)
    r = len(pivots)
    inject = Matrix(f, E.nrows, r)
    for j, c in enumerate(pivots):
        for i, v in E.column(c).items():
            inject.rows[i][j] = v
    project = Matrix(f, r, E.ncols, [dict(rows[i]) for i in range(r)])
    return inject, project


def char_poly(M):
    """Characteristic polynomial det(xI - M), monic, low-to-high coeffs.

    Faddeev-LeVerrier; exact over any characteristic-zero field.
    """
    assert M.nrows == M.ncols
    f = M.field
    n = M.nrows
    coeffs = [f.zero] * n + [f.one]  # x^n + c_{n-1} x^{n-1} + ... + c_0
    Mk = Matrix.identity(f, n)
    for k in range(1, n + 1):
        Mk = M * Mk
        tr = f.zero
        for i in range(n):
            tr = f.add(tr, Mk.entry(i, i))
        c = f.mul(f.neg(f.inv(f.from_int(k))), tr)
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                Mk.rows[i][i] = f.add(Mk.entry(i, i), c)
                if f.is_zero(Mk.rows[i][i]):
                    del Mk.rows[i][i]
    return coeffs
