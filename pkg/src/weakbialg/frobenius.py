"""Separable Frobenius algebras: validation and the Nakayama automorphism.

A finite-dimensional algebra is given by structure constants; a Frobenius
structure is a functional psi together with a "Casimir" element
e = sum_i e_i (x) f_i stored as an n x n coefficient matrix.  The checks
verify the dual-basis property, the Nakayama twist, the Casimir shifting
identities, separability and idempotency of e — each one exactly.
"""

from __future__ import annotations

from .linalg import Matrix, vec_add, vec_scale
from .report import Report


class DimensionMismatch(ValueError):
    pass


class NotFrobenius(ValueError):
    pass


class UnknownName(KeyError):
    pass


class FinAlgebra:
    """Associative unital algebra by structure constants.

    ``mult[i][j]`` is the sparse vector of the product (basis i) * (basis j);
    ``unit`` is the sparse vector of 1.
    """

    def __init__(self, field, basis, mult, unit):
        self.field = field
        self.basis = list(basis)
        self.dim = len(self.basis)
        self.mult = mult
        self.unit = unit

    def product(self, u, v):
        f = self.field
        out = {}
        for i, a in u.items():
            row = self.mult[i]
            for j, b in v.items():
                c = f.mul(a, b)
                out = vec_add(f, out, vec_scale(f, c, row[j]))
        return out

    def left_mult_matrix(self, vec):
        """Matrix of x -> vec * x."""
        cols = [self.product(vec, {j: self.field.one}) for j in range(self.dim)]
        return Matrix.from_columns(self.field, self.dim, cols)

    def right_mult_matrix(self, vec):
        """Matrix of x -> x * vec."""
        cols = [self.product({j: self.field.one}, vec) for j in range(self.dim)]
        return Matrix.from_columns(self.field, self.dim, cols)

    def validate(self):
        rep = Report("algebra laws")
        f = self.field
        ok = True
        wit = None
        for i in range(self.dim):
            for j in range(self.dim):
                for l in range(self.dim):
                    lhs = self.product(self.mult[i][j], {l: f.one})
                    rhs = self.product({i: f.one}, self.mult[j][l])
                    if lhs != rhs:
                        ok, wit = False, (self.basis[i], self.basis[j], self.basis[l])
                        break
                if not ok:
                    break
            if not ok:
                break
        rep.add("associativity", ok, wit)
        ok = True
        wit = None
        for i in range(self.dim):
            x = {i: f.one}
            if self.product(self.unit, x) != x or self.product(x, self.unit) != x:
                ok, wit = False, self.basis[i]
                break
        rep.add("unitality", ok, wit)
        return rep


class FrobeniusStructure:
    """psi: dense list of field values; frob: Matrix with entry (p, q) the
    coefficient of basis_p (x) basis_q in the Frobenius element."""

    def __init__(self, psi, frob):
        self.psi = psi
        self.frob = frob

    def pairs(self):
        """Nonzero (p, q, coefficient) entries of the Frobenius element."""
        for p, row in enumerate(self.frob.rows):
            for q, c in row.items():
                yield p, q, c


def psi_apply(R, F, vec):
    f = R.field
    acc = f.zero
    for i, a in vec.items():
        acc = f.add(acc, f.mul(F.psi[i], a))
    return acc


def _tensor(field, n, u, v, out=None, scale=None):
    """Accumulate u (x) v into a sparse vector on n*n coordinates."""
    if out is None:
        out = {}
    for p, a in u.items():
        for q, b in v.items():
            c = field.mul(a, b)
            if scale is not None:
                c = field.mul(scale, c)
            k = p * n + q
            s = field.add(out.get(k, field.zero), c)
            if field.is_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
    return out


def nakayama(R, F):
    """The Nakayama automorphism theta(r) = psi(e_i r) f_i and its inverse
    theta_inv(r) = psi(r f_i) e_i, as matrices; raises NotFrobenius if the
    dual-basis property fails."""
    f = R.field
    n = R.dim
    if not _dual_basis_holds(R, F):
        raise NotFrobenius("dual-basis property fails")
    tcols, icols = [], []
    for j in range(n):
        bj = {j: f.one}
        tj, ij = {}, {}
        for p, q, c in F.pairs():
            cp = f.mul(c, psi_apply(R, F, R.product({p: f.one}, bj)))
            if not f.is_zero(cp):
                tj = vec_add(f, tj, vec_scale(f, cp, {q: f.one}))
            ci = f.mul(c, psi_apply(R, F, R.product(bj, {q: f.one})))
            if not f.is_zero(ci):
                ij = vec_add(f, ij, vec_scale(f, ci, {p: f.one}))
        tcols.append(tj)
        icols.append(ij)
    theta = Matrix.from_columns(f, n, tcols)
    theta_inv = Matrix.from_columns(f, n, icols)
    return NakayamaMap(theta, theta_inv)


class NakayamaMap:
    def __init__(self, theta, theta_inv):
        self.theta = theta
        self.theta_inv = theta_inv


def _dual_basis_holds(R, F):
    f = R.field
    for r in range(R.dim):
        br = {r: f.one}
        left, right = {}, {}
        for p, q, c in F.pairs():
            cl = f.mul(c, psi_apply(R, F, R.product(br, {p: f.one})))
            left = vec_add(f, left, vec_scale(f, cl, {q: f.one}))
            cr = f.mul(c, psi_apply(R, F, R.product({q: f.one}, br)))
            right = vec_add(f, right, vec_scale(f, cr, {p: f.one}))
        if left != br or right != br:
            return False
    return True


def check_separable_frobenius(R, F):
    """Full identity suite for a claimed separable Frobenius structure."""
    if len(F.psi) != R.dim or F.frob.nrows != R.dim or F.frob.ncols != R.dim:
        raise DimensionMismatch("psi/frob size does not match the algebra")
    f = R.field
    n = R.dim
    rep = R.validate()
    rep.title = "separable Frobenius structure"

    rep.add("dual_basis", _dual_basis_holds(R, F))

    theta = theta_inv = None
    if rep.checks[-1].passed:
        nk = nakayama(R, F)
        theta, theta_inv = nk.theta, nk.theta_inv

    if theta is None:
        for name in ("nakayama_inverse", "nakayama_twist", "nakayama_automorphism",
                     "casimir_centrality", "casimir_twisted_shift",
                     "casimir_conjugate_swap", "casimir_flip",
                     "separability", "separability_idempotent"):
            rep.add(name, False, "dual-basis property failed")
        return rep, None

    rep.add("nakayama_inverse", theta * theta_inv == Matrix.identity(f, n)
            and theta_inv * theta == Matrix.identity(f, n))

    ok, wit = True, None
    for s in range(n):
        for r in range(n):
            lhs = psi_apply(R, F, R.mult[s][r])
            rhs = psi_apply(R, F, R.product(theta.column(r), {s: f.one}))
            if lhs != rhs:
                ok, wit = False, (R.basis[s], R.basis[r])
                break
        if not ok:
            break
    rep.add("nakayama_twist", ok, wit)

    ok = theta.apply(R.unit) == R.unit
    if ok:
        for i in range(n):
            for j in range(n):
                if theta.apply(R.mult[i][j]) != \
                        R.product(theta.column(i), theta.column(j)):
                    ok = False
                    break
            if not ok:
                break
    rep.add("nakayama_automorphism", ok)

    # Casimir identities: each side is an element of R (x) R.
    def casimir_image(left_map, right_map):
        out = {}
        for p, q, c in F.pairs():
            out = _tensor(f, n, left_map(p), right_map(q), out, c)
        return out

    idv = lambda i: {i: f.one}
    ok, wit = True, None
    for r in range(n):
        br = {r: f.one}
        lhs = casimir_image(lambda p: R.product(br, idv(p)), idv)
        rhs = casimir_image(idv, lambda q: R.product(idv(q), br))
        if lhs != rhs:
            ok, wit = False, R.basis[r]
            break
    rep.add("casimir_centrality", ok, wit)

    ok, wit = True, None
    for r in range(n):
        br = {r: f.one}
        tr = theta.column(r)
        lhs = casimir_image(lambda p: R.product(idv(p), br), idv)
        rhs = casimir_image(idv, lambda q: R.product(tr, idv(q)))
        if lhs != rhs:
            ok, wit = False, R.basis[r]
            break
    rep.add("casimir_twisted_shift", ok, wit)

    lhs = casimir_image(idv, lambda q: theta.column(q))
    rhs = casimir_image(lambda p: theta_inv.column(p), idv)
    rep.add("casimir_conjugate_swap", lhs == rhs)

    lhs = casimir_image(lambda p: theta.column(p), idv)
    mid = {}
    for p, q, c in F.pairs():
        mid = _tensor(f, n, {q: f.one}, {p: f.one}, mid, c)
    rhs = casimir_image(idv, lambda q: theta_inv.column(q))
    rep.add("casimir_flip", lhs == mid == rhs)

    total = {}
    for p, q, c in F.pairs():
        total = vec_add(f, total, vec_scale(f, c, R.mult[p][q]))
    rep.add("separability", total == R.unit)

    # idempotency in R (x) R^op: a_i a_j (x) b_j b_i = a_i (x) b_i
    square = {}
    for p, q, c in F.pairs():
        for p2, q2, c2 in F.pairs():
            square = _tensor(f, n, R.mult[p][p2], R.mult[q2][q], square,
                             f.mul(c, c2))
    target = {}
    for p, q, c in F.pairs():
        target = _tensor(f, n, {p: f.one}, {q: f.one}, target, c)
    rep.add("separability_idempotent", square == target)

    return rep, NakayamaMap(theta, theta_inv)


# ---------------------------------------------------------------------------
# builtin gallery
# ---------------------------------------------------------------------------

def _dense_to_mult(field, table):
    """table[i][j] = dense list of coefficients."""
    return [[{k: v for k, v in enumerate(row) if not field.is_zero(v)}
             for row in inner] for inner in table]


def builtin_frobenius(name, field=None):
    from .fields import QQ
    from fractions import Fraction

    f = field or QQ
    half = f.from_fraction(Fraction(1, 2))
    one, zero = f.one, f.zero

    if name == "Q":
        R = FinAlgebra(f, ["1"], [[{0: one}]], {0: one})
        F = FrobeniusStructure([one], Matrix.from_rows(f, [[one]]))
        return R, F

    if name in ("QxQ", "QxQxQ"):
        n = 2 if name == "QxQ" else 3
        mult = [[({i: one} if i == j else {}) for j in range(n)] for i in range(n)]
        R = FinAlgebra(f, [f"e{i+1}" for i in range(n)], mult,
                       {i: one for i in range(n)})
        frob = Matrix(f, n, n, [{i: one} for i in range(n)])
        F = FrobeniusStructure([one] * n, frob)
        return R, F

    if name == "GroupZ2":
        # basis 1, g with g^2 = 1; psi = 2 * (coefficient of 1)
        mult = [[{0: one}, {1: one}], [{1: one}, {0: one}]]
        R = FinAlgebra(f, ["1", "g"], mult, {0: one})
        frob = Matrix.from_rows(f, [[half, zero], [zero, half]])
        F = FrobeniusStructure([f.from_int(2), zero], frob)
        return R, F

    if name == "Mat2":
        # basis E11, E12, E21, E22; psi = 2 * trace; e = 1/2 sum E_ij (x) E_ji
        idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
        mult = [[{} for _ in range(4)] for _ in range(4)]
        for (a, b), i in idx.items():
            for (c, d), j in idx.items():
                if b == c:
                    mult[i][j] = {idx[(a, d)]: one}
        R = FinAlgebra(f, ["E11", "E12", "E21", "E22"], mult,
                       {idx[(1, 1)]: one, idx[(2, 2)]: one})
        frob = Matrix(f, 4, 4)
        for (a, b), i in idx.items():
            frob.rows[i][idx[(b, a)]] = half
        psi = [zero] * 4
        psi[idx[(1, 1)]] = f.from_int(2)
        psi[idx[(2, 2)]] = f.from_int(2)
        F = FrobeniusStructure(psi, frob)
        return R, F

    raise UnknownName(name)


BUILTIN_FROBENIUS_NAMES = ("Q", "QxQ", "QxQxQ", "GroupZ2", "Mat2")
