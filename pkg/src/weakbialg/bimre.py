"""The duoidal category of bimodules over R (x) R^op, for a separable
Frobenius algebra R.

Both monoidal products are realized as images of explicit idempotents on
the plain tensor product, split into canonical coordinate spaces; every
structure map is then an exact matrix between coordinate spaces and every
coherence diagram a matrix equality.  Product objects are themselves
bimodules (their actions are induced on representatives), so products can
be nested without ever flattening beyond pairwise tensors; the interchange
map, the only structure map that couples factors across a nesting level,
is computed columnwise on canonical representatives.
"""

from __future__ import annotations

from .frobenius import FinAlgebra, FrobeniusStructure, nakayama
from .linalg import Matrix, split_idempotent, NotIdempotent
from .report import Report


class RMismatch(ValueError):
    pass


class IdempotentFailure(ValueError):
    pass


class FactorizationFailure(ValueError):
    pass


class LawFailure(AssertionError):
    pass


class BaseData:
    """A separable Frobenius algebra bundled with everything the duoidal
    constructions consume: multiplication operators, the Nakayama twist,
    and the Frobenius-element entries."""

    def __init__(self, R, F):
        self.R = R
        self.F = F
        self.field = R.field
        self.dim = R.dim
        nk = nakayama(R, F)
        self.theta = nk.theta
        self.theta_inv = nk.theta_inv
        f = R.field
        self.Lmul = [R.left_mult_matrix({i: f.one}) for i in range(R.dim)]
        self.Rmul = [R.right_mult_matrix({i: f.one}) for i in range(R.dim)]
        self.pairs = list(F.pairs())       # (p, q, coeff) of e = e_i (x) f_i
        self.unit = R.unit

    def psi(self, vec):
        f = self.field
        acc = f.zero
        for i, a in vec.items():
            acc = f.add(acc, f.mul(self.F.psi[i], a))
        return acc


def base_from_builtin(name, field=None):
    from .frobenius import builtin_frobenius

    R, F = builtin_frobenius(name, field)
    return BaseData(R, F)


def base_from_wba(H):
    from .wbacore import base_algebra

    B = base_algebra(H)
    return BaseData(B.algebra, B.frobenius), B


class ReBimodule:
    """Commuting left and right actions of R (x) R^op on a finite space.

    The four generator families give the actions of (b_i (x) 1) and
    (1 (x) b_j) on either side; general elements act by linearity.
    """

    def __init__(self, base, dim, Lfirst, Lsecond, Rfirst, Rsecond, name=""):
        self.base = base
        self.field = base.field
        self.dim = dim
        self.Lfirst = Lfirst
        self.Lsecond = Lsecond
        self.Rfirst = Rfirst
        self.Rsecond = Rsecond
        self.name = name

    def l_op(self, svec, rvec):
        """Left action of (s (x) r)."""
        f = self.field
        out = Matrix(f, self.dim, self.dim)
        for i, a in svec.items():
            for j, b in rvec.items():
                out = out + (self.Lfirst[i] * self.Lsecond[j]).scale(f.mul(a, b))
        return out

    def r_op(self, svec, rvec):
        f = self.field
        out = Matrix(f, self.dim, self.dim)
        for i, a in svec.items():
            for j, b in rvec.items():
                out = out + (self.Rfirst[i] * self.Rsecond[j]).scale(f.mul(a, b))
        return out

    def validate(self):
        rep = Report(f"bimodule laws ({self.name})")
        f = self.field
        b = self.base
        r = b.dim
        eye = Matrix.identity(f, self.dim)

        def comb(mats, vec):
            out = Matrix(f, self.dim, self.dim)
            for i, a in vec.items():
                out = out + mats[i].scale(a)
            return out

        rep.add("left_unital",
                comb(self.Lfirst, b.unit) == eye
                and comb(self.Lsecond, b.unit) == eye)
        rep.add("right_unital",
                comb(self.Rfirst, b.unit) == eye
                and comb(self.Rsecond, b.unit) == eye)

        ok = True
        for i in range(r):
            for j in range(r):
                if self.Lfirst[i] * self.Lfirst[j] != comb(self.Lfirst, b.R.mult[i][j]) \
                        or self.Lsecond[i] * self.Lsecond[j] != comb(self.Lsecond, b.R.mult[j][i]) \
                        or self.Rfirst[i] * self.Rfirst[j] != comb(self.Rfirst, b.R.mult[j][i]) \
                        or self.Rsecond[i] * self.Rsecond[j] != comb(self.Rsecond, b.R.mult[i][j]):
                    ok = False
        rep.add("action_multiplicativity", ok)

        ok = True
        for i in range(r):
            for j in range(r):
                if self.Lfirst[i] * self.Lsecond[j] != self.Lsecond[j] * self.Lfirst[i] \
                        or self.Rfirst[i] * self.Rsecond[j] != self.Rsecond[j] * self.Rfirst[i]:
                    ok = False
        rep.add("enveloping_factors_commute", ok)

        ok = True
        for L in (self.Lfirst, self.Lsecond):
            for Rm in (self.Rfirst, self.Rsecond):
                for i in range(r):
                    for j in range(r):
                        if L[i] * Rm[j] != Rm[j] * L[i]:
                            ok = False
        rep.add("left_right_actions_commute", ok)
        return rep


def zero_bimodule(base):
    return ReBimodule(base, 0, *[[Matrix(base.field, 0, 0)] * base.dim
                                 for _ in range(4)], name="0")


def unit_circ_object(base):
    """I = R (x) R^op acting on itself by multiplication."""
    f = base.field
    r = base.dim
    eye = Matrix.identity(f, r)
    Lfirst = [base.Lmul[i].kron(eye) for i in range(r)]
    Lsecond = [eye.kron(base.Rmul[j]) for j in range(r)]
    Rfirst = [base.Rmul[i].kron(eye) for i in range(r)]
    Rsecond = [eye.kron(base.Lmul[j]) for j in range(r)]
    return ReBimodule(base, r * r, Lfirst, Lsecond, Rfirst, Rsecond, name="I")


def unit_bullet_object(base):
    """J: the carrier R (x) R with the Nakayama-twisted actions."""
    f = base.field
    r = base.dim
    eye = Matrix.identity(f, r)
    # (s (x) r) . (x (x) y) = x (x) s y theta_inv(r)
    Lfirst = [eye.kron(base.Lmul[i]) for i in range(r)]
    Lsecond = []
    for j in range(r):
        m = Matrix(f, r, r)
        for i, c in base.theta_inv.column(j).items():
            m = m + base.Rmul[i].scale(c)
        Lsecond.append(eye.kron(m))
    # (x (x) y) . (s (x) r) = r x s (x) y
    Rfirst = [base.Rmul[i].kron(eye) for i in range(r)]
    Rsecond = [base.Lmul[j].kron(eye) for j in range(r)]
    return ReBimodule(base, r * r, Lfirst, Lsecond, Rfirst, Rsecond, name="J")


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------

class BimProduct(ReBimodule):
    def __init__(self, flavor, M, N, inject, project, idem, actions, name=""):
        super().__init__(M.base, inject.ncols, *actions, name=name)
        self.flavor = flavor
        self.M = M
        self.N = N
        self.inject = inject
        self.project = project
        self.idem = idem


def _induced(project, inject, full_ops):
    return [project * (op * inject) for op in full_ops]


def bimre_circ(M, N):
    """M tensored over the enveloping algebra with N, as the image of the
    idempotent m (x) n -> m (e_i (x) f_j) (x) (f_i (x) e_j) n."""
    if M.base is not N.base:
        raise RMismatch("bimodules over different base algebras")
    f = M.field
    b = M.base
    E = Matrix(f, M.dim * N.dim, M.dim * N.dim)
    for p, q, c in b.pairs:
        for p2, q2, c2 in b.pairs:
            left = M.Rfirst[p] * M.Rsecond[q2]
            right = N.Lfirst[q] * N.Lsecond[p2]
            E = E + left.kron(right).scale(f.mul(c, c2))
    try:
        inject, project = split_idempotent(E)
    except NotIdempotent as exc:
        raise IdempotentFailure(str(exc)) from exc
    eyeM = Matrix.identity(f, M.dim)
    eyeN = Matrix.identity(f, N.dim)
    acts = (
        _induced(project, inject, [M.Lfirst[i].kron(eyeN) for i in range(b.dim)]),
        _induced(project, inject, [M.Lsecond[i].kron(eyeN) for i in range(b.dim)]),
        _induced(project, inject, [eyeM.kron(N.Rfirst[i]) for i in range(b.dim)]),
        _induced(project, inject, [eyeM.kron(N.Rsecond[i]) for i in range(b.dim)]),
    )
    return BimProduct("circ", M, N, inject, project, E, acts,
                      name=f"({M.name}o{N.name})")


def bimre_bullet(M, N):
    """The Nakayama-twisted product: image of the idempotent
    m (x) n -> (e_i (x) 1) m (e_j (x) 1) (x) (1 (x) f_i) n (1 (x) f_j)."""
    if M.base is not N.base:
        raise RMismatch("bimodules over different base algebras")
    f = M.field
    b = M.base
    E = Matrix(f, M.dim * N.dim, M.dim * N.dim)
    for p, q, c in b.pairs:
        for p2, q2, c2 in b.pairs:
            left = M.Lfirst[p] * M.Rfirst[p2]
            right = N.Lsecond[q] * N.Rsecond[q2]
            E = E + left.kron(right).scale(f.mul(c, c2))
    try:
        inject, project = split_idempotent(E)
    except NotIdempotent as exc:
        raise IdempotentFailure(str(exc)) from exc
    eyeM = Matrix.identity(f, M.dim)
    eyeN = Matrix.identity(f, N.dim)
    acts = (
        _induced(project, inject, [eyeM.kron(N.Lfirst[i]) for i in range(b.dim)]),
        _induced(project, inject, [M.Lsecond[i].kron(eyeN) for i in range(b.dim)]),
        _induced(project, inject, [eyeM.kron(N.Rfirst[i]) for i in range(b.dim)]),
        _induced(project, inject, [M.Rsecond[i].kron(eyeN) for i in range(b.dim)]),
    )
    return BimProduct("bullet", M, N, inject, project, E, acts,
                      name=f"({M.name}*{N.name})")


class ProductCache:
    def __init__(self):
        self.cache = {}

    def circ(self, M, N):
        key = ("circ", id(M), id(N))
        if key not in self.cache:
            self.cache[key] = bimre_circ(M, N)
        return self.cache[key]

    def bullet(self, M, N):
        key = ("bullet", id(M), id(N))
        if key not in self.cache:
            self.cache[key] = bimre_bullet(M, N)
        return self.cache[key]


# ---------------------------------------------------------------------------
# structure maps
# ---------------------------------------------------------------------------

def lambda_circ(P):
    """I o M -> M: act with the enveloping-algebra element."""
    M = P.N
    f = M.field
    r = P.base.dim
    flat = Matrix(f, M.dim, r * r * M.dim)
    for u in range(r):
        for v in range(r):
            op = M.Lfirst[u] * M.Lsecond[v]
            for col in range(M.dim):
                dest = (u * r + v) * M.dim + col
                for row, val in op.column(col).items():
                    flat.rows[row][dest] = val
    return flat * P.inject


def rho_circ(P):
    """M o I -> M."""
    M = P.M
    f = M.field
    r = P.base.dim
    flat = Matrix(f, M.dim, M.dim * r * r)
    for u in range(r):
        for v in range(r):
            op = M.Rfirst[u] * M.Rsecond[v]
            for col in range(M.dim):
                dest = col * r * r + (u * r + v)
                for row, val in op.column(col).items():
                    flat.rows[row][dest] = val
    return flat * P.inject


def lambda_bullet(P):
    """J * M -> M: (x (x) y) * m -> (1 (x) theta(y)) m (1 (x) x)."""
    M = P.N
    b = P.base
    f = M.field
    r = b.dim
    flat = Matrix(f, M.dim, r * r * M.dim)
    for u in range(r):
        for v in range(r):
            op = Matrix(f, M.dim, M.dim)
            for j, c in b.theta.column(v).items():
                op = op + M.Lsecond[j].scale(c)
            op = op * M.Rsecond[u]
            for col in range(M.dim):
                dest = (u * r + v) * M.dim + col
                for row, val in op.column(col).items():
                    flat.rows[row][dest] = val
    return flat * P.inject


def rho_bullet(P):
    """M * J -> M: m * (x (x) y) -> (y (x) 1) m (x (x) 1)."""
    M = P.M
    f = M.field
    r = P.base.dim
    flat = Matrix(f, M.dim, M.dim * r * r)
    for u in range(r):
        for v in range(r):
            op = M.Lfirst[v] * M.Rfirst[u]
            for col in range(M.dim):
                dest = col * r * r + (u * r + v)
                for row, val in op.column(col).items():
                    flat.rows[row][dest] = val
    return flat * P.inject


def tau_map(base):
    """I -> J: x (x) y -> y f_i (x) x e_i."""
    f = base.field
    r = base.dim
    out = Matrix(f, r * r, r * r)
    for u in range(r):
        for v in range(r):
            col = u * r + v
            for p, q, c in base.pairs:
                first = base.R.mult[v][q]
                second = base.R.mult[u][p]
                for i, a in first.items():
                    for j, bb in second.items():
                        dest = i * r + j
                        val = f.add(out.entry(dest, col),
                                    f.mul(c, f.mul(a, bb)))
                        if f.is_zero(val):
                            out.rows[dest].pop(col, None)
                        else:
                            out.rows[dest][col] = val
    return out


def mu_J_map(PJJ):
    """J o J -> J: (x (x) y) o (p (x) q) -> psi(x q) p (x) y."""
    b = PJJ.base
    f = b.field
    r = b.dim
    flat = Matrix(f, r * r, r * r * r * r)
    for u in range(r):
        for v in range(r):
            for w in range(r):
                for z in range(r):
                    col = (u * r + v) * r * r + (w * r + z)
                    c = b.psi(b.R.mult[u][z])
                    if f.is_zero(c):
                        continue
                    flat.rows[w * r + v][col] = c
    return flat * PJJ.inject


def delta_I_map(PII):
    """I -> I * I: x (x) y -> (1 (x) y) * (x (x) 1)."""
    b = PII.base
    f = b.field
    r = b.dim
    flat = Matrix(f, r * r * r * r, r * r)
    for u in range(r):
        for v in range(r):
            col = u * r + v
            for p, a in b.unit.items():
                for q, bb in b.unit.items():
                    dest = (p * r + v) * r * r + (u * r + q)
                    flat.rows[dest][col] = f.mul(a, bb)
    return PII.project * flat


def mor_circ(fm, gm, Pdom, Pcod):
    return Pcod.project * (fm.kron(gm) * Pdom.inject)


mor_bullet = mor_circ


def alpha_map(PAB, Pleft, PBC, Pright, A_dim, C_dim):
    """(A x B) x C -> A x (B x C) through canonical representatives; works
    for either flavor (pass the matching products)."""
    f = PAB.field
    eyeA = Matrix.identity(f, A_dim)
    eyeC = Matrix.identity(f, C_dim)
    return Pright.project * (eyeA.kron(PBC.project)
                             * (PAB.inject.kron(eyeC) * Pleft.inject))


def gamma_map(PAB, PCD, Pdom, PAC, PBD, Pcod):
    """(A*B)o(C*D) -> (AoC)*(BoD):
    (a*b)o(c*d) -> (a(e_i (x) 1) o c) * (b o (1 (x) f_i) d)."""
    A, B = PAB.M, PAB.N
    C, D = PCD.M, PCD.N
    b = PAB.base
    f = PAB.field
    dB, dD = B.dim, D.dim
    dAC = A.dim * C.dim
    dBD = B.dim * D.dim
    PACt = PAC.project.transpose()
    PBDt = PBD.project.transpose()

    x1cache = {}
    x2cache = {}

    def x1(p, i_ab):
        key = (p, i_ab)
        if key not in x1cache:
            vec = PAB.inject.column(i_ab)
            out = {}
            op = A.Rfirst[p]
            for k, val in vec.items():
                ia, ib = divmod(k, dB)
                for row, m in op.column(ia).items():
                    kk = row * dB + ib
                    s = f.add(out.get(kk, f.zero), f.mul(m, val))
                    if f.is_zero(s):
                        out.pop(kk, None)
                    else:
                        out[kk] = s
            x1cache[key] = out
        return x1cache[key]

    def x2(q, j_cd):
        key = (q, j_cd)
        if key not in x2cache:
            vec = PCD.inject.column(j_cd)
            out = {}
            op = D.Lsecond[q]
            for k, val in vec.items():
                ic, idd = divmod(k, dD)
                for row, m in op.column(idd).items():
                    kk = ic * dD + row
                    s = f.add(out.get(kk, f.zero), f.mul(m, val))
                    if f.is_zero(s):
                        out.pop(kk, None)
                    else:
                        out[kk] = s
            x2cache[key] = out
        return x2cache[key]

    cols = []
    for col in range(Pdom.dim):
        rep = Pdom.inject.column(col)
        # accumulate in (A o C)-coords x (B o D)-coords directly
        acc = {}
        for k, coeff in rep.items():
            i_ab, j_cd = divmod(k, PCD.dim)
            for p, q, c in b.pairs:
                cc = f.mul(coeff, c)
                v1 = x1(p, i_ab)
                v2 = x2(q, j_cd)
                # project each leg while contracting
                left = {}
                for kk, val in v1.items():
                    ia, ib = divmod(kk, dB)
                    for kc, vc in v2.items():
                        ic, idd = divmod(kc, dD)
                        keyq = (ia * C.dim + ic, ib * D.dim + idd)
                        s = f.add(left.get(keyq, f.zero), f.mul(val, vc))
                        if f.is_zero(s):
                            left.pop(keyq, None)
                        else:
                            left[keyq] = s
                for (kac, kbd), val in left.items():
                    val = f.mul(cc, val)
                    for r1, a1 in PACt.rows[kac].items():
                        va1 = f.mul(val, a1)
                        for r2, a2 in PBDt.rows[kbd].items():
                            dest = r1 * PBD.dim + r2
                            s = f.add(acc.get(dest, f.zero),
                                      f.mul(va1, a2))
                            if f.is_zero(s):
                                acc.pop(dest, None)
                            else:
                                acc[dest] = s
        cols.append(Pcod.project.apply(acc))
    return Matrix.from_columns(PAB.field, Pcod.dim, cols)


def is_bimodule_map(fm, Mdom, Mcod):
    r = Mdom.base.dim
    for i in range(r):
        if fm * Mdom.Lfirst[i] != Mcod.Lfirst[i] * fm \
                or fm * Mdom.Lsecond[i] != Mcod.Lsecond[i] * fm \
                or fm * Mdom.Rfirst[i] != Mcod.Rfirst[i] * fm \
                or fm * Mdom.Rsecond[i] != Mcod.Rsecond[i] * fm:
            return False
    return True


# ---------------------------------------------------------------------------
# the coherence suite
# ---------------------------------------------------------------------------

def bimre_duoidal_suite(base, samples, report=None):
    rep = report or Report("bimodule duoidal coherence")
    f = base.field
    cache = ProductCache()
    I = unit_circ_object(base)
    J = unit_bullet_object(base)

    for obj in [I, J] + list(samples):
        sub = obj.validate()
        rep.add(f"object_valid[{obj.name}]", sub.ok,
                [c.name for c in sub.failures()] or None)

    rep.add("circ_idempotent_exact", cache.circ(I, I).idem.is_idempotent())
    rep.add("bullet_idempotent_exact", cache.bullet(I, I).idem.is_idempotent())

    # comonoid structure on I
    PII = cache.bullet(I, I)
    dI = delta_I_map(PII)
    tu = tau_map(base)
    rep.add("unit_comultiplication_bimodule_map", is_bimodule_map(dI, I, PII))
    rep.add("tau_bimodule_map", is_bimodule_map(tu, I, J))

    P_II_I = cache.bullet(PII, I)
    P_I_II = cache.bullet(I, PII)
    alpha_b = alpha_map(PII, P_II_I, PII, P_I_II, I.dim, I.dim)
    lhs = alpha_b * (mor_bullet(dI, Matrix.identity(f, I.dim), PII, P_II_I) * dI)
    rhs = mor_bullet(Matrix.identity(f, I.dim), dI, PII, P_I_II) * dI
    rep.add("unit_comonoid_coassociative", lhs == rhs)

    PJI = cache.bullet(J, I)
    PIJ = cache.bullet(I, J)
    lam = lambda_bullet(PJI)
    rho = rho_bullet(PIJ)
    rep.add("unit_comonoid_counit_left",
            lam * (mor_bullet(tu, Matrix.identity(f, I.dim), PII, PJI) * dI)
            == Matrix.identity(f, I.dim))
    rep.add("unit_comonoid_counit_right",
            rho * (mor_bullet(Matrix.identity(f, I.dim), tu, PII, PIJ) * dI)
            == Matrix.identity(f, I.dim))

    # monoid structure on J
    PJJ = cache.circ(J, J)
    mJ = mu_J_map(PJJ)
    rep.add("counit_multiplication_bimodule_map", is_bimodule_map(mJ, PJJ, J))
    P_JJ_J = cache.circ(PJJ, J)
    P_J_JJ = cache.circ(J, PJJ)
    alpha_c = alpha_map(PJJ, P_JJ_J, PJJ, P_J_JJ, J.dim, J.dim)
    lhs = mJ * mor_circ(mJ, Matrix.identity(f, J.dim), P_JJ_J, PJJ)
    rhs = (mJ * mor_circ(Matrix.identity(f, J.dim), mJ, P_J_JJ, PJJ)) * alpha_c
    rep.add("counit_monoid_associative", lhs == rhs)

    PcIJ = cache.circ(I, J)
    PcJI = cache.circ(J, I)
    rep.add("counit_monoid_unit_left",
            mJ * mor_circ(tu, Matrix.identity(f, J.dim), PcIJ, PJJ)
            == lambda_circ(PcIJ))
    rep.add("counit_monoid_unit_right",
            mJ * mor_circ(Matrix.identity(f, J.dim), tu, PcJI, PJJ)
            == rho_circ(PcJI))

    objs = [I, J] + [s for s in samples]

    def pick(i):
        return objs[i % len(objs)]

    tuples = [tuple(pick(b0 + k) for k in range(6))
              for b0 in range(len(objs))]
    tuples += [(s,) * 6 for s in objs]

    for t_idx, (A, B, C, D, E, F6) in enumerate(tuples):
        PAB = cache.bullet(A, B)
        PCD = cache.bullet(C, D)
        dom = cache.circ(PAB, PCD)
        PAC = cache.circ(A, C)
        PBD = cache.circ(B, D)
        cod = cache.bullet(PAC, PBD)
        g = gamma_map(PAB, PCD, dom, PAC, PBD, cod)
        rep.add(f"interchange_bimodule_map[{t_idx}]",
                is_bimodule_map(g, dom, cod))

        # unit compatibility diagrams
        dom1 = cache.circ(I, PAB)
        gu = gamma_map(PII, PAB, cache.circ(PII, PAB), cache.circ(I, A),
                       cache.circ(I, B), cache.bullet(cache.circ(I, A),
                                                      cache.circ(I, B)))
        lhs = mor_bullet(lambda_circ(cache.circ(I, A)),
                         lambda_circ(cache.circ(I, B)),
                         cache.bullet(cache.circ(I, A), cache.circ(I, B)),
                         PAB) * (gu * mor_circ(
                             dI, Matrix.identity(f, PAB.dim), dom1,
                             cache.circ(PII, PAB)))
        rep.add(f"unit_compat_left_circ[{t_idx}]",
                lhs == lambda_circ(dom1))

        dom2 = cache.circ(PAB, I)
        gu = gamma_map(PAB, PII, cache.circ(PAB, PII), cache.circ(A, I),
                       cache.circ(B, I), cache.bullet(cache.circ(A, I),
                                                      cache.circ(B, I)))
        lhs = mor_bullet(rho_circ(cache.circ(A, I)),
                         rho_circ(cache.circ(B, I)),
                         cache.bullet(cache.circ(A, I), cache.circ(B, I)),
                         PAB) * (gu * mor_circ(
                             Matrix.identity(f, PAB.dim), dI, dom2,
                             cache.circ(PAB, PII)))
        rep.add(f"unit_compat_right_circ[{t_idx}]",
                lhs == rho_circ(dom2))

        PJA = cache.bullet(J, A)
        PJB = cache.bullet(J, B)
        dom3 = cache.circ(PJA, PJB)
        PAB_c = cache.circ(A, B)
        gu = gamma_map(PJA, PJB, dom3, PJJ, PAB_c,
                       cache.bullet(PJJ, PAB_c))
        lhs = lambda_bullet(cache.bullet(J, PAB_c)) * (
            mor_bullet(mJ, Matrix.identity(f, PAB_c.dim),
                       cache.bullet(PJJ, PAB_c),
                       cache.bullet(J, PAB_c)) * gu)
        rhs = mor_circ(lambda_bullet(PJA), lambda_bullet(PJB), dom3, PAB_c)
        rep.add(f"unit_compat_left_bullet[{t_idx}]", lhs == rhs)

        PAJ = cache.bullet(A, J)
        PBJ = cache.bullet(B, J)
        dom4 = cache.circ(PAJ, PBJ)
        gu = gamma_map(PAJ, PBJ, dom4, PAB_c, PJJ,
                       cache.bullet(PAB_c, PJJ))
        lhs = rho_bullet(cache.bullet(PAB_c, J)) * (
            mor_bullet(Matrix.identity(f, PAB_c.dim), mJ,
                       cache.bullet(PAB_c, PJJ),
                       cache.bullet(PAB_c, J)) * gu)
        rhs = mor_circ(rho_bullet(PAJ), rho_bullet(PBJ), dom4, PAB_c)
        rep.add(f"unit_compat_right_bullet[{t_idx}]", lhs == rhs)

        # interchange associativity, circ direction
        PEF = cache.bullet(E, F6)
        big = cache.circ(dom, PEF)
        PACE = cache.circ(PAC, E)
        PBDF = cache.circ(PBD, F6)
        g2 = gamma_map(cod, PEF, cache.circ(cod, PEF), PACE, PBDF,
                       cache.bullet(PACE, PBDF))
        PCE = cache.circ(C, E)
        PDF = cache.circ(D, F6)
        P_A_CE = cache.circ(A, PCE)
        P_B_DF = cache.circ(B, PDF)
        aA = alpha_map(PAC, PACE, PCE, P_A_CE, A.dim, E.dim)
        aB = alpha_map(PBD, PBDF, PDF, P_B_DF, B.dim, F6.dim)
        lhs = mor_bullet(aA, aB, cache.bullet(PACE, PBDF),
                         cache.bullet(P_A_CE, P_B_DF)) * (
            g2 * mor_circ(g, Matrix.identity(f, PEF.dim), big,
                          cache.circ(cod, PEF)))
        mid = cache.circ(PCD, PEF)
        g3 = gamma_map(PCD, PEF, mid, PCE, PDF, cache.bullet(PCE, PDF))
        aO = alpha_map(dom, big, mid, cache.circ(PAB, mid),
                       PAB.dim, PEF.dim)
        g4 = gamma_map(PAB, cache.bullet(PCE, PDF),
                       cache.circ(PAB, cache.bullet(PCE, PDF)),
                       P_A_CE, P_B_DF, cache.bullet(P_A_CE, P_B_DF))
        rhs = g4 * (mor_circ(Matrix.identity(f, PAB.dim), g3,
                             cache.circ(PAB, mid),
                             cache.circ(PAB, cache.bullet(PCE, PDF))) * aO)
        rep.add(f"interchange_circ_associativity[{t_idx}]", lhs == rhs)

        # interchange associativity, bullet direction
        PAB_b = PAB
        PABC = cache.bullet(PAB_b, C)
        PDE = cache.bullet(D, E)
        PDEF = cache.bullet(PDE, F6)
        big2 = cache.circ(PABC, PDEF)
        PAD = cache.circ(A, D)
        PBE = cache.circ(B, E)
        PCF = cache.circ(C, F6)
        g5 = gamma_map(PABC, PDEF, big2, cache.circ(PAB_b, PDE), PCF,
                       cache.bullet(cache.circ(PAB_b, PDE), PCF))
        g6 = gamma_map(PAB_b, PDE, cache.circ(PAB_b, PDE), PAD, PBE,
                       cache.bullet(PAD, PBE))
        lhs = alpha_map(cache.bullet(PAD, PBE),
                        cache.bullet(cache.bullet(PAD, PBE), PCF),
                        cache.bullet(PBE, PCF),
                        cache.bullet(PAD, cache.bullet(PBE, PCF)),
                        PAD.dim, PCF.dim) * (
            mor_bullet(g6, Matrix.identity(f, PCF.dim),
                       cache.bullet(cache.circ(PAB_b, PDE), PCF),
                       cache.bullet(cache.bullet(PAD, PBE), PCF)) * g5)
        PBC = cache.bullet(B, C)
        PEF2 = cache.bullet(E, F6)
        aL = alpha_map(PAB_b, PABC, PBC, cache.bullet(A, PBC),
                       A.dim, C.dim)
        aR = alpha_map(PDE, PDEF, PEF2, cache.bullet(D, PEF2),
                       D.dim, F6.dim)
        dom5 = cache.circ(cache.bullet(A, PBC), cache.bullet(D, PEF2))
        g7 = gamma_map(cache.bullet(A, PBC), cache.bullet(D, PEF2), dom5,
                       PAD, cache.circ(PBC, PEF2),
                       cache.bullet(PAD, cache.circ(PBC, PEF2)))
        g8 = gamma_map(PBC, PEF2, cache.circ(PBC, PEF2), PBE, PCF,
                       cache.bullet(PBE, PCF))
        rhs = mor_bullet(Matrix.identity(f, PAD.dim), g8,
                         cache.bullet(PAD, cache.circ(PBC, PEF2)),
                         cache.bullet(PAD, cache.bullet(PBE, PCF))) * (
            g7 * mor_circ(aL, aR, big2, dom5))
        rep.add(f"interchange_bullet_associativity[{t_idx}]", lhs == rhs)
    return rep


# ---------------------------------------------------------------------------
# sample bimodules
# ---------------------------------------------------------------------------

def algebra_characters(R):
    """Algebra maps R -> k of a commutative algebra, as eigenvalue tuples
    on the chosen basis.  Empty for non-commutative input."""
    from .linalg import char_poly, kernel_basis, solve_matrix
    from .functors import _field_roots

    f = R.field
    n = R.dim
    for i in range(n):
        for j in range(i + 1, n):
            if R.mult[i][j] != R.mult[j][i]:
                return []
    ops = [R.left_mult_matrix({i: f.one}).transpose() for i in range(n)]
    leaves = [(Matrix.identity(f, n), [])]
    for i in range(n):
        nxt = []
        for W, mus in leaves:
            X = solve_matrix(W, ops[i] * W)
            if X is None:
                continue
            for mu in _field_roots(f, char_poly(X)):
                kb = kernel_basis(X - Matrix.identity(f, X.nrows).scale(mu))
                if kb:
                    nxt.append((W * Matrix.from_columns(f, W.ncols, kb),
                                mus + [mu]))
        leaves = nxt
    chars, seen = [], set()
    for _, mus in leaves:
        s = f.zero
        for k, c in R.unit.items():
            s = f.add(s, f.mul(c, mus[k]))
        if s != f.one:
            continue
        ok = True
        for i in range(n):
            for j in range(n):
                s = f.zero
                for k, c in R.mult[i][j].items():
                    s = f.add(s, f.mul(c, mus[k]))
                if s != f.mul(mus[i], mus[j]):
                    ok = False
        if ok and tuple(mus) not in seen:
            seen.add(tuple(mus))
            chars.append(list(mus))
    return chars


def random_bimodule(base, rng, max_dim=3):
    """A random bimodule of dimension at most max_dim.

    For a commutative base every small bimodule is a sum of character
    lines, so we draw four character indices per basis line.  For a
    non-commutative base (matrix algebras) no nonzero bimodule of such a
    small dimension exists and the zero module is returned.
    """
    chars = algebra_characters(base.R)
    if not chars:
        return zero_bimodule(base)
    f = base.field
    d = rng.randint(1, max_dim)
    assign = [[rng.randrange(len(chars)) for _ in range(4)] for _ in range(d)]

    def diag(slot, i):
        m = Matrix(f, d, d)
        for v in range(d):
            val = chars[assign[v][slot]][i]
            if not f.is_zero(val):
                m.rows[v][v] = val
        return m

    r = base.dim
    return ReBimodule(base, d,
                      [diag(0, i) for i in range(r)],
                      [diag(1, i) for i in range(r)],
                      [diag(2, i) for i in range(r)],
                      [diag(3, i) for i in range(r)],
                      name=f"V{d}")


# ---------------------------------------------------------------------------
# the dictionary: weak bialgebras <-> bimonoids over their base
# ---------------------------------------------------------------------------

class WbaBimonoid:
    """A bimonoid in the duoidal category over the base R: carrier
    bimodule plus the four structure matrices in product coordinates."""

    def __init__(self, base, carrier, cache, PHHc, PHHb, mult, unit,
                 comult, counit, basis_names):
        self.base = base
        self.field = base.field
        self.carrier = carrier
        self.cache = cache
        self.PHHc = PHHc        # carrier o carrier
        self.PHHb = PHHb        # carrier * carrier
        self.mult = mult        # PHHc-coords -> carrier
        self.unit = unit        # I-coords -> carrier
        self.comult = comult    # carrier -> PHHb-coords
        self.counit = counit    # carrier -> J-coords
        self.basis_names = basis_names


def wba_to_bimonoid(H, baseinfo=None):
    """Repackage a validated weak bialgebra as a bimonoid over its base."""
    from .wbacore import base_algebra, counital_maps

    H.require_validated()
    f = H.field
    n = H.dim
    B = baseinfo or base_algebra(H)
    base = BaseData(B.algebra, B.frobenius)
    pi = counital_maps(H)

    w = [B.inject.column(i) for i in range(base.dim)]
    wbar = [pi.piLbar.apply(v) for v in w]
    alg = H.algebra
    Ht = ReBimodule(
        base, n,
        [alg.left_mult_matrix(v) for v in w],
        [alg.left_mult_matrix(v) for v in wbar],
        [alg.right_mult_matrix(v) for v in w],
        [alg.right_mult_matrix(v) for v in wbar],
        name="H")

    cache = ProductCache()
    PHHc = cache.circ(Ht, Ht)
    PHHb = cache.bullet(Ht, Ht)

    mult_full = Matrix.from_columns(
        f, n, [H.mult[i][j] for i in range(n) for j in range(n)])
    mu = mult_full * PHHc.inject

    Dfull = H.delta_matrix()
    if PHHb.idem * Dfull != Dfull:
        raise FactorizationFailure(
            "comultiplication does not factor through the twisted product")
    delta = PHHb.project * Dfull

    PR = B.project * pi.piR
    PRb = B.project * pi.piRbar
    eps = PR.kron(PRb) * Dfull

    r = base.dim
    eta_cols = []
    for i in range(r):
        for j in range(r):
            eta_cols.append(alg.product(w[i], wbar[j]))
    eta = Matrix.from_columns(f, n, eta_cols)

    return WbaBimonoid(base, Ht, cache, PHHc, PHHb, mu, eta, delta, eps,
                       list(H.basis))


def check_bimonoid(bm):
    """Monoid, comonoid and the four compatibility diagrams."""
    rep = Report("bimonoid laws")
    base = bm.base
    f = bm.field
    cache = bm.cache
    Ht = bm.carrier
    I = unit_circ_object(base)
    J = unit_bullet_object(base)
    eye = Matrix.identity(f, Ht.dim)

    sub = Ht.validate()
    rep.add("carrier_is_bimodule", sub.ok,
            [c.name for c in sub.failures()] or None)
    rep.add("multiplication_bimodule_map",
            is_bimodule_map(bm.mult, bm.PHHc, Ht))
    rep.add("unit_bimodule_map", is_bimodule_map(bm.unit, I, Ht))
    rep.add("comultiplication_bimodule_map",
            is_bimodule_map(bm.comult, Ht, bm.PHHb))
    rep.add("counit_bimodule_map", is_bimodule_map(bm.counit, Ht, J))

    PHH_H = cache.circ(bm.PHHc, Ht)
    PH_HH = cache.circ(Ht, bm.PHHc)
    a_c = alpha_map(bm.PHHc, PHH_H, bm.PHHc, PH_HH, Ht.dim, Ht.dim)
    rep.add("monoid_associative",
            bm.mult * mor_circ(bm.mult, eye, PHH_H, bm.PHHc)
            == (bm.mult * mor_circ(eye, bm.mult, PH_HH, bm.PHHc)) * a_c)

    PIH = cache.circ(I, Ht)
    PHI = cache.circ(Ht, I)
    rep.add("monoid_unit_left",
            bm.mult * mor_circ(bm.unit, eye, PIH, bm.PHHc)
            == lambda_circ(PIH))
    rep.add("monoid_unit_right",
            bm.mult * mor_circ(eye, bm.unit, PHI, bm.PHHc)
            == rho_circ(PHI))

    PHHb_H = cache.bullet(bm.PHHb, Ht)
    PH_HHb = cache.bullet(Ht, bm.PHHb)
    a_b = alpha_map(bm.PHHb, PHHb_H, bm.PHHb, PH_HHb, Ht.dim, Ht.dim)
    rep.add("comonoid_coassociative",
            a_b * (mor_bullet(bm.comult, eye, bm.PHHb, PHHb_H) * bm.comult)
            == mor_bullet(eye, bm.comult, bm.PHHb, PH_HHb) * bm.comult)

    PJH = cache.bullet(J, Ht)
    PHJ = cache.bullet(Ht, J)
    rep.add("comonoid_counit_left",
            lambda_bullet(PJH)
            * (mor_bullet(bm.counit, eye, bm.PHHb, PJH) * bm.comult) == eye)
    rep.add("comonoid_counit_right",
            rho_bullet(PHJ)
            * (mor_bullet(eye, bm.counit, bm.PHHb, PHJ) * bm.comult) == eye)

    Pbb = cache.circ(bm.PHHb, bm.PHHb)
    Pcc = cache.bullet(bm.PHHc, bm.PHHc)
    g = gamma_map(bm.PHHb, bm.PHHb, Pbb, bm.PHHc, bm.PHHc, Pcc)
    rep.add("comultiplication_of_product",
            bm.comult * bm.mult
            == mor_bullet(bm.mult, bm.mult, Pcc, bm.PHHb)
            * (g * mor_circ(bm.comult, bm.comult, bm.PHHc, Pbb)))

    PJJ = cache.circ(J, J)
    rep.add("counit_of_product",
            bm.counit * bm.mult
            == mu_J_map(PJJ) * mor_circ(bm.counit, bm.counit, bm.PHHc, PJJ))

    PII = cache.bullet(I, I)
    rep.add("comultiplication_of_unit",
            bm.comult * bm.unit
            == mor_bullet(bm.unit, bm.unit, PII, bm.PHHb) * delta_I_map(PII))
    rep.add("counit_of_unit", bm.counit * bm.unit == tau_map(base))
    return rep


def bimonoid_to_wba(bm, name=""):
    """Rebuild the weak bialgebra structure constants from a bimonoid."""
    from .wbacore import WeakBialgebra, check_weak_bialgebra

    f = bm.field
    n = bm.carrier.dim
    r = bm.base.dim
    mult_full = bm.mult * bm.PHHc.project
    mult = [[mult_full.column(i * n + j) for j in range(n)]
            for i in range(n)]
    unit_I = {}
    for p, a in bm.base.unit.items():
        for q, b in bm.base.unit.items():
            unit_I[p * r + q] = f.mul(a, b)
    unit = bm.unit.apply(unit_I)
    Dfull = bm.PHHb.inject * bm.comult
    comult = [Dfull.column(i) for i in range(n)]
    counit = []
    for i in range(n):
        acc = f.zero
        for k, c in bm.counit.column(i).items():
            p, q = divmod(k, r)
            acc = f.add(acc, f.mul(c, f.mul(bm.base.F.psi[p],
                                            bm.base.F.psi[q])))
        counit.append(acc)
    H = WeakBialgebra(f, bm.basis_names, mult, unit, comult, counit,
                      name=name)
    rep = check_weak_bialgebra(H)
    if not rep.ok:
        raise LawFailure("reconstructed structure fails the axioms: "
                         + ", ".join(c.name for c in rep.failures()))
    return H


def bimonoid_sigma(bm):
    """sigma(r) = unit(r (x) 1): the canonical map from the base into the
    carrier, landing in the source subalgebra."""
    f = bm.field
    r = bm.base.dim
    cols = []
    for i in range(r):
        vec = {}
        for q, b in bm.base.unit.items():
            vec[i * r + q] = b
        cols.append(bm.unit.apply(vec))
    return Matrix.from_columns(f, bm.carrier.dim, cols)


def duoidal_roundtrip(H, report=None):
    """Both directions of the dictionary, with exact comparisons."""
    rep = report or Report(f"duoidal dictionary round trip ({H.name})")
    bm = wba_to_bimonoid(H)
    sub = check_bimonoid(bm)
    rep.add("bimonoid_laws", sub.ok, [c.name for c in sub.failures()] or None)

    H2 = bimonoid_to_wba(bm, name=H.name)
    rep.add("multiplication_recovered", H2.mult == H.mult)
    rep.add("unit_recovered", H2.unit == H.unit)
    rep.add("comultiplication_recovered", H2.comult == H.comult)
    rep.add("counit_recovered", H2.counit == H.counit)

    bm2 = wba_to_bimonoid(H2)
    from .wbacore import base_algebra
    B2 = base_algebra(H2)
    sig = bimonoid_sigma(bm)
    sigR = B2.project * sig
    rep.add("sigma_into_base_iso",
            sigR.nrows == sigR.ncols and sigR.rank() == sigR.nrows)
    ss = sigR.kron(sigR)
    rep.add("unit_matches_up_to_sigma", bm2.unit * ss == bm.unit)
    rep.add("counit_matches_up_to_sigma", bm2.counit == ss * bm.counit)
    rep.add("product_idempotents_agree",
            bm2.PHHc.idem == bm.PHHc.idem and bm2.PHHb.idem == bm.PHHb.idem)
    rep.add("multiplication_matches",
            bm2.mult * bm2.PHHc.project == bm.mult * bm.PHHc.project)
    rep.add("comultiplication_matches",
            bm2.PHHb.inject * bm2.comult == bm.PHHb.inject * bm.comult)
    return rep
