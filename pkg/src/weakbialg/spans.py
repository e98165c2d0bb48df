"""The duoidal category of spans over a finite set.

Everything here is raw finite sets and maps: both monoidal products are
subsets of the cartesian product, the interchange map is the middle swap,
and each coherence diagram is verified elementwise.  Bimonoids in this
category are exactly small categories; the invertibility of the canonical
beta map singles out the groupoids, and when it is bijective the groupoid
inverse is extracted constructively from preimages.
"""

from __future__ import annotations

import random

from .catgrp import FiniteCategory, FiniteGroupoid
from .report import Report


class BaseMismatch(ValueError):
    pass


class MonoidLawFailure(AssertionError):
    pass


class Span:
    def __init__(self, base, carrier, s, t, name=""):
        self.base = list(base)
        self.carrier = list(carrier)
        self.s = dict(s)
        self.t = dict(t)
        self.name = name

    def __repr__(self):
        return f"Span({self.name or len(self.carrier)})"


def unit_circ(X):
    """The discrete span: identity source and target."""
    return Span(X, list(X), {x: x for x in X}, {x: x for x in X}, name="I")


def unit_bullet(X):
    """The complete span X x X with the two projections."""
    carrier = [(x, y) for x in X for y in X]
    return Span(X, carrier, {c: c[0] for c in carrier},
                {c: c[1] for c in carrier}, name="J")


def span_circ(A, B):
    if set(A.base) != set(B.base):
        raise BaseMismatch("spans live over different bases")
    carrier = [(a, b) for a in A.carrier for b in B.carrier
               if A.s[a] == B.t[b]]
    return Span(A.base, carrier,
                {(a, b): B.s[b] for (a, b) in carrier},
                {(a, b): A.t[a] for (a, b) in carrier})


def span_bullet(A, B):
    if set(A.base) != set(B.base):
        raise BaseMismatch("spans live over different bases")
    carrier = [(a, b) for a in A.carrier for b in B.carrier
               if A.s[a] == B.s[b] and A.t[a] == B.t[b]]
    return Span(A.base, carrier,
                {(a, b): A.s[a] for (a, b) in carrier},
                {(a, b): A.t[a] for (a, b) in carrier})


# structure maps, acting on the literal tuple encodings -----------------------

def gamma(elem):
    """((a, b), (c, d)) -> ((a, c), (b, d))."""
    (a, b), (c, d) = elem
    return ((a, c), (b, d))


def assoc(elem):
    """((x, y), z) -> (x, (y, z)) — both associators act this way."""
    (x, y), z = elem
    return (x, (y, z))


def mu_J(elem):
    """J o J -> J, forced by terminality of J."""
    j1, j2 = elem
    return (j2[0], j1[1])


def tau(x):
    return (x, x)


def delta_I(x):
    return (x, x)


# ---------------------------------------------------------------------------
# the thirteen-diagram suite
# ---------------------------------------------------------------------------

def span_duoidal_suite(X, samples, report=None):
    rep = report or Report("span duoidal coherence")
    I = unit_circ(X)
    J = unit_bullet(X)

    # comonoid structure on I in (bullet, J)
    rep.add("unit_comonoid_coassociative",
            all(assoc(((delta_I(x)[0],) * 2, delta_I(x)[1])) ==
                (delta_I(x)[0], delta_I(delta_I(x)[1]))
                for x in X))
    rep.add("unit_comonoid_counit_left",
            all(_lambda_bullet((tau(x), x)) == x for x in X))
    rep.add("unit_comonoid_counit_right",
            all(_rho_bullet((x, tau(x))) == x for x in X))

    # monoid structure on J in (circ, I)
    JJ = span_circ(J, J)
    JJJ = span_circ(JJ, J)
    rep.add("counit_monoid_associative",
            all(mu_J((mu_J(e[0]), e[1])) == mu_J((e[0][0], mu_J((e[0][1], e[1]))))
                for e in JJJ.carrier))
    IJ = span_circ(I, J)
    JI = span_circ(J, I)
    rep.add("counit_monoid_unit_left",
            all(mu_J((tau(x), j)) == j for (x, j) in IJ.carrier))
    rep.add("counit_monoid_unit_right",
            all(mu_J((j, tau(x))) == j for (j, x) in JI.carrier))

    def pick(i):
        return samples[i % len(samples)]

    # interchange: structure-map and coherence checks on sample tuples
    for base_idx in range(len(samples)):
        A, B, C, D = (pick(base_idx + k) for k in range(4))
        AB = span_bullet(A, B)
        CD = span_bullet(C, D)
        dom = span_circ(AB, CD)
        AC = span_circ(A, C)
        BD = span_circ(B, D)
        cod = span_bullet(AC, BD)
        codset = set(cod.carrier)
        ok = all(gamma(e) in codset
                 and cod.s[gamma(e)] == dom.s[e]
                 and cod.t[gamma(e)] == dom.t[e]
                 for e in dom.carrier)
        if not rep.add(f"interchange_is_span_morphism[{base_idx}]", ok):
            continue

        E, F = pick(base_idx + 4), pick(base_idx + 5)
        # circ-associativity of the interchange
        d2 = span_circ(dom, span_bullet(E, F))
        ok = True
        for e in d2.carrier:
            pair, ef = e
            lhs = tuple(map(assoc, gamma((gamma(pair), ef))))
            x, y = assoc(e)[0], assoc(e)[1]
            inner = gamma(y)
            rhs = gamma((x, inner))
            if lhs != rhs:
                ok = False
                break
        rep.add(f"interchange_circ_associativity[{base_idx}]", ok)

        # bullet-associativity of the interchange
        d3 = span_circ(span_bullet(AB, C), span_bullet(span_bullet(D, E), F))
        ok = True
        for e in d3.carrier:
            g1 = gamma(e)
            lhs = assoc((gamma(g1[0]), g1[1]))
            u, v = e
            rhs0 = gamma((assoc(u), assoc(v)))
            rhs = (rhs0[0], gamma(rhs0[1]))
            if lhs != rhs:
                ok = False
                break
        rep.add(f"interchange_bullet_associativity[{base_idx}]", ok)

        # four unit-compatibility diagrams
        IAB = span_circ(I, AB)
        ok = all((lambda x_ab: tuple(p[1] for p in gamma(
            (delta_I(x_ab[0]), x_ab[1]))) == x_ab[1])(e)
            for e in IAB.carrier)
        rep.add(f"unit_compat_left_circ[{base_idx}]", ok)

        ABI = span_circ(AB, I)
        ok = all(tuple(p[0] for p in gamma((e[0], delta_I(e[1])))) == e[0]
                 for e in ABI.carrier)
        rep.add(f"unit_compat_right_circ[{base_idx}]", ok)

        JA_JB = span_circ(span_bullet(J, A), span_bullet(J, B))
        ok = True
        for e in JA_JB.carrier:
            g = gamma(e)          # ((j1, j2), (a, b))
            lhs = g[1]            # lambda-bullet after (mu_J bullet id)
            rhs = (_lambda_bullet(e[0]), _lambda_bullet(e[1]))
            if lhs != rhs:
                ok = False
                break
        rep.add(f"unit_compat_left_bullet[{base_idx}]", ok)

        AJ_BJ = span_circ(span_bullet(A, J), span_bullet(B, J))
        ok = True
        for e in AJ_BJ.carrier:
            g = gamma(e)          # ((a, b), (j1, j2))
            lhs = g[0]
            rhs = (_rho_bullet(e[0]), _rho_bullet(e[1]))
            if lhs != rhs:
                ok = False
                break
        rep.add(f"unit_compat_right_bullet[{base_idx}]", ok)
    return rep


def _lambda_bullet(elem):
    """(j, a) in J bullet A -> a."""
    return elem[1]


def _rho_bullet(elem):
    """(a, j) in A bullet J -> a."""
    return elem[0]


def random_span(X, rng, max_size=4, tag=""):
    size = rng.randint(0, max_size)
    carrier = [f"{tag}m{i}" for i in range(size)]
    return Span(X, carrier,
                {c: rng.choice(X) for c in carrier},
                {c: rng.choice(X) for c in carrier},
                name=tag or "random")


# ---------------------------------------------------------------------------
# bimonoids = small categories
# ---------------------------------------------------------------------------

class SpanBimonoid:
    """A span with a circ-monoid structure (the bullet-comonoid structure
    is the forced diagonal one)."""

    def __init__(self, span, mult, unit):
        self.span = span
        self.mult = dict(mult)      # (a, b) with s(a)=t(b) -> a.b
        self.unit = dict(unit)      # x in X -> identity element


def check_span_bimonoid(M):
    rep = Report("span bimonoid laws")
    A = M.span
    X = A.base
    AA = span_circ(A, A)
    rep.add("multiplication_total_on_composables",
            set(M.mult) == set(AA.carrier))
    rep.add("multiplication_is_span_morphism",
            all(A.s[M.mult[e]] == AA.s[e] and A.t[M.mult[e]] == AA.t[e]
                for e in AA.carrier if e in M.mult))
    rep.add("unit_is_span_morphism",
            all(A.s[M.unit[x]] == x and A.t[M.unit[x]] == x for x in X
                if x in M.unit) and set(M.unit) == set(X))
    ok = True
    for e in span_circ(AA, A).carrier:
        (a, b), c = e
        if M.mult[(M.mult[(a, b)], c)] != M.mult[(a, M.mult[(b, c)])]:
            ok = False
            break
    rep.add("associativity", ok)
    rep.add("unit_laws",
            all(M.mult[(a, M.unit[A.s[a]])] == a
                and M.mult[(M.unit[A.t[a]], a)] == a for a in A.carrier))

    # compatibility of the two structures (all four diagrams, elementwise)
    ok = True
    for e in AA.carrier:
        a, b = e
        lhs = (M.mult[e], M.mult[e])
        rhs = gamma(((a, a), (b, b)))
        if (M.mult[rhs[0]], M.mult[rhs[1]]) != lhs:
            ok = False
            break
    rep.add("comultiplication_of_product", ok)
    rep.add("counit_of_product",
            all((A.s[M.mult[e]], A.t[M.mult[e]]) == mu_J(
                ((A.s[e[0]], A.t[e[0]]), (A.s[e[1]], A.t[e[1]])))
                for e in AA.carrier))
    rep.add("comultiplication_of_unit",
            all((M.unit[x], M.unit[x]) ==
                (M.unit[delta_I(x)[0]], M.unit[delta_I(x)[1]]) for x in X))
    rep.add("counit_of_unit",
            all((A.s[M.unit[x]], A.t[M.unit[x]]) == tau(x) for x in X))
    return rep


def span_bimonoid_to_category(M):
    rep = check_span_bimonoid(M)
    if not rep.ok:
        raise MonoidLawFailure(", ".join(c.name for c in rep.failures()))
    A = M.span
    compose = {(a, b): M.mult[(a, b)] for (a, b) in M.mult}
    return FiniteCategory(A.base, A.carrier, A.s, A.t, compose,
                          {x: M.unit[x] for x in A.base},
                          name=A.name or "from-span")


def category_to_span_bimonoid(C):
    span = Span(C.objects, C.morphisms, C.src, C.tgt, name=C.name)
    mult = dict(C.compose)
    unit = dict(C.identities)
    return SpanBimonoid(span, mult, unit)


def span_hopf_beta(M, A=None, B=None):
    """Bijectivity of beta: ((a,h),(b,h')) -> (((a,h),b), h h') with the
    bullet factors A and B (default: both the complete span)."""
    H = M.span
    X = H.base
    if A is None:
        A = unit_bullet(X)
    if B is None:
        B = unit_bullet(X)
    if set(A.base) != set(X) or set(B.base) != set(X):
        raise BaseMismatch("bullet factors must share the bimonoid base")
    AH = span_bullet(A, H)
    BH = span_bullet(B, H)
    dom = span_circ(AH, BH)
    cod = span_bullet(span_circ(AH, B), H)
    fwd = {}
    for e in dom.carrier:
        (a, h), (b, hp) = e
        fwd[e] = (((a, h), b), M.mult[(h, hp)])
    codset = set(cod.carrier)
    well_defined = all(v in codset for v in fwd.values())
    image = set(fwd.values())
    bijective = well_defined and len(image) == len(fwd) == len(cod.carrier)
    inverse = None
    if bijective:
        inverse = {v: k for k, v in fwd.items()}
    return bijective, fwd, inverse


def extract_groupoid_inverse(M):
    """When beta_{J,J} is bijective, read off h^{-1} from preimages."""
    bij, fwd, inv = span_hopf_beta(M)
    if not bij:
        return None
    H = M.span
    out = {}
    for h in H.carrier:
        j1 = (H.s[h], H.t[h])
        j2 = (H.t[h], H.s[h])
        target = (((j1, h), j2), M.unit[H.t[h]])
        pre = inv[target]
        out[h] = pre[1][1]
    return out
