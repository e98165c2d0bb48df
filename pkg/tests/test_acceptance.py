"""Acceptance gate: thirteen end-to-end criteria, every comparison exact.

Each test prints a single PASS/FAIL line (run with -s or via
scripts/run_acceptance.py to see them) and asserts the criterion.
"""

import itertools
import random
import time
from fractions import Fraction

from weakbialg.catgrp import (
    BUILTIN_CATEGORY_NAMES,
    FiniteCategory,
    builtin_category,
    enumerate_functors,
    validate_category,
)
from weakbialg.bimre import (
    base_from_builtin,
    base_from_wba,
    bimre_duoidal_suite,
    duoidal_roundtrip,
    random_bimodule,
)
from weakbialg.fields import QQ
from weakbialg.frobenius import (
    FrobeniusStructure,
    builtin_frobenius,
    check_separable_frobenius,
)
from weakbialg.functors import (
    adjunction_phi,
    adjunction_phi_inverse,
    admissible_grouplikes,
    counit_analysis,
    discover_grouplikes,
    g_category,
    linearize,
    unit_iso_report,
)
from weakbialg.gallery import (
    GALLERY_WBA_NAMES,
    gallery_wba,
    torus_factor,
    torus_grouplike,
)
from weakbialg.hopf import (
    Antipode,
    NoAntipode,
    galois_map,
    hopf_identity_suite,
    solve_antipode,
)
from weakbialg.linalg import Matrix
from weakbialg.spans import (
    category_to_span_bimonoid,
    random_span,
    span_duoidal_suite,
    span_hopf_beta,
    unit_bullet,
    unit_circ,
)
from weakbialg.wbacore import (
    WbaMorphism,
    WeakBialgebra,
    check_weak_bialgebra,
    counital_maps,
    is_wba_morphism,
    tensor_vec,
    weak_identity_suite,
)

ONE = QQ.one


def _verdict(num, name, ok):
    print(f"criterion {num:02d} {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({name}) failed"


# ---------------------------------------------------------------------------

def test_criterion_01_axiom_suite():
    t0 = time.monotonic()
    ok = True
    for name in GALLERY_WBA_NAMES:
        H = gallery_wba(name)
        ok = ok and check_weak_bialgebra(H).ok and weak_identity_suite(H).ok
    elapsed = time.monotonic() - t0
    _verdict(1, "axiom suite on the gallery", ok and elapsed < 5.0)


def test_criterion_02_counital_values():
    H = gallery_wba("k2")
    pi = counital_maps(H)
    S, T, a = 0, 1, 2
    ok = (pi.piR.column(a) == {S: ONE}          # source of the arrow
          and pi.piRbar.column(a) == {T: ONE})  # target of the arrow
    D = gallery_wba("dual_k2")
    piD = counital_maps(D)
    ok = ok and piD.piR.column(S) == {S: ONE, a: ONE} \
        and piD.piR.column(T) == {T: ONE} \
        and piD.piR.column(a) == {}
    _verdict(2, "counital projection values", ok)


def test_criterion_03_grouplikes():
    gl, adm = admissible_grouplikes(gallery_wba("dual_k2"))
    ok = gl.completeness == "CompleteOverQ"
    ok = ok and sorted(tuple(sorted(g)) for g in gl.elements) == \
        [(0,), (1,)]                             # exactly {S, T}
    ok = ok and len(adm) == 1 and sorted(adm[0]) == [1]   # only T admissible
    g2 = discover_grouplikes(gallery_wba("dual_iso2"))
    ok = ok and g2.completeness == "CompleteOverQ" and g2.elements == []
    g3 = discover_grouplikes(gallery_wba("k2"))
    ok = ok and g3.completeness == "CompleteOverQ" and len(g3) == 3 \
        and all(len(g) == 1 and list(g.values()) == [ONE]
                for g in g3.elements)
    _verdict(3, "group-like inventories", ok)


def _all_wba_morphisms(A, H):
    """Brute force: a morphism of weak bialgebras sends each basis morphism
    of kA to a group-like of H, so exhaustive assignment search is exact."""
    kA = linearize(A, H.field)
    gl = discover_grouplikes(H)
    assert gl.completeness == "CompleteOverQ"
    out = []
    for choice in itertools.product(gl.elements, repeat=kA.dim):
        M = Matrix.from_columns(H.field, H.dim, list(choice))
        Q = WbaMorphism(kA, H, M)
        if is_wba_morphism(Q).ok:
            out.append(Q)
    return out


def test_criterion_04_adjunction_bijection():
    t0 = time.monotonic()
    ok = True
    for cat_name in ("interval", "iso2", "cyclicN:2"):
        for wba_name in ("k2", "iso2", "dual_k2"):
            A = builtin_category(cat_name)
            H = gallery_wba(wba_name)
            res = solve_antipode(H)
            G = g_category(H, res if isinstance(res, Antipode) else None)
            functors = enumerate_functors(A, G.category)
            morphisms = _all_wba_morphisms(A, H)
            ok = ok and len(functors) == len(morphisms)
            kA = linearize(A, H.field)
            for F in functors:
                Q = adjunction_phi_inverse(F, H, G, kA)
                ok = ok and is_wba_morphism(Q).ok
                ok = ok and adjunction_phi(Q, A, G).key() == F.key()
            for Q in morphisms:
                F = adjunction_phi(Q, A, G)
                ok = ok and adjunction_phi_inverse(F, H, G, kA).matrix \
                    == Q.matrix
    elapsed = time.monotonic() - t0
    _verdict(4, "adjunction bijection on 9 pairs", ok and elapsed < 30.0)


def test_criterion_05_unit_isomorphism():
    ok = all(unit_iso_report(builtin_category(n)).ok
             for n in BUILTIN_CATEGORY_NAMES)
    _verdict(5, "unit of adjunction g(kA) = A", ok)


def test_criterion_06_counit_criterion():
    expected = {
        "k2": ("iso", 3), "iso2": ("iso", 4), "groupZ2": ("iso", 2),
        "torusB:2": ("iso", 2), "torusB:3": ("iso", 3),
        "torusB:4": ("iso", 4),
        "dual_k2": ("not_iso", 1), "dual_iso2": ("not_iso", 0),
    }
    ok = True
    for name, (verdict, rank) in expected.items():
        got, got_rank, _ = counit_analysis(gallery_wba(name))
        ok = ok and (got, got_rank) == (verdict, rank)
    _verdict(6, "counit of adjunction classification", ok)


def test_criterion_07_weak_hopf_equivalence():
    ok = True
    for name in GALLERY_WBA_NAMES:
        H = gallery_wba(name)
        res = solve_antipode(H)
        g = galois_map(H)
        ok = ok and isinstance(res, Antipode) == g.bijective
    H = gallery_wba("iso2")
    res = solve_antipode(H)
    a = H.basis.index("a")
    a_inv = H.basis.index("a_inv")
    ok = ok and isinstance(res, Antipode) \
        and res.matrix.column(a) == {a_inv: ONE} \
        and res.matrix.column(a_inv) == {a: ONE}
    K = gallery_wba("k2")
    ok = ok and isinstance(solve_antipode(K), NoAntipode) \
        and not galois_map(K).bijective
    _verdict(7, "antipode <=> Galois bijectivity", ok)


def test_criterion_08_quantum_torus():
    N = 4
    H = torus_factor(N)
    f = H.field
    ok = check_weak_bialgebra(H).ok
    ok = ok and H.counit_apply(H.unit) == f.from_int(N)
    gs = [torus_grouplike(N, w) for w in range(N)]
    for w, g in enumerate(gs):
        ok = ok and H.comult_vec(g) == tensor_vec(f, H.dim, g, g)
        ok = ok and H.counit_apply(g) == f.one
        for w2, g2 in enumerate(gs):
            prod = H.product(g, g2)
            ok = ok and prod == (g if w == w2 else {})
    gl = discover_grouplikes(H)
    ok = ok and gl.completeness == "CertifiedByDimension" and len(gl) == N
    res = solve_antipode(H)
    G = g_category(H, res if isinstance(res, Antipode) else None)
    C = G.category
    ok = ok and len(C.objects) == N and len(C.morphisms) == N \
        and all(m in C.identities.values() for m in C.morphisms)
    # the linearized g(B) maps isomorphically back onto B
    kG = linearize(C, f)
    M = Matrix.from_columns(f, H.dim,
                            [G.carrier[m] for m in kG.basis])
    ok = ok and is_wba_morphism(WbaMorphism(kG, H, M)).ok \
        and M.rank() == H.dim
    _verdict(8, "quantum torus factor at N=4", ok)


def test_criterion_09_span_duoidal_suite():
    t0 = time.monotonic()
    X = ["x", "y", "z"]
    rng = random.Random(13)
    samples = [unit_circ(X), unit_bullet(X)]
    samples += [random_span(X, rng, tag=f"r{i}") for i in range(20)]
    ok = span_duoidal_suite(X, samples).ok
    # the two structured category carriers run over their own base
    for cat in ("interval", "iso2"):
        sp = category_to_span_bimonoid(builtin_category(cat)).span
        ok = ok and span_duoidal_suite(sp.base, [sp]).ok
    for name in BUILTIN_CATEGORY_NAMES:
        A = builtin_category(name)
        bijective, _, _ = span_hopf_beta(category_to_span_bimonoid(A))
        ok = ok and bijective == A.is_groupoid
    elapsed = time.monotonic() - t0
    _verdict(9, "span duoidal coherence", ok and elapsed < 10.0)


def test_criterion_10_bimodule_duoidal_suite():
    t0 = time.monotonic()
    ok = True
    rng = random.Random(2)
    for name in ("Q", "QxQ", "GroupZ2", "Mat2"):
        base = base_from_builtin(name)
        ok = ok and bimre_duoidal_suite(
            base, [random_bimodule(base, rng)]).ok
    base, _ = base_from_wba(gallery_wba("dual_k2"))
    ok = ok and bimre_duoidal_suite(base, [random_bimodule(base, rng)]).ok
    elapsed = time.monotonic() - t0
    _verdict(10, "bimodule duoidal coherence", ok and elapsed < 60.0)


def test_criterion_11_dictionary_roundtrip():
    ok = all(duoidal_roundtrip(gallery_wba(n)).ok
             for n in ("k2", "dual_k2", "torusB:3"))
    _verdict(11, "bimonoid dictionary round trip", ok)


def _linearize_functor(F, A, B):
    kA, kB = linearize(A), linearize(B)
    m = Matrix(QQ, kB.dim, kA.dim)
    for j, mor in enumerate(A.morphisms):
        m.rows[kB.basis.index(F.mor_map[mor])][j] = ONE
    return WbaMorphism(kA, kB, m)


def test_criterion_12_morphism_theory():
    pairs = [("interval", "interval"), ("interval", "iso2"),
             ("iso2", "iso2"), ("cyclicN:2", "cyclicN:2"),
             ("cyclicN:2", "cyclicN:3"), ("parallel2", "interval")]
    ok = True
    for src, dst in pairs:
        A, B = builtin_category(src), builtin_category(dst)
        for F in enumerate_functors(A, B):
            Q = _linearize_functor(F, A, B)
            ok = ok and is_wba_morphism(Q).ok
            # the restriction of the morphism to basis vectors is a functor
            restricted = {m: B.morphisms[next(iter(
                Q.matrix.column(j)))] for j, m in enumerate(A.morphisms)}
            ok = ok and restricted == F.mor_map
    # composites of passing morphisms pass
    A = builtin_category("interval")
    B = builtin_category("iso2")
    for F in enumerate_functors(A, B):
        for G in enumerate_functors(B, B):
            QF = _linearize_functor(F, A, B)
            QG = _linearize_functor(G, B, B)
            composite = WbaMorphism(QF.source, QG.target,
                                    QG.matrix * QF.matrix)
            ok = ok and is_wba_morphism(composite).ok
    _verdict(12, "linearized morphism theory", ok)


def test_criterion_13_falsifiers():
    ok = True

    H = gallery_wba("k2")
    bad_counit = WeakBialgebra(H.field, H.basis, H.mult, H.unit, H.comult,
                               [ONE, ONE, QQ.zero], name="bad")
    rep = check_weak_bialgebra(bad_counit)
    ok = ok and not rep.ok \
        and any("counit" in c.name for c in rep.failures())

    R, F = builtin_frobenius("GroupZ2")
    frob = Matrix(R.field, 2, 2, [dict(r) for r in F.frob.rows])
    frob.rows[0][0] = Fraction(1)            # corrupt the Frobenius element
    rep, _ = check_separable_frobenius(R, FrobeniusStructure(F.psi, frob))
    ok = ok and not rep.ok and len(rep.failures()) > 0

    H = gallery_wba("iso2")
    res = solve_antipode(H)
    fake = Matrix(QQ, H.dim, H.dim, [dict(r) for r in res.matrix.rows])
    a = H.basis.index("a")
    fake.rows[a][a] = ONE
    rep = hopf_identity_suite(H, fake)
    ok = ok and not rep.ok \
        and {"antipode_cubic", "projection_twists"} \
        <= {c.name for c in rep.failures()}

    A = builtin_category("interval")
    compose = dict(A.compose)
    compose[("a", "S")] = "S"
    bad_cat = FiniteCategory(A.objects, A.morphisms, A.src, A.tgt, compose,
                             A.identities, name="bad")
    rep = validate_category(bad_cat)
    ok = ok and not rep.ok and len(rep.failures()) > 0

    _verdict(13, "seeded corruptions are detected", ok)
