"""Weak bialgebra axioms, counital projections, base algebras, duals and
morphisms."""

from fractions import Fraction

import pytest

from weakbialg.catgrp import builtin_category, enumerate_functors
from weakbialg.fields import QQ
from weakbialg.functors import linearize
from weakbialg.gallery import GALLERY_WBA_NAMES, gallery_wba
from weakbialg.linalg import Matrix
from weakbialg.wbacore import (
    WbaMorphism,
    WeakBialgebra,
    base_algebra,
    check_weak_bialgebra,
    counital_maps,
    dual_wba,
    is_wba_morphism,
    weak_identity_suite,
)

ONE = QQ.one


@pytest.mark.parametrize("name", GALLERY_WBA_NAMES)
def test_axioms_and_identities(name):
    H = gallery_wba(name)
    rep = check_weak_bialgebra(H)
    assert rep.ok, [c.name for c in rep.failures()]
    suite = weak_identity_suite(H)
    assert suite.ok, [c.name for c in suite.failures()]


def test_counital_values_on_interval_algebra():
    H = gallery_wba("k2")
    pi = counital_maps(H)
    S, T, a = 0, 1, 2
    # source and target of the only non-identity morphism
    assert pi.piR.column(a) == {S: ONE}
    assert pi.piRbar.column(a) == {T: ONE}
    for i in (S, T):
        assert pi.piR.column(i) == {i: ONE}
        assert pi.piRbar.column(i) == {i: ONE}


def test_counital_values_on_dual():
    H = gallery_wba("dual_k2")
    pi = counital_maps(H)
    S, T, a = 0, 1, 2
    assert pi.piR.column(S) == {S: ONE, a: ONE}
    assert pi.piR.column(T) == {T: ONE}
    assert pi.piR.column(a) == {}


@pytest.mark.parametrize("name,expected_dim", [
    ("k2", 2), ("dual_k2", 2), ("iso2", 2), ("dual_iso2", 2),
    ("groupZ2", 1), ("torusB:3", 3),
])
def test_base_algebra(name, expected_dim):
    H = gallery_wba(name)
    B = base_algebra(H)
    assert B.report.ok, [c.name for c in B.report.failures()]
    assert B.dim == expected_dim
    assert B.algebra.validate().ok


def test_torus_base_is_everything():
    # the right projection of the torus factor is the identity, so the
    # base algebra is the whole algebra
    H = gallery_wba("torusB:3")
    pi = counital_maps(H)
    assert pi.piR == Matrix.identity(H.field, H.dim)


def test_dual_is_involutive():
    for name in ("k2", "iso2"):
        H = gallery_wba(name)
        DD = dual_wba(dual_wba(H))
        assert DD.mult == H.mult
        assert DD.comult == H.comult
        assert DD.unit == H.unit
        assert DD.counit == H.counit


def test_linearized_functors_are_morphisms():
    # every functor between the builtin categories linearizes to a
    # weak bialgebra morphism, and composites of those pass too
    A = builtin_category("interval")
    B = builtin_category("iso2")
    kA, kB = linearize(A), linearize(B)
    for F in enumerate_functors(A, B):
        m = Matrix(QQ, kB.dim, kA.dim)
        for j, mor in enumerate(A.morphisms):
            m.rows[kB.basis.index(F.mor_map[mor])][j] = ONE
        rep = is_wba_morphism(WbaMorphism(kA, kB, m))
        assert rep.ok, (F.mor_map, [c.name for c in rep.failures()])


def test_broken_counit_is_detected():
    H = gallery_wba("k2")
    bad = WeakBialgebra(H.field, H.basis, H.mult, H.unit, H.comult,
                        [ONE, ONE, QQ.zero], name="broken")
    rep = check_weak_bialgebra(bad)
    assert not rep.ok
    assert any("counit" in c.name for c in rep.failures())


def test_broken_comultiplication_is_detected():
    H = gallery_wba("k2")
    comult = [dict(r) for r in H.comult]
    comult[2] = {2 * H.dim + 2: ONE + ONE}   # scale Delta(a)
    bad = WeakBialgebra(H.field, H.basis, H.mult, H.unit, comult,
                        H.counit, name="broken")
    rep = check_weak_bialgebra(bad)
    assert not rep.ok
