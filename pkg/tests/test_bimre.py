"""Bimodules over the enveloping algebra: coherence suites and the
bimonoid dictionary."""

import random

import pytest

from weakbialg.bimre import (
    BaseData,
    FactorizationFailure,
    algebra_characters,
    base_from_builtin,
    bimonoid_to_wba,
    bimre_bullet,
    bimre_circ,
    bimre_duoidal_suite,
    check_bimonoid,
    duoidal_roundtrip,
    random_bimodule,
    unit_bullet_object,
    unit_circ_object,
    wba_to_bimonoid,
    zero_bimodule,
)
from weakbialg.gallery import gallery_wba
from weakbialg.linalg import Matrix
from weakbialg.wbacore import base_algebra

from test_frobenius import twisted_mat2

SMALL_BASES = ["Q", "QxQ", "GroupZ2"]


def dual_k2_base():
    B = base_algebra(gallery_wba("dual_k2"))
    return BaseData(B.algebra, B.frobenius)


@pytest.mark.parametrize("name", SMALL_BASES)
def test_unit_objects_are_bimodules(name):
    base = base_from_builtin(name)
    assert unit_circ_object(base).validate().ok
    assert unit_bullet_object(base).validate().ok


@pytest.mark.parametrize("name", SMALL_BASES + ["Mat2"])
def test_coherence_suite(name):
    base = base_from_builtin(name)
    rng = random.Random(11)
    rep = bimre_duoidal_suite(base, [random_bimodule(base, rng)])
    assert rep.ok, [c.name for c in rep.failures()]


def test_coherence_suite_on_extracted_base():
    base = dual_k2_base()
    rng = random.Random(5)
    rep = bimre_duoidal_suite(base, [random_bimodule(base, rng)])
    assert rep.ok, [c.name for c in rep.failures()]


def test_coherence_with_nontrivial_nakayama():
    # all builtin bases have identity twist; this one genuinely exercises
    # the twisted unit object and its unitors
    R, F = twisted_mat2()
    base = BaseData(R, F)
    eye = Matrix.identity(base.field, base.dim)
    assert base.theta != eye
    rep = bimre_duoidal_suite(base, [zero_bimodule(base)])
    assert rep.ok, [c.name for c in rep.failures()]


def test_characters():
    assert len(algebra_characters(base_from_builtin("QxQ").R)) == 2
    assert len(algebra_characters(base_from_builtin("GroupZ2").R)) == 2
    assert len(algebra_characters(base_from_builtin("QxQxQ").R)) == 3
    # non-commutative: none
    assert algebra_characters(base_from_builtin("Mat2").R) == []


def test_mat2_small_bimodules_are_zero():
    base = base_from_builtin("Mat2")
    V = random_bimodule(base, random.Random(0))
    assert V.dim == 0


@pytest.mark.parametrize("seed", range(6))
def test_random_bimodules_validate(seed):
    rng = random.Random(seed)
    for name in SMALL_BASES:
        base = base_from_builtin(name)
        V = random_bimodule(base, rng)
        assert 1 <= V.dim <= 3
        assert V.validate().ok


def test_product_idempotents_are_exact():
    base = base_from_builtin("QxQ")
    I = unit_circ_object(base)
    J = unit_bullet_object(base)
    for P in (bimre_circ(I, J), bimre_bullet(J, I)):
        assert P.idem.is_idempotent()
        assert P.project * P.inject == Matrix.identity(base.field, P.dim)
        assert P.inject * P.project == P.idem
        assert P.validate().ok


@pytest.mark.parametrize("name", ["k2", "dual_k2", "torusB:3"])
def test_dictionary_roundtrip(name):
    rep = duoidal_roundtrip(gallery_wba(name))
    assert rep.ok, [(c.name, c.witness) for c in rep.failures()]


def test_bimonoid_laws_on_iso2():
    bm = wba_to_bimonoid(gallery_wba("iso2"))
    rep = check_bimonoid(bm)
    assert rep.ok, [c.name for c in rep.failures()]
    H2 = bimonoid_to_wba(bm)
    H = gallery_wba("iso2")
    assert H2.mult == H.mult and H2.comult == H.comult


def test_comultiplication_must_factor():
    # feeding a comultiplication that does not land in the twisted-product
    # image must be rejected, not silently projected
    H = gallery_wba("k2")
    bad_comult = [dict(r) for r in H.comult]
    bad_comult[2] = {2 * H.dim + 0: H.field.one}   # a (x) S: not in range
    from weakbialg.wbacore import WeakBialgebra, check_weak_bialgebra

    bad = WeakBialgebra(H.field, H.basis, H.mult, H.unit, bad_comult,
                        H.counit, name="bad")
    if check_weak_bialgebra(bad).ok:     # pragma: no cover
        pytest.skip("corruption accidentally satisfies the axioms")
    bad.validated = True                  # force the dictionary path
    with pytest.raises(FactorizationFailure):
        wba_to_bimonoid(bad)
