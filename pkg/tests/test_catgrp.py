"""Finite categories, groupoids and functor enumeration."""

import pytest

from weakbialg.catgrp import (
    BUILTIN_CATEGORY_NAMES,
    CatFunctor,
    FiniteCategory,
    builtin_category,
    compose_functors,
    enumerate_functors,
    validate_category,
    validate_groupoid,
)


@pytest.mark.parametrize("name", BUILTIN_CATEGORY_NAMES)
def test_builtins_validate(name):
    A = builtin_category(name)
    rep = validate_category(A)
    assert rep.ok, [c.name for c in rep.failures()]
    if A.is_groupoid:
        assert validate_groupoid(A).ok


def test_interval_endofunctor_count():
    # functors 2 -> 2: constant at S, constant at T, identity
    A = builtin_category("interval")
    fs = enumerate_functors(A, A)
    assert len(fs) == 3
    keys = {tuple(sorted(F.obj_map.items())) for F in fs}
    assert (("S", "S"), ("T", "S")) in keys
    assert (("S", "T"), ("T", "T")) in keys
    assert (("S", "S"), ("T", "T")) in keys


def test_functor_counts_into_iso2():
    # the iso makes both objects interchangeable: 2 constants and 2 embeddings
    A = builtin_category("interval")
    B = builtin_category("iso2")
    assert len(enumerate_functors(A, B)) == 4


def test_cyclic_group_maps():
    # functors Z/2 -> Z/3 (monoid maps): only the trivial one
    assert len(enumerate_functors(builtin_category("cyclicN:2"),
                                  builtin_category("cyclicN:3"))) == 1
    # Z/2 -> Z/2: trivial and identity
    assert len(enumerate_functors(builtin_category("cyclicN:2"),
                                  builtin_category("cyclicN:2"))) == 2


def test_functor_composition():
    A = builtin_category("interval")
    B = builtin_category("iso2")
    for F in enumerate_functors(A, B):
        for G in enumerate_functors(B, B):
            GF = compose_functors(G, F)
            assert GF.is_functor()


def test_every_enumerated_functor_passes():
    for src in ("interval", "parallel2", "cyclicN:2"):
        for dst in ("interval", "iso2"):
            for F in enumerate_functors(builtin_category(src),
                                        builtin_category(dst)):
                assert F.is_functor()


def test_broken_composition_table_is_detected():
    A = builtin_category("interval")
    compose = dict(A.compose)
    compose[("a", "S")] = "S"    # a . id_S should be a
    bad = FiniteCategory(A.objects, A.morphisms, A.src, A.tgt, compose,
                         A.identities, name="broken")
    rep = validate_category(bad)
    assert not rep.ok
    failed = {c.name for c in rep.failures()}
    assert failed & {"identity_laws", "composition_domain_and_typing",
                     "associativity"}
