"""Spans over a set: the two products, the coherence suite, and the
bimonoid/category dictionary."""

import random

import pytest

from weakbialg.catgrp import BUILTIN_CATEGORY_NAMES, builtin_category
from weakbialg.spans import (
    MonoidLawFailure,
    SpanBimonoid,
    category_to_span_bimonoid,
    check_span_bimonoid,
    extract_groupoid_inverse,
    random_span,
    span_bimonoid_to_category,
    span_duoidal_suite,
    span_hopf_beta,
    unit_bullet,
    unit_circ,
)

X3 = ["x", "y", "z"]


def test_structured_samples_pass():
    X = ["p", "q"]
    samples = [unit_circ(X), unit_bullet(X)]
    rep = span_duoidal_suite(X, samples)
    assert rep.ok, [c.name for c in rep.failures()]


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_random_samples_pass(seed):
    rng = random.Random(seed)
    samples = [unit_circ(X3), unit_bullet(X3)]
    samples += [random_span(X3, rng, tag=f"r{i}") for i in range(7)]
    rep = span_duoidal_suite(X3, samples)
    assert rep.ok, [c.name for c in rep.failures()]


@pytest.mark.parametrize("name", BUILTIN_CATEGORY_NAMES)
def test_category_roundtrip(name):
    A = builtin_category(name)
    M = category_to_span_bimonoid(A)
    rep = check_span_bimonoid(M)
    assert rep.ok, [c.name for c in rep.failures()]
    B = span_bimonoid_to_category(M)
    assert B.objects == A.objects
    assert sorted(B.morphisms) == sorted(A.morphisms)
    assert B.compose == A.compose
    assert B.identities == A.identities


@pytest.mark.parametrize("name", BUILTIN_CATEGORY_NAMES)
def test_beta_bijective_iff_groupoid(name):
    A = builtin_category(name)
    M = category_to_span_bimonoid(A)
    bijective, _, _ = span_hopf_beta(M)
    assert bijective == A.is_groupoid


def test_extracted_inverse_matches():
    for name in ("iso2", "cyclicN:3"):
        A = builtin_category(name)
        M = category_to_span_bimonoid(A)
        inv = extract_groupoid_inverse(M)
        assert inv == A.inverse


def test_non_associative_table_raises():
    A = builtin_category("cyclicN:3")
    M = category_to_span_bimonoid(A)
    mult = dict(M.mult)
    mult[("g1", "g1")] = "g1"   # breaks g1.g1 = g2
    bad = SpanBimonoid(M.span, mult, M.unit)
    rep = check_span_bimonoid(bad)
    assert not rep.ok
    with pytest.raises(MonoidLawFailure):
        span_bimonoid_to_category(bad)
