"""Field arithmetic: rational and cyclotomic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weakbialg.fields import (
    QQ,
    DivisionByZero,
    cyclotomic_field,
    cyclotomic_polynomial,
    euler_phi,
    rational_roots,
)

FIELDS = [QQ, cyclotomic_field(3), cyclotomic_field(4), cyclotomic_field(5)]


def rationals():
    return st.fractions(min_value=-50, max_value=50, max_denominator=8)


def elements(field):
    if field.kind == "Q":
        return rationals().map(field.from_fraction)
    return st.lists(rationals(), min_size=field.degree,
                    max_size=field.degree).map(tuple)


@pytest.mark.parametrize("field", FIELDS, ids=str)
class TestFieldAxioms:
    @given(data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_ring_laws(self, field, data):
        a = data.draw(elements(field))
        b = data.draw(elements(field))
        c = data.draw(elements(field))
        assert field.add(a, b) == field.add(b, a)
        assert field.mul(a, b) == field.mul(b, a)
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == \
            field.add(field.mul(a, b), field.mul(a, c))
        assert field.add(a, field.neg(a)) == field.zero
        assert field.mul(a, field.one) == a

    @given(data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_inverses(self, field, data):
        a = data.draw(elements(field))
        if field.is_zero(a):
            with pytest.raises(DivisionByZero):
                field.inv(a)
        else:
            assert field.mul(a, field.inv(a)) == field.one


def test_euler_phi_small():
    assert [euler_phi(n) for n in range(1, 13)] == \
        [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


@pytest.mark.parametrize("N", range(1, 25))
def test_cyclotomic_product_is_x_pow_N_minus_1(N):
    # prod over d | N of Phi_d(x) = x^N - 1
    prod = [Fraction(1)]
    for d in range(1, N + 1):
        if N % d:
            continue
        phi = cyclotomic_polynomial(d)
        out = [Fraction(0)] * (len(prod) + len(phi) - 1)
        for i, a in enumerate(prod):
            for j, b in enumerate(phi):
                out[i + j] += a * b
        prod = out
    expect = [Fraction(-1)] + [Fraction(0)] * (N - 1) + [Fraction(1)]
    assert prod == expect


@pytest.mark.parametrize("N", [3, 4, 5, 6, 8, 12])
def test_zeta_has_order_N(N):
    f = cyclotomic_field(N)
    acc = f.one
    for k in range(1, N):
        acc = f.mul(acc, f.zeta)
        assert acc != f.one, (N, k)
    assert f.mul(acc, f.zeta) == f.one


@pytest.mark.parametrize("N", [3, 4, 5])
def test_galois_maps_are_automorphisms(N):
    f = cyclotomic_field(N)
    from math import gcd

    a = f.add(f.zeta, f.from_int(2))
    b = f.mul(f.zeta, f.zeta)
    for j in range(1, N):
        if gcd(j, N) != 1:
            continue
        assert f.galois_map(f.mul(a, b), j) == \
            f.mul(f.galois_map(a, j), f.galois_map(b, j))
        assert f.galois_map(f.add(a, b), j) == \
            f.add(f.galois_map(a, j), f.galois_map(b, j))
        assert f.galois_map(f.one, j) == f.one


def test_rational_roots_exact():
    # (x - 2)(x + 1/3)(x^2 + 1) has rational roots {2, -1/3} only
    def mul(p, q):
        out = [Fraction(0)] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            for j, b in enumerate(q):
                out[i + j] += a * b
        return out

    p = mul(mul([Fraction(-2), Fraction(1)], [Fraction(1, 3), Fraction(1)]),
            [Fraction(1), Fraction(0), Fraction(1)])
    assert sorted(rational_roots(p)) == [Fraction(-1, 3), Fraction(2)]
