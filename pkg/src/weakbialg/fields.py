"""Exact scalars: rationals and cyclotomic field elements.

Everything downstream works over a ``Field`` object that knows how to add,
multiply and invert raw values.  Raw values are ``Fraction`` (over Q) or a
tuple of ``Fraction`` coefficients of 1, zeta, ..., zeta^(phi(N)-1) reduced
modulo the N-th cyclotomic polynomial (over Q(zeta_N)).  Keeping raw values
instead of wrapper objects in the hot loops matters: matrix work in the
bimodule suites does millions of scalar operations.

``Scalar`` is a thin wrapper used at API boundaries and in tests.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class DivisionByZero(ZeroDivisionError):
    pass


class ZeroPolynomial(ValueError):
    pass


# ---------------------------------------------------------------------------
# dense rational polynomials: list of Fraction coefficients, index = degree
# ---------------------------------------------------------------------------

def poly_trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    """Exact division with remainder; q must be nonzero."""
    if not q:
        raise ZeroPolynomial("division by the zero polynomial")
    rem = [Fraction(c) for c in p]
    poly_trim(rem)
    quot = [Fraction(0)] * max(0, len(rem) - len(q) + 1)
    lead = q[-1]
    while len(rem) >= len(q):
        coef = rem[-1] / lead
        deg = len(rem) - len(q)
        quot[deg] = coef
        for i, b in enumerate(q):
            rem[deg + i] -= coef * b
        poly_trim(rem)
    return poly_trim(quot), rem


def poly_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N):
    """The N-th cyclotomic polynomial as a tuple of Fraction coefficients."""
    if N < 1:
        raise ValueError("N must be a positive integer")
    if N == 1:
        return (Fraction(-1), Fraction(1))
    num = [Fraction(0)] * (N + 1)
    num[0], num[N] = Fraction(-1), Fraction(1)
    p = num
    for d in range(1, N):
        if N % d == 0:
            p, rem = poly_divmod(p, list(cyclotomic_polynomial(d)))
            assert rem == [], "cyclotomic division must be exact"
    return tuple(p)


def euler_phi(N):
    out, n, p = 1, N, 2
    while p * p <= n:
        if n % p == 0:
            out *= p - 1
            n //= p
            while n % p == 0:
                out *= p
                n //= p
        p += 1
    if n > 1:
        out *= n - 1
    return out


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def rational_roots(p):
    """All rational roots of a nonzero rational polynomial, sorted, distinct.

    Uses the rational root theorem on the primitive integer form.
    """
    p = poly_trim([Fraction(c) for c in p])
    if not p:
        raise ZeroPolynomial("the zero polynomial has every rational root")
    roots = []
    # factor out x^k
    k = 0
    while p[k] == 0:
        k += 1
    if k:
        roots.append(Fraction(0))
        p = p[k:]
    if len(p) > 1:
        den = 1
        for c in p:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in p]
        g = 0
        for c in ints:
            g = gcd(g, c)
        ints = [c // g for c in ints]
        a0, an = abs(ints[0]), abs(ints[-1])
        for num in _divisors(a0):
            for d in _divisors(an):
                for cand in (Fraction(num, d), Fraction(-num, d)):
                    if cand not in roots and poly_eval(p, cand) == 0:
                        roots.append(cand)
    return sorted(roots)


def _poly_ext_gcd(a, b):
    """Extended gcd for rational polynomials: returns (g, u, v), u*a+v*b=g."""
    r0, r1 = [Fraction(c) for c in a], [Fraction(c) for c in b]
    u0, u1 = [Fraction(1)], []
    v0, v1 = [], [Fraction(1)]
    poly_trim(r0), poly_trim(r1)
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, poly_trim([x - y for x, y in _zippad(u0, poly_mul(q, u1))])
        v0, v1 = v1, poly_trim([x - y for x, y in _zippad(v0, poly_mul(q, v1))])
    return r0, u0, v0


def _zippad(p, q):
    n = max(len(p), len(q))
    return zip(p + [Fraction(0)] * (n - len(p)), q + [Fraction(0)] * (n - len(q)))


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class RationalField:
    """The field Q; raw values are Fraction."""

    kind = "Q"
    N = None

    def __repr__(self):
        return "Q"

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("0 has no inverse")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return Fraction(q)

    def coeffs(self, a):
        return (a,)

    def conjugates(self, a):
        return [a]

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


QQ = RationalField()


class CyclotomicField:
    """Q(zeta_N); raw values are tuples of Fraction of length phi(N)."""

    kind = "Qzeta"

    def __init__(self, N):
        if N < 1:
            raise ValueError("N must be positive")
        self.N = N
        self.modulus = cyclotomic_polynomial(N)
        self.degree = len(self.modulus) - 1
        d = self.degree
        self.zero = tuple(Fraction(0) for _ in range(d))
        self.one = tuple(Fraction(1) if i == 0 else Fraction(0) for i in range(d))
        # reduction of x^k mod modulus for k = d .. 2d-2
        red = {}
        cur = [-c for c in self.modulus[:-1]]  # x^d
        for k in range(d, 2 * d - 1):
            red[k] = tuple(cur)
            cur = [Fraction(0)] + cur
            top = cur.pop()
            if top:
                for i in range(d):
                    cur[i] -= top * self.modulus[i]
        self._red = red
        # zeta^j for j = 0..N-1 as field values
        powers = []
        z = self.one
        for _ in range(N):
            powers.append(z)
            z = self._mul_by_x(z)
        self.zeta_powers = powers

    def __repr__(self):
        return f"Q(zeta_{self.N})"

    def _mul_by_x(self, a):
        d = self.degree
        out = [Fraction(0)] + list(a)
        top = out.pop()
        if top:
            for i in range(d):
                out[i] -= top * self.modulus[i]
        return tuple(out)

    @property
    def zeta(self):
        return self.zeta_powers[1 % self.N]

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def mul(self, a, b):
        d = self.degree
        conv = [Fraction(0)] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                red = self._red[k]
                for i in range(d):
                    out[i] += c * red[i]
        return tuple(out)

    def inv(self, a):
        if all(x == 0 for x in a):
            raise DivisionByZero("0 has no inverse")
        g, u, _ = _poly_ext_gcd(list(a), list(self.modulus))
        assert len(g) == 1, "cyclotomic modulus is irreducible"
        c = g[0]
        u = [x / c for x in u]
        u += [Fraction(0)] * (self.degree - len(u))
        return tuple(u[: self.degree])

    def is_zero(self, a):
        return all(x == 0 for x in a)

    def from_int(self, n):
        return tuple(Fraction(n) if i == 0 else Fraction(0) for i in range(self.degree))

    def from_fraction(self, q):
        q = Fraction(q)
        return tuple(q if i == 0 else Fraction(0) for i in range(self.degree))

    def coeffs(self, a):
        return tuple(a)

    def galois_map(self, a, j):
        """Apply the automorphism zeta -> zeta^j (gcd(j, N) = 1)."""
        out = self.zero
        for i, c in enumerate(a):
            if c:
                term = tuple(c * x for x in self.zeta_powers[(i * j) % self.N])
                out = self.add(out, term)
        return out

    def conjugates(self, a):
        return [self.galois_map(a, j) for j in range(1, self.N + 1)
                if gcd(j, self.N) == 1]

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.N == self.N

    def __hash__(self):
        return hash(("Qzeta", self.N))


@lru_cache(maxsize=None)
def cyclotomic_field(N):
    return CyclotomicField(N)


class Scalar:
    """A field element bundled with its field; boundary/test convenience."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    @classmethod
    def rational(cls, p, q=1):
        return cls(QQ, Fraction(p, q))

    @property
    def coeffs(self):
        return self.field.coeffs(self.value)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, other.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def __truediv__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self.field.inv(other.value)))

    def __eq__(self, other):
        return isinstance(other, Scalar) and self.field == other.field \
            and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"Scalar({self.field!r}, {self.value!r})"


def scalar_invert(a):
    """Multiplicative inverse of a nonzero Scalar."""
    return Scalar(a.field, a.field.inv(a.value))
