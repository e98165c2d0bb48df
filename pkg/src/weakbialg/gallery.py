"""Built-in weak bialgebras used throughout the test batteries.

Linearized categories and their duals, the smallest group algebra, and
the finite factor of the algebraic quantum torus over a cyclotomic field.
"""

from __future__ import annotations

import math

from .catgrp import builtin_category
from .fields import QQ, cyclotomic_field
from .functors import linearize
from .wbacore import WeakBialgebra, check_weak_bialgebra, dual_wba


class UnknownName(KeyError):
    pass


def group_z2(field=None):
    """The group algebra of Z/2 with its Hopf structure."""
    f = field or QQ
    one, zero = f.one, f.zero
    mult = [[{0: one}, {1: one}], [{1: one}, {0: one}]]
    comult = [{0: one}, {3: one}]
    H = WeakBialgebra(f, ["1", "g"], mult, {0: one}, comult, [one, one],
                      name="Q[Z2]")
    rep = check_weak_bialgebra(H)
    assert rep.ok, [c.name for c in rep.failures()]
    return H


def torus_factor(N, qexp=1):
    """The N-dimensional factor B = k<U | U^N = 1> of the algebraic
    quantum torus, over the N-th cyclotomic field, with

        Delta(U^n) = (1/N) sum_j U^(j+n) (x) U^(-j),
        eps(1) = N,  eps(U^n) = 0 otherwise.

    The deformation parameter only enters the (infinite-dimensional)
    ambient algebra, so qexp is merely validated here: it must select a
    primitive root.
    """
    if N < 1:
        raise ValueError("N must be positive")
    if math.gcd(qexp, N) != 1:
        raise ValueError("q must be a primitive N-th root of unity")
    f = cyclotomic_field(N)
    one, zero = f.one, f.zero
    invN = f.inv(f.from_int(N))
    mult = [[{(i + j) % N: one} for j in range(N)] for i in range(N)]
    comult = []
    for n in range(N):
        row = {}
        for j in range(1, N + 1):
            a = (j + n) % N
            b = (-j) % N
            key = a * N + b
            row[key] = f.add(row.get(key, zero), invN)
        comult.append(row)
    counit = [f.from_int(N)] + [zero] * (N - 1)
    H = WeakBialgebra(f, [("1" if i == 0 else f"U^{i}") for i in range(N)],
                      mult, {0: one}, comult, counit, name=f"torusB:{N}")
    rep = check_weak_bialgebra(H)
    assert rep.ok, [c.name for c in rep.failures()]
    return H


def torus_grouplike(N, omega_exp):
    """g_omega = (1/N) sum_j omega^j U^j for omega = zeta^omega_exp."""
    f = cyclotomic_field(N)
    invN = f.inv(f.from_int(N))
    g = {}
    for j in range(1, N + 1):
        val = f.mul(invN, f.zeta_powers[(omega_exp * j) % N])
        g[j % N] = f.add(g.get(j % N, f.zero), val)
    return {k: v for k, v in g.items() if not f.is_zero(v)}


def gallery_wba(name):
    if name == "k2":
        return linearize(builtin_category("interval"))
    if name == "dual_k2":
        H = dual_wba(linearize(builtin_category("interval")))
        H.name = "dual_k2"
        return H
    if name == "iso2":
        return linearize(builtin_category("iso2"))
    if name == "dual_iso2":
        H = dual_wba(linearize(builtin_category("iso2")))
        H.name = "dual_iso2"
        return H
    if name == "groupZ2":
        return group_z2()
    if name.startswith("torusB:"):
        return torus_factor(int(name.split(":", 1)[1]))
    raise UnknownName(name)


GALLERY_WBA_NAMES = ("k2", "dual_k2", "iso2", "dual_iso2", "groupZ2",
                     "torusB:2", "torusB:3", "torusB:4")
