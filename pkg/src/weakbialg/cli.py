"""Command-line front end.

Every verb prints a JSON document (a verification report or a serialized
object) to stdout or --out.  Exit codes: 0 all checks passed, 1 at least
one check failed (or a negative verdict), 2 usage or parse error.

Inputs are file paths or gallery names.  Because some names exist both as
a category and as its linearization, non-weak-bialgebra gallery entries
use a prefix: cat:iso2, frob:Mat2, span:iso2.
"""

from __future__ import annotations

import argparse
import os
import random
import sys

from . import serialize
from .catgrp import BUILTIN_CATEGORY_NAMES, builtin_category
from .catgrp import UnknownName as UnknownCategory
from .frobenius import BUILTIN_FROBENIUS_NAMES, builtin_frobenius, \
    check_separable_frobenius
from .gallery import GALLERY_WBA_NAMES, gallery_wba, torus_factor, \
    torus_grouplike
from .gallery import UnknownName as UnknownGallery
from .report import Report
from .serialize import ParseError
from .wbacore import WeakBialgebra, WbaMorphism


def _load_wba(arg):
    if os.path.exists(arg):
        obj = serialize.load_path(arg)
        if not isinstance(obj, WeakBialgebra):
            raise ParseError(f"{arg} does not hold a weak bialgebra")
        from .wbacore import check_weak_bialgebra
        rep = check_weak_bialgebra(obj)
        if not rep.ok:
            raise ParseError(
                f"{arg} fails the axioms: "
                + ", ".join(c.name for c in rep.failures()))
        return obj
    try:
        return gallery_wba(arg)
    except UnknownGallery:
        raise ParseError(f"no such file or gallery weak bialgebra: {arg}")


def _load_category(arg):
    if os.path.exists(arg):
        obj = serialize.load_path(arg)
        return obj
    try:
        return builtin_category(arg)
    except UnknownCategory:
        raise ParseError(f"no such file or builtin category: {arg}")


def _emit_report(rep, out):
    serialize.dump(rep.to_json(), out)
    return 0 if rep.ok else 1


def cmd_check(args):
    from .wbacore import check_weak_bialgebra, weak_identity_suite

    H = _load_wba(args.input)
    rep = check_weak_bialgebra(H)
    rep.extend(weak_identity_suite(H), prefix="identities/")
    return _emit_report(rep, args.out)


def cmd_pi(args):
    from .wbacore import counital_maps, weak_identity_suite

    H = _load_wba(args.input)
    pi = counital_maps(H)
    f = H.field
    n = H.dim

    def table(m):
        return {H.basis[i]: serialize._vec_to_json(f, m.column(i), n)
                for i in range(n)}

    rep = weak_identity_suite(H, pi)
    doc = rep.to_json()
    doc["piR"] = table(pi.piR)
    doc["piL"] = table(pi.piL)
    doc["piRbar"] = table(pi.piRbar)
    doc["piLbar"] = table(pi.piLbar)
    serialize.dump(doc, args.out)
    return 0 if rep.ok else 1


def cmd_grouplikes(args):
    from .functors import admissible_grouplikes, discover_grouplikes

    H = _load_wba(args.input)
    gl = discover_grouplikes(H)
    _, adm = admissible_grouplikes(H, gl)
    f = H.field
    n = H.dim
    doc = {
        "completeness": gl.completeness,
        "grouplikes": [serialize._vec_to_json(f, g, n) for g in gl.elements],
        "admissible": [serialize._vec_to_json(f, g, n) for g in adm],
        "basis": list(H.basis),
    }
    serialize.dump(doc, args.out)
    return 0


def cmd_g(args):
    from .functors import ClosureFailure, g_category
    from .hopf import Antipode, solve_antipode

    H = _load_wba(args.input)
    res = solve_antipode(H)
    antipode = res if isinstance(res, Antipode) else None
    try:
        G = g_category(H, antipode)
    except ClosureFailure as exc:
        serialize.dump({"error": "ClosureFailure", "detail": str(exc)},
                       args.out)
        return 1
    doc = serialize.category_to_json(G.category)
    f = H.field
    n = H.dim
    doc["carrier"] = {name: serialize._vec_to_json(f, v, n)
                      for name, v in G.carrier.items()}
    if G.warnings:
        doc["warnings"] = list(G.warnings)
    serialize.dump(doc, args.out)
    return 0


def cmd_antipode(args):
    from .hopf import Antipode, solve_antipode

    H = _load_wba(args.input)
    res = solve_antipode(H)
    if isinstance(res, Antipode):
        serialize.dump(serialize.antipode_to_json(H, res), args.out)
        return 0
    serialize.dump({"verdict": "no_antipode", "reason": res.reason,
                    "certificate": res.certificate}, args.out)
    return 1


def cmd_galois(args):
    from .hopf import galois_map

    H = _load_wba(args.input)
    g = galois_map(H)
    rep = Report(f"Galois map ({H.name})")
    rep.add("well_defined", g.well_defined)
    rep.note(f"bijective: {g.bijective}")
    rep.note(f"shape: {g.matrix.nrows}x{g.matrix.ncols}, "
             f"rank: {g.matrix.rank()}")
    return _emit_report(rep, args.out)


def cmd_hopf_suite(args):
    from .hopf import is_weak_hopf

    H = _load_wba(args.input)
    verdict, rep, _ = is_weak_hopf(H)
    rep.note(f"weak_hopf: {verdict}")
    return _emit_report(rep, args.out)


def cmd_from_category(args):
    from .functors import linearize

    A = _load_category(args.input)
    serialize.dump(serialize.wba_to_json(linearize(A)), args.out)
    return 0


def cmd_dual(args):
    from .wbacore import dual_wba

    H = _load_wba(args.input)
    serialize.dump(serialize.wba_to_json(dual_wba(H)), args.out)
    return 0


def cmd_counit(args):
    from .functors import counit_analysis

    H = _load_wba(args.input)
    verdict, rank, rep = counit_analysis(H)
    rep.add("counit_isomorphism", verdict == "iso",
            None if verdict == "iso" else verdict)
    rep.note(f"verdict: {verdict}, rank: {rank}, dim: {H.dim}")
    return _emit_report(rep, args.out)


def cmd_adjoint(args):
    from .catgrp import enumerate_functors
    from .functors import adjunction_phi, adjunction_phi_inverse, \
        g_category, linearize
    from .hopf import Antipode, solve_antipode
    from .wbacore import is_wba_morphism

    A = _load_category(args.category)
    H = _load_wba(args.input)
    res = solve_antipode(H)
    G = g_category(H, res if isinstance(res, Antipode) else None)
    functors = enumerate_functors(A, G.category)
    kA = linearize(A)

    rep = Report(f"adjunction ({A.name} vs {H.name})")
    images = []
    ok_back = True
    for F in functors:
        Q = adjunction_phi_inverse(F, H, G, kA)
        sub = is_wba_morphism(Q)
        if not sub.ok:
            ok_back = False
        Fb = adjunction_phi(Q, A, G)
        if Fb is None or Fb.key() != F.key():
            ok_back = False
        images.append(Q)
    rep.add("inverse_lands_in_morphisms", ok_back)
    keys = {tuple(tuple(sorted(r.items())) for r in Q.matrix.rows)
            for Q in images}
    rep.add("phi_injective", len(keys) == len(functors))
    rep.note(f"functor_count: {len(functors)}")
    return _emit_report(rep, args.out)


def cmd_morphism(args):
    from .linalg import Matrix
    from .wbacore import is_wba_morphism

    import json
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        src = serialize.wba_from_json(data["source"])
        tgt = serialize.wba_from_json(data["target"])
        from .wbacore import check_weak_bialgebra
        for X in (src, tgt):
            if not check_weak_bialgebra(X).ok:
                raise ParseError("morphism endpoint fails the axioms")
        f = tgt.field
        m = Matrix(f, tgt.dim, src.dim)
        for i, row in enumerate(data["matrix"]):
            for j, s in enumerate(row):
                x = serialize.scalar_from_json(f, s)
                if not f.is_zero(x):
                    m.rows[i][j] = x
    except (OSError, KeyError, ValueError) as exc:
        raise ParseError(str(exc))
    rep = is_wba_morphism(WbaMorphism(src, tgt, m))
    return _emit_report(rep, args.out)


def cmd_span_suite(args):
    from .spans import random_span, span_duoidal_suite, unit_bullet, \
        unit_circ, category_to_span_bimonoid

    rng = random.Random(args.seed)
    X = [f"x{i}" for i in range(args.base_size)]
    samples = [unit_circ(X), unit_bullet(X)]
    samples += [random_span(X, rng, tag=f"r{i}")
                for i in range(args.samples)]
    rep = span_duoidal_suite(X, samples)
    return _emit_report(rep, args.out)


def cmd_bimre_suite(args):
    from .bimre import BaseData, base_from_builtin, bimre_duoidal_suite, \
        random_bimodule
    from .wbacore import base_algebra

    rng = random.Random(args.seed)
    rep = Report("bimodule duoidal suites")
    names = [args.base] if args.base else \
        ["Q", "QxQ", "GroupZ2", "Mat2", "base(dual_k2)"]
    for name in names:
        if name == "base(dual_k2)":
            B = base_algebra(gallery_wba("dual_k2"))
            base = BaseData(B.algebra, B.frobenius)
        else:
            base = base_from_builtin(name)
        sub = bimre_duoidal_suite(base, [random_bimodule(base, rng)])
        rep.extend(sub, prefix=f"{name}/")
    return _emit_report(rep, args.out)


def cmd_duoidal_roundtrip(args):
    from .bimre import duoidal_roundtrip

    H = _load_wba(args.input)
    return _emit_report(duoidal_roundtrip(H), args.out)


def cmd_torus(args):
    from .functors import discover_grouplikes
    from .hopf import is_weak_hopf
    from .linalg import Matrix
    from .wbacore import check_weak_bialgebra, tensor_vec, \
        weak_identity_suite

    try:
        H = torus_factor(args.N, args.q)
    except ValueError as exc:
        raise ParseError(str(exc))
    f = H.field
    N = args.N
    rep = check_weak_bialgebra(H)
    rep.extend(weak_identity_suite(H), prefix="identities/")
    rep.add("counit_of_unit_is_N",
            H.counit_apply(H.unit) == f.from_int(N))
    verdict, hopf_rep, ant = is_weak_hopf(H)
    rep.add("weak_hopf", verdict)
    rep.add("antipode_is_identity",
            ant is not None and ant.matrix == Matrix.identity(f, H.dim))
    gl = discover_grouplikes(H)
    rep.add("grouplike_count", len(gl.elements) == N,
            {"found": len(gl.elements), "completeness": gl.completeness})
    ok = True
    for w in range(N):
        g = torus_grouplike(N, w)
        if H.comult_vec(g) != tensor_vec(f, H.dim, g, g) \
                or H.counit_apply(g) != f.one:
            ok = False
        for w2 in range(N):
            prod = H.product(g, torus_grouplike(N, w2))
            if w == w2 and prod != g:
                ok = False
            if w != w2 and prod:
                ok = False
    rep.add("grouplike_idempotents_orthogonal", ok)
    return _emit_report(rep, args.out)


def cmd_gallery(args):
    from .spans import category_to_span_bimonoid

    if not args.name:
        doc = {
            "wba": list(GALLERY_WBA_NAMES),
            "categories": [f"cat:{n}" for n in BUILTIN_CATEGORY_NAMES],
            "frobenius": [f"frob:{n}" for n in BUILTIN_FROBENIUS_NAMES],
            "spans": [f"span:{n}" for n in BUILTIN_CATEGORY_NAMES],
        }
        serialize.dump(doc, args.out)
        return 0
    name = args.name
    if name.startswith("cat:"):
        obj = serialize.category_to_json(builtin_category(name[4:]))
    elif name.startswith("frob:"):
        obj = serialize.frobenius_to_json(*builtin_frobenius(name[5:]))
    elif name.startswith("span:"):
        M = category_to_span_bimonoid(builtin_category(name[5:]))
        obj = serialize.span_bimonoid_to_json(M)
    else:
        try:
            obj = serialize.wba_to_json(gallery_wba(name))
        except UnknownGallery:
            raise ParseError(f"unknown gallery name: {name}")
    serialize.dump(obj, args.out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="wba",
        description="Exact verification toolkit for weak bialgebras, "
                    "groupoids and their duoidal environments.")
    sub = p.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        sp.add_argument("--out", help="write the JSON output to this path")
        return sp

    for verb, fn, helptext in [
        ("check", cmd_check, "axiom and identity suite"),
        ("pi", cmd_pi, "counital projection tables and identities"),
        ("grouplikes", cmd_grouplikes, "group-like discovery"),
        ("g", cmd_g, "the category of admissible group-likes"),
        ("antipode", cmd_antipode, "solve for the antipode"),
        ("galois", cmd_galois, "the Galois-map criterion"),
        ("hopf-suite", cmd_hopf_suite, "full weak Hopf decision"),
        ("dual", cmd_dual, "the dual weak bialgebra"),
        ("counit", cmd_counit, "counit-of-adjunction analysis"),
        ("duoidal-roundtrip", cmd_duoidal_roundtrip,
         "bimonoid dictionary round trip"),
    ]:
        sp = add(verb, fn, help=helptext)
        sp.add_argument("input", help="wba JSON file or gallery name")

    sp = add("from-category", cmd_from_category,
             help="linearize a finite category")
    sp.add_argument("input", help="category JSON file or builtin name")

    sp = add("adjoint", cmd_adjoint,
             help="adjunction bijection for one (category, wba) pair")
    sp.add_argument("category", help="category JSON file or builtin name")
    sp.add_argument("input", help="wba JSON file or gallery name")

    sp = add("morphism", cmd_morphism, help="weak bialgebra morphism check")
    sp.add_argument("input", help="JSON file with source, target, matrix")

    sp = add("span-suite", cmd_span_suite, help="span duoidal coherence")
    sp.add_argument("--base-size", type=int, default=3)
    sp.add_argument("--samples", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("bimre-suite", cmd_bimre_suite,
             help="bimodule duoidal coherence")
    sp.add_argument("--base", help="run a single base algebra")
    sp.add_argument("--seed", type=int, default=0)

    sp = add("torus", cmd_torus, help="quantum torus factor verification")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--q", type=int, default=1,
                    help="exponent of the primitive root (validated only)")

    sp = add("gallery", cmd_gallery, help="emit a builtin object as JSON")
    sp.add_argument("name", nargs="?", help="omit to list all names")
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (UnknownGallery, UnknownCategory, KeyError) as exc:
        print(f"error: unknown name {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
