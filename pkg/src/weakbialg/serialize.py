"""JSON serialization for every object family the command line handles.

Rationals are strings "p/q" (or "p"); cyclotomic scalars are arrays of
rational strings, the coefficients of zeta^0 .. zeta^(phi(N)-1); fields
are {"kind": "Q"} or {"kind": "Qzeta", "N": n}.  Dense tables throughout:
these files are small and diffable.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .catgrp import FiniteCategory, FiniteGroupoid
from .fields import QQ, cyclotomic_field
from .frobenius import FinAlgebra, FrobeniusStructure
from .spans import Span, SpanBimonoid
from .wbacore import WeakBialgebra


class ParseError(ValueError):
    pass


def fraction_to_json(x):
    return str(x.numerator) if x.denominator == 1 else str(x)


def fraction_from_json(s):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {s!r}") from exc


def scalar_to_json(field, x):
    if field.kind == "Q":
        return fraction_to_json(x)
    return [fraction_to_json(c) for c in x]


def scalar_from_json(field, s):
    if field.kind == "Q":
        return fraction_from_json(s)
    if not isinstance(s, list) or len(s) != field.degree:
        raise ParseError(f"cyclotomic scalar needs {field.degree} "
                         "coefficients")
    return tuple(fraction_from_json(c) for c in s)


def field_to_json(field):
    if field.kind == "Q":
        return {"kind": "Q"}
    return {"kind": "Qzeta", "N": field.N}


def field_from_json(spec):
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ParseError("field spec must be an object with a 'kind'")
    if spec["kind"] == "Q":
        return QQ
    if spec["kind"] == "Qzeta":
        try:
            return cyclotomic_field(int(spec["N"]))
        except (KeyError, ValueError, TypeError) as exc:
            raise ParseError("Qzeta field needs a positive integer N") from exc
    raise ParseError(f"unknown field kind {spec['kind']!r}")


def _vec_to_json(field, vec, n):
    return [scalar_to_json(field, vec.get(i, field.zero)) for i in range(n)]


def _vec_from_json(field, arr):
    out = {}
    for i, s in enumerate(arr):
        x = scalar_from_json(field, s)
        if not field.is_zero(x):
            out[i] = x
    return out


def wba_to_json(H):
    f = H.field
    n = H.dim
    return {
        "type": "wba",
        "name": H.name,
        "field": field_to_json(f),
        "basis": list(H.basis),
        "mult": [[_vec_to_json(f, H.mult[i][j], n) for j in range(n)]
                 for i in range(n)],
        "unit": _vec_to_json(f, H.unit, n),
        "comult": [[[scalar_to_json(f, H.comult[i].get(j * n + k, f.zero))
                     for k in range(n)] for j in range(n)]
                   for i in range(n)],
        "counit": [scalar_to_json(f, c) for c in H.counit],
    }


def wba_from_json(data):
    f = field_from_json(data["field"])
    basis = list(data["basis"])
    n = len(basis)
    mult = [[_vec_from_json(f, data["mult"][i][j]) for j in range(n)]
            for i in range(n)]
    unit = _vec_from_json(f, data["unit"])
    comult = []
    for i in range(n):
        row = {}
        for j in range(n):
            for k in range(n):
                x = scalar_from_json(f, data["comult"][i][j][k])
                if not f.is_zero(x):
                    row[j * n + k] = x
        comult.append(row)
    counit = [scalar_from_json(f, c) for c in data["counit"]]
    return WeakBialgebra(f, basis, mult, unit, comult, counit,
                         name=data.get("name", ""))


def frobenius_to_json(R, F):
    f = R.field
    n = R.dim
    return {
        "type": "frobenius",
        "field": field_to_json(f),
        "dim": n,
        "basis": list(R.basis),
        "mult": [[_vec_to_json(f, R.mult[i][j], n) for j in range(n)]
                 for i in range(n)],
        "unit": _vec_to_json(f, R.unit, n),
        "psi": [scalar_to_json(f, c) for c in F.psi],
        "frob": [[scalar_to_json(f, F.frob.entry(i, j)) for j in range(n)]
                 for i in range(n)],
    }


def frobenius_from_json(data):
    from .linalg import Matrix

    f = field_from_json(data["field"])
    basis = list(data["basis"])
    n = len(basis)
    mult = [[_vec_from_json(f, data["mult"][i][j]) for j in range(n)]
            for i in range(n)]
    R = FinAlgebra(f, basis, mult, _vec_from_json(f, data["unit"]))
    psi = [scalar_from_json(f, c) for c in data["psi"]]
    frob = Matrix(f, n, n)
    for i in range(n):
        for j in range(n):
            x = scalar_from_json(f, data["frob"][i][j])
            if not f.is_zero(x):
                frob.rows[i][j] = x
    return R, FrobeniusStructure(psi, frob)


def category_to_json(A):
    out = {
        "type": "category",
        "name": A.name,
        "objects": list(A.objects),
        "morphisms": [{"name": m, "src": A.src[m], "tgt": A.tgt[m]}
                      for m in A.morphisms],
        "compose": {f"{g}∘{h}": v for (g, h), v in A.compose.items()},
        "identities": dict(A.identities),
    }
    if isinstance(A, FiniteGroupoid):
        out["inverse"] = dict(A.inverse)
    return out


def category_from_json(data):
    morphisms = [m["name"] for m in data["morphisms"]]
    src = {m["name"]: m["src"] for m in data["morphisms"]}
    tgt = {m["name"]: m["tgt"] for m in data["morphisms"]}
    compose = {}
    for key, v in data["compose"].items():
        g, sep, h = key.partition("∘")
        if not sep:
            raise ParseError(f"bad composition key {key!r}")
        compose[(g, h)] = v
    args = (data["objects"], morphisms, src, tgt, compose,
            data["identities"])
    if "inverse" in data:
        return FiniteGroupoid(*args, data["inverse"],
                              name=data.get("name", ""))
    return FiniteCategory(*args, name=data.get("name", ""))


def _elt_to_json(x):
    if isinstance(x, tuple):
        return [_elt_to_json(y) for y in x]
    return x


def _elt_from_json(x):
    if isinstance(x, list):
        return tuple(_elt_from_json(y) for y in x)
    return x


def _elt_key(x):
    return json.dumps(_elt_to_json(x), separators=(",", ":"))


def span_to_json(sp):
    return {
        "type": "span",
        "name": sp.name,
        "base": [_elt_to_json(x) for x in sp.base],
        "carrier": [_elt_to_json(a) for a in sp.carrier],
        "s": {_elt_key(a): _elt_to_json(sp.s[a]) for a in sp.carrier},
        "t": {_elt_key(a): _elt_to_json(sp.t[a]) for a in sp.carrier},
    }


def span_from_json(data):
    carrier = [_elt_from_json(a) for a in data["carrier"]]
    s, t = {}, {}
    for a in carrier:
        k = _elt_key(a)
        s[a] = _elt_from_json(data["s"][k])
        t[a] = _elt_from_json(data["t"][k])
    return Span([_elt_from_json(x) for x in data["base"]], carrier, s, t,
                name=data.get("name", ""))


def span_bimonoid_to_json(M):
    out = span_to_json(M.span)
    out["type"] = "span-bimonoid"
    out["mult"] = {f"{_elt_key(a)}∘{_elt_key(b)}": _elt_to_json(v)
                   for (a, b), v in M.mult.items()}
    out["unit"] = {_elt_key(x): _elt_to_json(v) for x, v in M.unit.items()}
    return out


def span_bimonoid_from_json(data):
    sp = span_from_json(data)
    by_key = {_elt_key(a): a for a in sp.carrier}
    mult = {}
    for key, v in data["mult"].items():
        ka, sep, kb = key.partition("∘")
        if not sep:
            raise ParseError(f"bad multiplication key {key!r}")
        mult[(by_key[ka], by_key[kb])] = _elt_from_json(v)
    unit = {_elt_from_json(json.loads(k)): _elt_from_json(v)
            for k, v in data["unit"].items()}
    return SpanBimonoid(sp, mult, unit)


def antipode_to_json(H, S):
    f = H.field
    n = H.dim
    return {
        "type": "antipode",
        "provenance": S.provenance,
        "matrix": [[scalar_to_json(f, S.matrix.entry(i, j))
                    for j in range(n)] for i in range(n)],
    }


_PARSERS = {
    "wba": wba_from_json,
    "frobenius": frobenius_from_json,
    "category": category_from_json,
    "span": span_from_json,
    "span-bimonoid": span_bimonoid_from_json,
}


def object_from_json(data):
    if not isinstance(data, dict) or "type" not in data:
        raise ParseError("object must carry a 'type' tag")
    try:
        parser = _PARSERS[data["type"]]
    except KeyError:
        raise ParseError(f"unknown object type {data['type']!r}") from None
    return parser(data)


def load_path(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(str(exc)) from exc
    return object_from_json(data)


def dump(obj_json, out=None):
    text = json.dumps(obj_json, indent=2, ensure_ascii=False)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
