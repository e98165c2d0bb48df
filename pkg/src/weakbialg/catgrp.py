"""Finite categories and groupoids as composition tables.

Composition convention (fixed throughout the package, and documented here
because the literature is split): ``g o h`` is defined exactly when
``src(g) == tgt(h)``; the composite has ``src = src(h)`` and
``tgt = tgt(g)``.  Identities appear explicitly in the morphism list.
"""

from __future__ import annotations

from .report import Report


class UnknownName(KeyError):
    pass


class SearchSpaceTooLarge(RuntimeError):
    pass


class FiniteCategory:
    def __init__(self, objects, morphisms, src, tgt, compose, identities,
                 name=""):
        self.objects = list(objects)
        self.morphisms = list(morphisms)
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.compose = dict(compose)      # (g, h) -> g o h  when src(g)=tgt(h)
        self.identities = dict(identities)
        self.name = name

    @property
    def is_groupoid(self):
        return isinstance(self, FiniteGroupoid)

    def composable(self, g, h):
        return self.src[g] == self.tgt[h]


class FiniteGroupoid(FiniteCategory):
    def __init__(self, objects, morphisms, src, tgt, compose, identities,
                 inverse, name=""):
        super().__init__(objects, morphisms, src, tgt, compose, identities,
                         name)
        self.inverse = dict(inverse)


def validate_category(A):
    rep = Report("category laws")
    ok, wit = True, None
    for x in A.objects:
        i = A.identities.get(x)
        if i is None or A.src.get(i) != x or A.tgt.get(i) != x:
            ok, wit = False, x
            break
    rep.add("identities_well_formed", ok, wit)

    ok, wit = True, None
    for g in A.morphisms:
        for h in A.morphisms:
            defined = (g, h) in A.compose
            if defined != A.composable(g, h):
                ok, wit = False, (g, h)
                break
            if defined:
                gh = A.compose[(g, h)]
                if gh not in A.morphisms or A.src[gh] != A.src[h] \
                        or A.tgt[gh] != A.tgt[g]:
                    ok, wit = False, (g, h)
                    break
        if not ok:
            break
    rep.add("composition_domain_and_typing", ok, wit)

    ok, wit = True, None
    for g in A.morphisms:
        if A.compose.get((g, A.identities[A.src[g]])) != g \
                or A.compose.get((A.identities[A.tgt[g]], g)) != g:
            ok, wit = False, g
            break
    rep.add("identity_laws", ok, wit)

    ok, wit = True, None
    for g in A.morphisms:
        for h in A.morphisms:
            if not A.composable(g, h):
                continue
            for l in A.morphisms:
                if not A.composable(h, l):
                    continue
                if A.compose.get((A.compose[(g, h)], l)) != \
                        A.compose.get((g, A.compose[(h, l)])):
                    ok, wit = False, (g, h, l)
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("associativity", ok, wit)
    return rep


def validate_groupoid(G):
    rep = validate_category(G)
    rep.title = "groupoid laws"
    ok, wit = True, None
    for g in G.morphisms:
        gi = G.inverse.get(g)
        if gi is None \
                or G.compose.get((g, gi)) != G.identities[G.tgt[g]] \
                or G.compose.get((gi, g)) != G.identities[G.src[g]]:
            ok, wit = False, g
            break
    rep.add("inverse_laws", ok, wit)
    return rep


class CatFunctor:
    def __init__(self, source, target, obj_map, mor_map):
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)

    def is_functor(self):
        A, B = self.source, self.target
        for g in A.morphisms:
            fg = self.mor_map.get(g)
            if fg is None or B.src[fg] != self.obj_map[A.src[g]] \
                    or B.tgt[fg] != self.obj_map[A.tgt[g]]:
                return False
        for x in A.objects:
            if self.mor_map[A.identities[x]] != \
                    B.identities[self.obj_map[x]]:
                return False
        for (g, h), gh in A.compose.items():
            if B.compose.get((self.mor_map[g], self.mor_map[h])) != \
                    self.mor_map[gh]:
                return False
        return True

    def key(self):
        return (tuple(sorted(self.obj_map.items())),
                tuple(sorted(self.mor_map.items())))


def compose_functors(g, f):
    """g after f."""
    assert f.target is g.source or f.target.name == g.source.name
    return CatFunctor(f.source, g.target,
                      {x: g.obj_map[y] for x, y in f.obj_map.items()},
                      {m: g.mor_map[mm] for m, mm in f.mor_map.items()})


def enumerate_functors(A, B, bound=10 ** 6):
    """All functors A -> B by backtracking over object and morphism images."""
    if len(B.morphisms) ** len(A.morphisms) > bound:
        raise SearchSpaceTooLarge(
            f"{len(B.morphisms)}^{len(A.morphisms)} exceeds the bound {bound}")
    non_id = [m for m in A.morphisms
              if m not in set(A.identities.values())]
    results = []

    def assign_objects(i, obj_map):
        if i == len(A.objects):
            mor_map = {A.identities[x]: B.identities[obj_map[x]]
                       for x in A.objects}
            assign_morphisms(0, obj_map, mor_map)
            return
        x = A.objects[i]
        for y in B.objects:
            obj_map[x] = y
            assign_objects(i + 1, obj_map)
        del obj_map[x]

    def consistent(mor_map):
        for (g, h), gh in A.compose.items():
            if g in mor_map and h in mor_map and gh in mor_map:
                if B.compose.get((mor_map[g], mor_map[h])) != mor_map[gh]:
                    return False
        return True

    def assign_morphisms(i, obj_map, mor_map):
        if i == len(non_id):
            F = CatFunctor(A, B, dict(obj_map), dict(mor_map))
            if F.is_functor():
                results.append(F)
            return
        m = non_id[i]
        for target in B.morphisms:
            if B.src[target] != obj_map[A.src[m]] \
                    or B.tgt[target] != obj_map[A.tgt[m]]:
                continue
            mor_map[m] = target
            if consistent(mor_map):
                assign_morphisms(i + 1, obj_map, mor_map)
            del mor_map[m]

    assign_objects(0, {})
    return results


# ---------------------------------------------------------------------------
# builtin gallery
# ---------------------------------------------------------------------------

def builtin_category(name):
    if name == "interval":
        # two objects, one non-identity arrow a : S -> T
        objects = ["S", "T"]
        morphisms = ["S", "T", "a"]
        src = {"S": "S", "T": "T", "a": "S"}
        tgt = {"S": "S", "T": "T", "a": "T"}
        compose = {("S", "S"): "S", ("T", "T"): "T",
                   ("a", "S"): "a", ("T", "a"): "a"}
        return FiniteCategory(objects, morphisms, src, tgt, compose,
                              {"S": "S", "T": "T"}, name="interval")

    if name == "iso2":
        objects = ["S", "T"]
        morphisms = ["S", "T", "a", "a_inv"]
        src = {"S": "S", "T": "T", "a": "S", "a_inv": "T"}
        tgt = {"S": "S", "T": "T", "a": "T", "a_inv": "S"}
        compose = {("S", "S"): "S", ("T", "T"): "T",
                   ("a", "S"): "a", ("T", "a"): "a",
                   ("a_inv", "T"): "a_inv", ("S", "a_inv"): "a_inv",
                   ("a", "a_inv"): "T", ("a_inv", "a"): "S"}
        inverse = {"S": "S", "T": "T", "a": "a_inv", "a_inv": "a"}
        return FiniteGroupoid(objects, morphisms, src, tgt, compose,
                              {"S": "S", "T": "T"}, inverse, name="iso2")

    if name.startswith("discreteN:"):
        k = int(name.split(":", 1)[1])
        objects = [f"x{i}" for i in range(k)]
        src = {o: o for o in objects}
        compose = {(o, o): o for o in objects}
        return FiniteGroupoid(objects, list(objects), src, dict(src),
                              compose, {o: o for o in objects},
                              {o: o for o in objects}, name=name)

    if name.startswith("cyclicN:"):
        k = int(name.split(":", 1)[1])
        objects = ["*"]
        morphisms = [f"g{i}" for i in range(k)]
        src = {m: "*" for m in morphisms}
        compose = {(f"g{i}", f"g{j}"): f"g{(i + j) % k}"
                   for i in range(k) for j in range(k)}
        inverse = {f"g{i}": f"g{(-i) % k}" for i in range(k)}
        return FiniteGroupoid(objects, morphisms, src, dict(src), compose,
                              {"*": "g0"}, inverse, name=name)

    if name == "parallel2":
        objects = ["S", "T"]
        morphisms = ["S", "T", "u", "v"]
        src = {"S": "S", "T": "T", "u": "S", "v": "S"}
        tgt = {"S": "S", "T": "T", "u": "T", "v": "T"}
        compose = {("S", "S"): "S", ("T", "T"): "T",
                   ("u", "S"): "u", ("T", "u"): "u",
                   ("v", "S"): "v", ("T", "v"): "v"}
        return FiniteCategory(objects, morphisms, src, tgt, compose,
                              {"S": "S", "T": "T"}, name="parallel2")

    raise UnknownName(name)


BUILTIN_CATEGORY_NAMES = ("interval", "iso2", "discreteN:2", "discreteN:3",
                          "cyclicN:2", "cyclicN:3", "parallel2")
