"""Finite groupoids, Morita equivalence, and the bridge to the 2-category engine.

A finite groupoid is tabulated like a one-sorted category with an inverse
table.  Functors and natural transformations between catalog groupoids are
enumerated exhaustively, which realizes a (small) strict 2-category of
groupoids on which the localization machinery can run; the distinguished
class is the Morita equivalences, i.e. functors that are essentially
surjective and fully faithful in the finite sense:

* essential surjectivity: every target object receives an arrow from the
  image of the object map;
* full faithfulness: the comparison map  Y₁ → (Y₀×Y₀) ×_{X₀×X₀} X₁,
  y₁ ↦ (s y₁, t y₁, φ₁ y₁), is a bijection.

Enumeration cost is exponential in groupoid size; keep catalogs to ~3
groupoids with ≤3 objects and ≤12 arrows each.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .core import StructureError, TwoCat, ValidationReport


@dataclass(eq=False)
class FiniteGroupoid:
    name: str
    objects: tuple[str, ...]
    arr_src: dict[str, str]
    arr_dst: dict[str, str]
    comp: dict[tuple[str, str], str]  # comp[(g, f)] = g∘f, f applied first
    inv: dict[str, str]
    unit: dict[str, str]

    @cached_property
    def arrows(self) -> tuple[str, ...]:
        return tuple(sorted(self.arr_src))

    @cached_property
    def _hom(self) -> dict[tuple[str, str], tuple[str, ...]]:
        out: dict[tuple[str, str], list[str]] = {}
        for a in self.arrows:
            out.setdefault((self.arr_src[a], self.arr_dst[a]), []).append(a)
        return {k: tuple(v) for k, v in out.items()}

    def hom(self, x: str, y: str) -> tuple[str, ...]:
        return self._hom.get((x, y), ())

    def compose(self, g: str, f: str) -> str:
        try:
            return self.comp[(g, f)]
        except KeyError:
            raise StructureError(f"arrows not composable: ({g!r}, {f!r})") from None


def validate_groupoid(g: FiniteGroupoid) -> ValidationReport:
    rep = ValidationReport()
    objs = set(g.objects)
    if len(objs) != len(g.objects) or not objs:
        rep.structural.append("objects not a nonempty set of distinct names")
    for a, (src, dst) in ((a, (g.arr_src.get(a), g.arr_dst.get(a)))
                          for a in g.arr_src):
        if src not in objs or dst not in objs:
            rep.structural.append(f"arrow {a!r} has dangling endpoints")
    if set(g.arr_dst) != set(g.arr_src):
        rep.structural.append("arr_src and arr_dst index different arrow sets")
    if set(g.unit) != objs or any(u not in g.arr_src for u in g.unit.values()):
        rep.structural.append("unit table not total over objects")
    if set(g.inv) != set(g.arr_src) or any(v not in g.arr_src for v in g.inv.values()):
        rep.structural.append("inverse table not total over arrows")
    arrows = set(g.arr_src)
    pairs = {(b, a) for b in arrows for a in arrows
             if g.arr_dst[a] == g.arr_src[b]}
    if set(g.comp) != pairs:
        rep.structural.append("composition table domain mismatch")
    if rep.structural:
        return rep

    for x, u in g.unit.items():
        if g.arr_src[u] != x or g.arr_dst[u] != x:
            rep.failures.append(("unit endpoints", repr(x)))
    for (b, a), ba in g.comp.items():
        if g.arr_src[ba] != g.arr_src[a] or g.arr_dst[ba] != g.arr_dst[b]:
            rep.failures.append(("composite endpoints", repr((b, a))))
    for a in arrows:
        if g.comp[(a, g.unit[g.arr_src[a]])] != a or \
           g.comp[(g.unit[g.arr_dst[a]], a)] != a:
            rep.failures.append(("unit law", repr(a)))
        ia = g.inv[a]
        if g.arr_src[ia] != g.arr_dst[a] or g.arr_dst[ia] != g.arr_src[a]:
            rep.failures.append(("inverse endpoints", repr(a)))
        elif g.comp[(ia, a)] != g.unit[g.arr_src[a]] or \
                g.comp[(a, ia)] != g.unit[g.arr_dst[a]]:
            rep.failures.append(("inverse law", repr(a)))
    for c_, b, a in itertools.product(arrows, arrows, arrows):
        if g.arr_dst[a] == g.arr_src[b] and g.arr_dst[b] == g.arr_src[c_]:
            if g.comp[(c_, g.comp[(b, a)])] != g.comp[(g.comp[(c_, b)], a)]:
                rep.failures.append(("associativity", repr((c_, b, a))))
    return rep


@dataclass(eq=False)
class GroupoidFunctor:
    source: FiniteGroupoid
    target: FiniteGroupoid
    obj_map: dict[str, str]
    arr_map: dict[str, str]

    def signature(self) -> tuple:
        return (self.source.name, self.target.name,
                tuple(sorted(self.obj_map.items())),
                tuple(sorted(self.arr_map.items())))


def functor_problems(fun: GroupoidFunctor) -> list[str]:
    out = []
    y, x = fun.source, fun.target
    if set(fun.obj_map) != set(y.objects) or set(fun.arr_map) != set(y.arrows):
        return ["tables are not total over the source"]
    for a in y.arrows:
        fa = fun.arr_map[a]
        if fa not in x.arr_src:
            out.append(f"image {fa!r} is not a target arrow")
        elif (x.arr_src[fa] != fun.obj_map[y.arr_src[a]]
              or x.arr_dst[fa] != fun.obj_map[y.arr_dst[a]]):
            out.append(f"arrow {a!r} image has wrong endpoints")
    if out:
        return out
    for o in y.objects:
        if fun.arr_map[y.unit[o]] != x.unit[fun.obj_map[o]]:
            out.append(f"unit at {o!r} not preserved")
    for (b, a), ba in y.comp.items():
        if x.comp[(fun.arr_map[b], fun.arr_map[a])] != fun.arr_map[ba]:
            out.append(f"composite ({b!r}, {a!r}) not preserved")
    return out


def identity_gfunctor(g: FiniteGroupoid) -> GroupoidFunctor:
    return GroupoidFunctor(g, g, {o: o for o in g.objects},
                           {a: a for a in g.arrows})


def compose_gfunctors(g: GroupoidFunctor, f: GroupoidFunctor) -> GroupoidFunctor:
    """g∘f (f applied first)."""
    if f.target is not g.source:
        raise StructureError("functors not composable")
    return GroupoidFunctor(
        f.source, g.target,
        {o: g.obj_map[f.obj_map[o]] for o in f.source.objects},
        {a: g.arr_map[f.arr_map[a]] for a in f.source.arrows},
    )


def enumerate_gfunctors(y: FiniteGroupoid, x: FiniteGroupoid) -> list[GroupoidFunctor]:
    """All functors y → x, sorted by their table signature."""
    units = {y.unit[o] for o in y.objects}
    out = []
    for images in itertools.product(x.objects, repeat=len(y.objects)):
        obj_map = dict(zip(y.objects, images))
        slots: list[tuple[str, ...]] = []
        for a in y.arrows:
            if a in units:
                slots.append((x.unit[obj_map[y.arr_src[a]]],))
            else:
                slots.append(x.hom(obj_map[y.arr_src[a]], obj_map[y.arr_dst[a]]))
        if not all(slots):
            continue
        for choice in itertools.product(*slots):
            arr_map = dict(zip(y.arrows, choice))
            if all(x.comp[(arr_map[b], arr_map[a])] == arr_map[ba]
                   for (b, a), ba in y.comp.items()):
                out.append(GroupoidFunctor(y, x, obj_map, arr_map))
    return sorted(out, key=GroupoidFunctor.signature)


def natural_transformations(f: GroupoidFunctor, g: GroupoidFunctor) -> list[dict[str, str]]:
    """All natural families f ⇒ g, each a dict object → target arrow."""
    y, x = f.source, f.target
    slots = [x.hom(f.obj_map[o], g.obj_map[o]) for o in y.objects]
    out = []
    for choice in itertools.product(*slots):
        eta = dict(zip(y.objects, choice))
        if all(x.comp[(eta[y.arr_dst[a]], f.arr_map[a])]
               == x.comp[(g.arr_map[a], eta[y.arr_src[a]])]
               for a in y.arrows):
            out.append(eta)
    return sorted(out, key=lambda e: tuple(sorted(e.items())))


# ---------------------------------------------------------------------------
# Morita equivalence


def is_essentially_surjective(fun: GroupoidFunctor) -> bool:
    """Every target object receives an arrow from the image of the object map."""
    x = fun.target
    image = set(fun.obj_map.values())
    return all(
        any(x.hom(src, x0) for src in image)
        for x0 in x.objects
    )


def is_fully_faithful(fun: GroupoidFunctor) -> bool:
    """Is y₁ ↦ (s y₁, t y₁, φ y₁) a bijection onto the comparison fiber set?"""
    y, x = fun.source, fun.target
    gamma = {a: (y.arr_src[a], y.arr_dst[a], fun.arr_map[a]) for a in y.arrows}
    fiber = {(o1, o2, x1)
             for o1, o2 in itertools.product(y.objects, y.objects)
             for x1 in x.hom(fun.obj_map[o1], fun.obj_map[o2])}
    injective = len(set(gamma.values())) == len(gamma)
    surjective = set(gamma.values()) == fiber
    return injective and surjective


def is_morita(fun: GroupoidFunctor) -> bool:
    return is_essentially_surjective(fun) and is_fully_faithful(fun)


@dataclass
class MoritaCancellation:
    """Outcome of the two-out-of-six style cancellation for Morita maps."""

    vacuous: bool
    verdicts: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.vacuous or all(self.verdicts.values())


def morita_two_out_of_six(xi: GroupoidFunctor, psi: GroupoidFunctor,
                          phi: GroupoidFunctor) -> MoritaCancellation:
    """From phi∘psi and psi∘xi Morita, conclude all three factors are.

    The chain is xi: U→Z, psi: Z→Y, phi: Y→X; when either composite fails
    to be Morita the check is vacuous.
    """
    if xi.target is not psi.source or psi.target is not phi.source:
        raise StructureError("functors do not form a composable chain")
    if not (is_morita(compose_gfunctors(phi, psi))
            and is_morita(compose_gfunctors(psi, xi))):
        return MoritaCancellation(vacuous=True)
    return MoritaCancellation(False, {
        "phi": is_morita(phi),
        "psi": is_morita(psi),
        "xi": is_morita(xi),
    })


# ---------------------------------------------------------------------------
# the catalog 2-category


def groupoid_twocat(catalog: list[FiniteGroupoid]) -> tuple[TwoCat, frozenset[str]]:
    """All functors and natural transformations between catalog groupoids.

    Returns the strict 2-category (objects = groupoid names, 1-cells =
    functors, 2-cells = natural transformations) and the class of 1-cells
    that are Morita equivalences.
    """
    by_name = {}
    for g in catalog:
        if g.name in by_name:
            raise StructureError(f"duplicate groupoid name {g.name!r}")
        by_name[g.name] = g
    names = sorted(by_name)

    funs: dict[str, GroupoidFunctor] = {}
    by_sig: dict[tuple, str] = {}
    for a, b in itertools.product(names, names):
        for k, fun in enumerate(enumerate_gfunctors(by_name[a], by_name[b])):
            fid = f"{a}>{b}#{k}"
            funs[fid] = fun
            by_sig[fun.signature()] = fid

    mor_src = {fid: fun.source.name for fid, fun in funs.items()}
    mor_dst = {fid: fun.target.name for fid, fun in funs.items()}
    id1 = {n: by_sig[identity_gfunctor(by_name[n]).signature()] for n in names}
    comp1 = {}
    for gid, fid in itertools.product(funs, funs):
        if mor_dst[fid] == mor_src[gid]:
            comp1[(gid, fid)] = by_sig[
                compose_gfunctors(funs[gid], funs[fid]).signature()]

    cells: dict[str, tuple[str, str, tuple]] = {}  # cid -> (src fid, dst fid, items)
    by_nt: dict[tuple[str, str, tuple], str] = {}
    id2 = {}
    for fid, gid in itertools.product(sorted(funs), sorted(funs)):
        if (mor_src[fid], mor_dst[fid]) != (mor_src[gid], mor_dst[gid]):
            continue
        for j, eta in enumerate(natural_transformations(funs[fid], funs[gid])):
            cid = f"{fid}~{gid}.{j}"
            items = tuple(sorted(eta.items()))
            cells[cid] = (fid, gid, items)
            by_nt[(fid, gid, items)] = cid
    for fid, fun in funs.items():
        ident = tuple(sorted((o, fun.target.unit[fun.obj_map[o]])
                             for o in fun.source.objects))
        id2[fid] = by_nt[(fid, fid, ident)]

    vcomp = {}
    hcomp = {}
    for bid, (bf, bg, bitems) in cells.items():
        for aid, (af, ag, aitems) in cells.items():
            if ag == bf:  # vertically composable: a then b
                x = funs[af].target
                eta = dict(aitems)
                etap = dict(bitems)
                comp_items = tuple(sorted(
                    (o, x.comp[(etap[o], eta[o])]) for o in eta))
                vcomp[(bid, aid)] = by_nt[(af, bg, comp_items)]
            if mor_dst[af] == mor_src[bf]:  # horizontally composable: a earlier
                src_gpd = funs[af].source
                x = funs[bf].target
                eta = dict(aitems)
                etap = dict(bitems)
                g1 = funs[bf]
                f2 = funs[ag]
                comp_items = tuple(sorted(
                    (o, x.comp[(etap[f2.obj_map[o]], g1.arr_map[eta[o]])])
                    for o in src_gpd.objects))
                hcomp[(bid, aid)] = by_nt[(
                    comp1[(bf, af)], comp1[(bg, ag)], comp_items)]

    c = TwoCat(
        objects=tuple(names),
        mor_src=mor_src,
        mor_dst=mor_dst,
        comp1=comp1,
        id1=id1,
        cell_src={cid: fid for cid, (fid, _, _) in cells.items()},
        cell_dst={cid: gid for cid, (_, gid, _) in cells.items()},
        vcomp_table=vcomp,
        hcomp_table=hcomp,
        id2=id2,
    )
    w_morita = frozenset(fid for fid, fun in funs.items() if is_morita(fun))
    return c, w_morita


def morita_saturated_check(catalog: list[FiniteGroupoid]) -> bool:
    """Is the Morita class saturation-stable inside this catalog?

    This is catalog-relative: saturation witnesses are searched only among
    the enumerated functors, so enlarging the catalog can in principle
    change the verdict.
    """
    from .saturation import saturate

    c, w_morita = groupoid_twocat(catalog)
    return saturate(c, w_morita) == w_morita


# ---------------------------------------------------------------------------
# shipped groupoids


def unit_groupoid() -> FiniteGroupoid:
    return FiniteGroupoid("Unit", ("1",), {"e1": "1"}, {"e1": "1"},
                          {("e1", "e1"): "e1"}, {"e1": "e1"}, {"1": "e1"})


def pair_groupoid(n: int = 2, name: str | None = None) -> FiniteGroupoid:
    """The contractible groupoid: exactly one arrow between any two objects."""
    objs = tuple(str(i) for i in range(1, n + 1))
    arrows = {f"p{i}{j}": (i, j) for i in objs for j in objs}
    comp = {}
    for (a, (i, j)), (b, (k, l)) in itertools.product(arrows.items(), arrows.items()):
        if l == i:
            comp[(a, b)] = f"p{k}{j}"
    return FiniteGroupoid(
        name or f"Pair{n}", objs,
        {a: ij[0] for a, ij in arrows.items()},
        {a: ij[1] for a, ij in arrows.items()},
        comp,
        {f"p{i}{j}": f"p{j}{i}" for i in objs for j in objs},
        {i: f"p{i}{i}" for i in objs},
    )


def discrete_groupoid(n: int = 2, name: str | None = None) -> FiniteGroupoid:
    """Only identity arrows."""
    objs = tuple(str(i) for i in range(1, n + 1))
    units = {i: f"e{i}" for i in objs}
    return FiniteGroupoid(
        name or f"Disc{n}", objs,
        {u: i for i, u in units.items()},
        {u: i for i, u in units.items()},
        {(u, u): u for u in units.values()},
        {u: u for u in units.values()},
        units,
    )


CATALOGS = {
    "unit": lambda: [unit_groupoid()],
    "unit-pair": lambda: [unit_groupoid(), pair_groupoid(2)],
    "unit-pair-disc": lambda: [unit_groupoid(), pair_groupoid(2), discrete_groupoid(2)],
}
