"""Strict 2-functors, induced maps between localizations, and X-condition checks.

A `StrictTwoFunctor` is three total tables preserving every operation on
the nose; its induced map on localizations sends a span through the
1-cell table and a 2-cell representative through all three tables.  The
induced cell map is checked to be constant on refinement classes at
construction time, so a successful `induce` call is itself evidence of
well-definedness on the given input.

`weak_equivalence_report` checks the four finite biequivalence conditions
(essential surjectivity on objects up to internal equivalence, local
essential surjectivity on 1-cells up to invertible 2-cell, and local
bijectivity on 2-cells) against enumerable views of either an ambient
2-category or a localization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from .core import (
    InternalInconsistency,
    StructureError,
    TwoCat,
    ValidationReport,
    internal_equivalences,
)
from .fractions import (
    CellRep,
    ChoiceTable,
    FractionCell,
    Localization,
    Span,
    all_spans,
    build_choices,
    cell_from_rep,
    compose_fractions,
    hom_fraction_cells,
    identity_fraction_cell,
    is_internal_equiv_closed_form,
    is_invertible_fraction_cell,
    localize,
)
from .saturation import _as_class, check_bf, saturate


@dataclass(eq=False)
class StrictTwoFunctor:
    """Tables (objects, 1-cells, 2-cells) preserving all structure strictly."""

    source: TwoCat
    target: TwoCat
    f0: dict[str, str]
    f1: dict[str, str]
    f2: dict[str, str]

    def map_class(self, w) -> frozenset[str]:
        return frozenset(self.f1[m] for m in _as_class(self.source, w))


def identity_functor(c: TwoCat) -> StrictTwoFunctor:
    return StrictTwoFunctor(c, c, {o: o for o in c.objects},
                            {f: f for f in c.mors}, {a: a for a in c.cells})


def collapse_functor(c: TwoCat, point: TwoCat) -> StrictTwoFunctor:
    """The unique functor to a one-object 2-category with identity cells only."""
    if len(point.objects) != 1 or len(point.mors) != 1 or len(point.cells) != 1:
        raise StructureError("collapse target must be the terminal 2-category")
    (obj,) = point.objects
    return StrictTwoFunctor(
        c, point,
        {o: obj for o in c.objects},
        {f: point.id1[obj] for f in c.mors},
        {a: point.id2[point.id1[obj]] for a in c.cells},
    )


def validate_functor(fun: StrictTwoFunctor) -> ValidationReport:
    """Exhaustive strict-preservation check; gaps are structural failures."""
    rep = ValidationReport()
    s, t = fun.source, fun.target
    if set(fun.f0) != set(s.objects):
        rep.structural.append("object table does not match the source objects")
    if set(fun.f1) != set(s.mors):
        rep.structural.append("1-cell table does not match the source 1-cells")
    if set(fun.f2) != set(s.cells):
        rep.structural.append("2-cell table does not match the source 2-cells")
    if not (set(fun.f0.values()) <= set(t.objects)
            and set(fun.f1.values()) <= set(t.mor_src)
            and set(fun.f2.values()) <= set(t.cell_src)):
        rep.structural.append("table values are not cells of the target")
    if rep.structural:
        return rep

    for f in s.mors:
        if t.mor_src[fun.f1[f]] != fun.f0[s.mor_src[f]] or \
           t.mor_dst[fun.f1[f]] != fun.f0[s.mor_dst[f]]:
            rep.failures.append(("1-cell boundaries", repr(f)))
    for a in s.cells:
        if t.cell_src[fun.f2[a]] != fun.f1[s.cell_src[a]] or \
           t.cell_dst[fun.f2[a]] != fun.f1[s.cell_dst[a]]:
            rep.failures.append(("2-cell boundaries", repr(a)))
    for o in s.objects:
        if fun.f1[s.id1[o]] != t.id1[fun.f0[o]]:
            rep.failures.append(("identity 1-cells", repr(o)))
    for f in s.mors:
        if fun.f2[s.id2[f]] != t.id2[fun.f1[f]]:
            rep.failures.append(("identity 2-cells", repr(f)))
    for (g, f), gf in s.comp1.items():
        if t.compose1(fun.f1[g], fun.f1[f]) != fun.f1[gf]:
            rep.failures.append(("compose1", repr((g, f))))
    for (b, a), ba in s.vcomp_table.items():
        if t.vcomp(fun.f2[b], fun.f2[a]) != fun.f2[ba]:
            rep.failures.append(("vcomp", repr((b, a))))
    for (b, a), ba in s.hcomp_table.items():
        if t.hcomp(fun.f2[b], fun.f2[a]) != fun.f2[ba]:
            rep.failures.append(("hcomp", repr((b, a))))
    return rep


def preserves_into(fun: StrictTwoFunctor, w_src, target_class) -> bool:
    """Does the 1-cell image of w_src land inside target_class?"""
    return fun.map_class(w_src) <= _as_class(fun.target, target_class)


@dataclass
class SaturationCompat:
    """Both image conditions of the saturation-compatibility equivalence."""

    image_in_target_sat: bool       # F1(W_src) ⊆ sat(W_dst)
    sat_image_in_target_sat: bool   # F1(sat(W_src)) ⊆ sat(W_dst)
    src_saturation: frozenset[str]
    dst_saturation: frozenset[str]

    @property
    def ok(self) -> bool:
        return self.image_in_target_sat


def saturation_compatibility(fun: StrictTwoFunctor, w_src, w_dst) -> SaturationCompat:
    """Check F1(W) ⊆ sat(W') together with its a-priori-stronger variant.

    The two inclusions are provably equivalent for BF-passing inputs, so a
    divergence is an internal inconsistency, not a verdict.
    """
    for c, w in ((fun.source, w_src), (fun.target, w_dst)):
        bf = check_bf(c, w)
        if not bf.ok:
            raise StructureError(f"class fails BF axioms: {bf.counterexamples}")
    src_sat = saturate(fun.source, w_src)
    dst_sat = saturate(fun.target, w_dst)
    clause_i = preserves_into(fun, w_src, dst_sat)
    clause_ii = preserves_into(fun, src_sat, dst_sat)
    if clause_i != clause_ii:
        raise InternalInconsistency(
            "saturation-compatibility clauses disagree: "
            f"image⊆sat={clause_i} but sat-image⊆sat={clause_ii}")
    return SaturationCompat(clause_i, clause_ii, src_sat, dst_sat)


# ---------------------------------------------------------------------------
# the induced map between localizations


@dataclass(eq=False)
class InducedPseudofunctor:
    """Image of a strict functor on localized 1- and 2-cells."""

    functor: StrictTwoFunctor
    source_loc: Localization
    target_loc: Localization
    _compositors: dict[tuple[Span, Span], FractionCell] = field(default_factory=dict)

    def map_object(self, a: str) -> str:
        return self.functor.f0[a]

    def map_span(self, s: Span) -> Span:
        f = self.functor
        return Span(f.f0[s.apex], f.f1[s.w], f.f1[s.f])

    def map_rep(self, rep: CellRep) -> CellRep:
        f = self.functor
        return CellRep(self.map_span(rep.src_span), self.map_span(rep.dst_span),
                       f.f0[rep.apex], f.f1[rep.v1], f.f1[rep.v2],
                       f.f2[rep.alpha], f.f2[rep.beta])

    def map_cell(self, cell: FractionCell) -> FractionCell:
        t = self.target_loc
        return cell_from_rep(t.c, t.w, self.map_rep(cell.canonical))

    def compositor(self, s: Span, t: Span) -> FractionCell:
        """Invertible witness G(s;t) ⇒ G(s);G(t) for a composable pair."""
        key = (s, t)
        if key not in self._compositors:
            left = self.map_span(self.source_loc.compose(s, t))
            right = self.target_loc.compose(self.map_span(s), self.map_span(t))
            tl = self.target_loc
            if left == right:
                witness = identity_fraction_cell(tl.c, tl.w, left)
            else:
                witness = next(
                    (cand for cand in hom_fraction_cells(tl.c, tl.w, left, right)
                     if is_invertible_fraction_cell(tl.ch, cand)), None)
                if witness is None:
                    raise InternalInconsistency(
                        f"no invertible compositor between {left} and {right}")
            self._compositors[key] = witness
        return self._compositors[key]


def induce(fun: StrictTwoFunctor, w_src, ch_dst: ChoiceTable) -> InducedPseudofunctor:
    """Push a strict functor down to the localizations.

    Requires the 1-cell image of w_src to land in ch_dst's class and the
    target table to honour C3.  The cell map is verified to be constant on
    every refinement class of every source hom-pair before returning.
    """
    w_src = _as_class(fun.source, w_src)
    if ch_dst.c is not fun.target:
        raise StructureError("choice table does not belong to the target 2-category")
    if not ch_dst.honors_c3:
        raise StructureError("target choice table must honour C3")
    if not preserves_into(fun, w_src, ch_dst.w):
        escaped = sorted(fun.map_class(w_src) - ch_dst.w)
        raise StructureError(f"1-cell image escapes the target class: {escaped}")

    src_loc = localize(fun.source, w_src)
    dst_loc = Localization(fun.target, ch_dst.w, ch_dst)
    ind = InducedPseudofunctor(fun, src_loc, dst_loc)

    objs = sorted(fun.source.objects)
    for a, b in itertools.product(objs, objs):
        spans = src_loc.spans(a, b)
        for s1, s2 in itertools.product(spans, spans):
            for cell in src_loc.hom_cells(s1, s2):
                images = {cell_from_rep(dst_loc.c, dst_loc.w, ind.map_rep(r))
                          for r in cell.members}
                if len(images) != 1:
                    raise InternalInconsistency(
                        "induced cell map is not constant on the class of "
                        f"{cell.canonical}: {len(images)} distinct images")
    return ind


def comparison_to_saturation(c: TwoCat, w) -> InducedPseudofunctor:
    """The canonical localization-comparison C[W⁻¹] → C[W_sat⁻¹]."""
    w = _as_class(c, w)
    ch_sat = build_choices(c, saturate(c, w))
    return induce(identity_functor(c), w, ch_sat)


# ---------------------------------------------------------------------------
# X-condition (weak equivalence) checking over enumerable views


class AmbientView:
    """Enumerable-bicategory facade over a plain TwoCat."""

    def __init__(self, c: TwoCat):
        self.c = c

    @property
    def objects(self) -> tuple[str, ...]:
        return self.c.objects

    def ones(self, a: str, b: str):
        return self.c.hom1(a, b)

    def twos(self, f, g):
        return self.c.hom2(f, g)

    def invertible(self, cell) -> bool:
        return self.c.is_invertible2(cell)

    @cached_property
    def _equivs(self) -> frozenset[str]:
        return internal_equivalences(self.c)

    def equivalent_objects(self, a: str, b: str) -> bool:
        return any(e in self._equivs for e in self.c.hom1(a, b))


class LocalizationView:
    """Enumerable-bicategory facade over a Localization."""

    def __init__(self, loc: Localization):
        self.loc = loc

    @property
    def objects(self) -> tuple[str, ...]:
        return self.loc.objects

    def ones(self, a: str, b: str):
        return self.loc.spans(a, b)

    def twos(self, s, t):
        return self.loc.hom_cells(s, t)

    def invertible(self, cell) -> bool:
        return is_invertible_fraction_cell(self.loc.ch, cell)

    def equivalent_objects(self, a: str, b: str) -> bool:
        return any(is_internal_equiv_closed_form(self.loc.c, self.loc.w, s)
                   for s in self.loc.spans(a, b))


@dataclass
class WeakEquivalenceReport:
    """Verdicts for the four finite biequivalence conditions."""

    verdicts: dict[str, bool] = field(default_factory=dict)
    counterexamples: dict[str, tuple] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())

    def lines(self) -> list[str]:
        return [f"{k}: {'pass' if v else 'FAIL ' + repr(self.counterexamples.get(k))}"
                for k, v in self.verdicts.items()]


def weak_equivalence_report(
    src_view, dst_view,
    map_object: Callable, map_one: Callable, map_two: Callable,
) -> WeakEquivalenceReport:
    rep = WeakEquivalenceReport()

    rep.verdicts["obj_surjective_up_to_equiv"] = True
    for y in dst_view.objects:
        if not any(dst_view.equivalent_objects(map_object(x), y)
                   for x in src_view.objects):
            rep.verdicts["obj_surjective_up_to_equiv"] = False
            rep.counterexamples["obj_surjective_up_to_equiv"] = (y,)
            break

    rep.verdicts["mor_surjective_up_to_iso"] = True
    rep.verdicts["cell_injective"] = True
    rep.verdicts["cell_surjective"] = True
    for a, b in itertools.product(src_view.objects, src_view.objects):
        src_ones = src_view.ones(a, b)
        for g in dst_view.ones(map_object(a), map_object(b)):
            if rep.verdicts["mor_surjective_up_to_iso"] and not any(
                dst_view.invertible(t)
                for f in src_ones
                for t in dst_view.twos(map_one(f), g)
            ):
                rep.verdicts["mor_surjective_up_to_iso"] = False
                rep.counterexamples["mor_surjective_up_to_iso"] = (a, b, g)
        for f1, f2 in itertools.product(src_ones, src_ones):
            cells = src_view.twos(f1, f2)
            images = [map_two(al) for al in cells]
            if rep.verdicts["cell_injective"]:
                for (a1, i1), (a2, i2) in itertools.combinations(
                        zip(cells, images), 2):
                    if i1 == i2:
                        rep.verdicts["cell_injective"] = False
                        rep.counterexamples["cell_injective"] = (f1, f2, a1, a2)
                        break
            if rep.verdicts["cell_surjective"]:
                image_set = set(images)
                for t in dst_view.twos(map_one(f1), map_one(f2)):
                    if t not in image_set:
                        rep.verdicts["cell_surjective"] = False
                        rep.counterexamples["cell_surjective"] = (f1, f2, t)
                        break
    return rep


def x_conditions_for_functor(fun: StrictTwoFunctor) -> WeakEquivalenceReport:
    return weak_equivalence_report(
        AmbientView(fun.source), AmbientView(fun.target),
        lambda o: fun.f0[o], lambda f: fun.f1[f], lambda a: fun.f2[a])


def x_conditions_for_induced(ind: InducedPseudofunctor) -> WeakEquivalenceReport:
    return weak_equivalence_report(
        LocalizationView(ind.source_loc), LocalizationView(ind.target_loc),
        ind.map_object, ind.map_span, ind.map_cell)


# ---------------------------------------------------------------------------
# choice-table independence


@dataclass
class ChoiceComparison:
    pairs_checked: int = 0
    unconnected: list[tuple[Span, Span]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.unconnected


def compare_choice_tables(c: TwoCat, w, ch1: ChoiceTable, ch2: ChoiceTable) -> ChoiceComparison:
    """Connect every pair of composites computed with two different tables.

    The composites present the same localized 1-cell, so an invertible
    comparison cell must exist; any pair without one is reported.
    """
    w = _as_class(c, w)
    out = ChoiceComparison()
    objs = sorted(c.objects)
    for a, b, d in itertools.product(objs, objs, objs):
        for s in all_spans(c, w, a, b):
            for t in all_spans(c, w, b, d):
                out.pairs_checked += 1
                left = compose_fractions(ch1, s, t)
                right = compose_fractions(ch2, s, t)
                if left == right:
                    continue
                witness = next(
                    (cand for cand in hom_fraction_cells(c, w, left, right)
                     if is_invertible_fraction_cell(ch1, cand)), None)
                if witness is None:
                    out.unconnected.append((s, t))
    return out
