"""Localization of a finite strict 2-category at a class W of 1-cells.

1-cells of the localized bicategory are spans (apex, w, f) with the
denominator w ∈ W pointing back at the source; 2-cells are equivalence
classes of representatives

    (apex A3, v1, v2, alpha: w1∘v1 ⇒ w2∘v2, beta: f1∘v1 ⇒ f2∘v2)

with w1∘v1 ∈ W and alpha invertible (beta is unconstrained).  Two
representatives are identified when they are connected by a chain of
refinements r ↦ (E, v1∘p, v2∘p, alpha∗i_p, beta∗i_p) along any
p: E → A3 keeping the denominator leg in W; classes are computed by
exhaustive closure, which is finite here.

Composition of spans is driven by a `ChoiceTable` assigning a filler to
every cospan (f, v ∈ W); the table honours the normalisations C1 (f an
identity), C2 (v an identity) and optionally C3 (f = v ∈ W), which make
identity spans strict units.  Vertical composition and the two
whiskerings are built from fresh filler/lift searches; determinism comes
from the fixed lexicographic search order underneath.

Argument order is diagrammatic throughout: `compose_fractions(ch, s, t)`
applies s first, and `vcomp_fraction(ch, c1, c2)` applies c1 first.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple, Optional

from .core import InternalInconsistency, StructureError, TwoCat
from .saturation import _as_class, fill_cospan, lift_cell, saturate


class Span(NamedTuple):
    """A 1-cell of the localization: denominator w, numerator f."""

    apex: str
    w: str
    f: str


class CellRep(NamedTuple):
    """One representative of a 2-cell between `src_span` and `dst_span`."""

    src_span: Span
    dst_span: Span
    apex: str
    v1: str
    v2: str
    alpha: str
    beta: str


def span_src(c: TwoCat, s: Span) -> str:
    return c.mor_dst[s.w]


def span_dst(c: TwoCat, s: Span) -> str:
    return c.mor_dst[s.f]


def span_problems(c: TwoCat, w, s: Span) -> list[str]:
    out = []
    if s.apex not in set(c.objects):
        return [f"apex {s.apex!r} is not an object"]
    for leg in (s.w, s.f):
        if leg not in c.mor_src:
            out.append(f"leg {leg!r} is not a 1-cell")
        elif c.mor_src[leg] != s.apex:
            out.append(f"leg {leg!r} does not start at the apex")
    if not out and s.w not in w:
        out.append(f"denominator {s.w!r} is not in W")
    return out


def identity_span(c: TwoCat, a: str) -> Span:
    return Span(a, c.id1[a], c.id1[a])


def u_mor(c: TwoCat, w, f: str) -> Span:
    """The canonical span presenting an ambient 1-cell."""
    if f not in c.mor_src:
        raise StructureError(f"{f!r} is not a 1-cell")
    return Span(c.mor_src[f], c.id1[c.mor_src[f]], f)


def rep_problems(c: TwoCat, w, rep: CellRep) -> list[str]:
    out = span_problems(c, w, rep.src_span) + span_problems(c, w, rep.dst_span)
    if out:
        return out
    s1, s2 = rep.src_span, rep.dst_span
    if span_src(c, s1) != span_src(c, s2) or span_dst(c, s1) != span_dst(c, s2):
        return ["source and target spans are not parallel"]
    for v, target in ((rep.v1, s1.apex), (rep.v2, s2.apex)):
        if v not in c.mor_src or c.mor_src[v] != rep.apex or c.mor_dst[v] != target:
            out.append(f"leg {v!r} is not a 1-cell {rep.apex!r} → {target!r}")
    if out:
        return out
    denom = c.compose1(s1.w, rep.v1)
    if denom not in w:
        out.append(f"denominator composite {denom!r} is not in W")
    if c.cell_src.get(rep.alpha) != denom or c.cell_dst.get(rep.alpha) != c.compose1(s2.w, rep.v2):
        out.append(f"alpha {rep.alpha!r} has wrong boundary")
    elif not c.is_invertible2(rep.alpha):
        out.append(f"alpha {rep.alpha!r} is not invertible")
    if (c.cell_src.get(rep.beta) != c.compose1(s1.f, rep.v1)
            or c.cell_dst.get(rep.beta) != c.compose1(s2.f, rep.v2)):
        out.append(f"beta {rep.beta!r} has wrong boundary")
    return out


# ---------------------------------------------------------------------------
# 2-cell classes


@lru_cache(maxsize=None)
def _hom_partition(
    c: TwoCat, w: frozenset, s1: Span, s2: Span
) -> dict[CellRep, frozenset[CellRep]]:
    """Partition all valid representatives s1 ⇒ s2 by refinement-connectivity."""
    reps: list[CellRep] = []
    for apex in sorted(c.objects):
        for v1 in c.hom1(apex, s1.apex):
            denom = c.compose1(s1.w, v1)
            if denom not in w:
                continue
            for v2 in c.hom1(apex, s2.apex):
                alphas = c.invertible_cells(denom, c.compose1(s2.w, v2))
                if not alphas:
                    continue
                betas = c.hom2(c.compose1(s1.f, v1), c.compose1(s2.f, v2))
                for alpha, beta in itertools.product(alphas, betas):
                    reps.append(CellRep(s1, s2, apex, v1, v2, alpha, beta))

    index = set(reps)
    parent = {r: r for r in reps}

    def find(r):
        while parent[r] != r:
            parent[r] = parent[parent[r]]
            r = parent[r]
        return r

    for r in reps:
        for p in _refinement_legs(c, w, s1, r):
            refined = _refine(c, r, p)
            if refined in index:
                ra, rb = find(r), find(refined)
                if ra != rb:
                    parent[rb] = ra

    classes: dict[CellRep, set[CellRep]] = {}
    for r in reps:
        classes.setdefault(find(r), set()).add(r)
    return {r: frozenset(classes[find(r)]) for r in reps}


def _refinement_legs(c: TwoCat, w, s1: Span, rep: CellRep):
    """All p along which rep may be refined (denominator leg stays in W)."""
    for apex in sorted(c.objects):
        for p in c.hom1(apex, rep.apex):
            if c.compose1(c.compose1(s1.w, rep.v1), p) in w:
                yield p


def _refine(c: TwoCat, rep: CellRep, p: str) -> CellRep:
    return CellRep(
        rep.src_span, rep.dst_span, c.mor_src[p],
        c.compose1(rep.v1, p), c.compose1(rep.v2, p),
        c.whisker_right(rep.alpha, p), c.whisker_right(rep.beta, p),
    )


@dataclass(frozen=True)
class FractionCell:
    """A 2-cell of the localization: a full refinement-equivalence class."""

    src_span: Span
    dst_span: Span
    canonical: CellRep
    members: frozenset[CellRep] = field(compare=False, repr=False)


def cell_from_rep(c: TwoCat, w, rep: CellRep) -> FractionCell:
    w = _as_class(c, w)
    problems = rep_problems(c, w, rep)
    if problems:
        raise StructureError("; ".join(problems))
    members = _hom_partition(c, w, rep.src_span, rep.dst_span)[rep]
    return FractionCell(rep.src_span, rep.dst_span, min(members), members)


def hom_fraction_cells(c: TwoCat, w, s1: Span, s2: Span) -> tuple[FractionCell, ...]:
    """All 2-cells s1 ⇒ s2, ordered by canonical representative."""
    w = _as_class(c, w)
    part = _hom_partition(c, w, s1, s2)
    seen = sorted({min(m): m for m in part.values()}.items())
    return tuple(FractionCell(s1, s2, can, m) for can, m in seen)


def cells_equal(c: TwoCat, w, r1: CellRep, r2: CellRep) -> bool:
    """Do two representatives present the same localized 2-cell?"""
    if (r1.src_span, r1.dst_span) != (r2.src_span, r2.dst_span):
        raise StructureError("representatives do not share source/target spans")
    w = _as_class(c, w)
    for r in (r1, r2):
        problems = rep_problems(c, w, r)
        if problems:
            raise StructureError("; ".join(problems))
    return r2 in _hom_partition(c, w, r1.src_span, r1.dst_span)[r1]


def equality_chain(c: TwoCat, w, r1: CellRep, r2: CellRep) -> Optional[list[CellRep]]:
    """A witness path r1 ~ ... ~ r2 of single refinements (either direction)."""
    if not cells_equal(c, w, r1, r2):
        return None
    w = _as_class(c, w)
    part = _hom_partition(c, w, r1.src_span, r1.dst_span)
    nodes = part[r1]
    edges: dict[CellRep, set[CellRep]] = {r: set() for r in nodes}
    for r in nodes:
        for p in _refinement_legs(c, w, r1.src_span, r):
            refined = _refine(c, r, p)
            if refined in edges:
                edges[r].add(refined)
                edges[refined].add(r)
    prev: dict[CellRep, CellRep] = {r1: r1}
    queue = deque([r1])
    while queue:
        r = queue.popleft()
        if r == r2:
            path = [r]
            while path[-1] != r1:
                path.append(prev[path[-1]])
            return path[::-1]
        for nxt in sorted(edges[r]):
            if nxt not in prev:
                prev[nxt] = r
                queue.append(nxt)
    raise InternalInconsistency("class members not connected by refinements")


def identity_fraction_cell(c: TwoCat, w, s: Span) -> FractionCell:
    rep = CellRep(s, s, s.apex, c.id1[s.apex], c.id1[s.apex], c.id2[s.w], c.id2[s.f])
    return cell_from_rep(c, w, rep)


def u_cell(c: TwoCat, w, gamma: str) -> FractionCell:
    """The canonical 2-cell presenting an ambient 2-cell."""
    if gamma not in c.cell_src:
        raise StructureError(f"{gamma!r} is not a 2-cell")
    f, g = c.cell_src[gamma], c.cell_dst[gamma]
    a = c.mor_src[f]
    rep = CellRep(u_mor(c, w, f), u_mor(c, w, g), a, c.id1[a], c.id1[a],
                  c.id2[c.id1[a]], gamma)
    return cell_from_rep(c, w, rep)


# ---------------------------------------------------------------------------
# choice tables and span composition


@dataclass(eq=False)
class ChoiceTable:
    """A filler for every cospan (f, v ∈ W), normalised per C1/C2/(C3)."""

    c: TwoCat
    w: frozenset[str]
    entries: dict[tuple[str, str], tuple[str, str, str, str]]
    honors_c1: bool = True
    honors_c2: bool = True
    honors_c3: bool = True

    def entry(self, f: str, v: str) -> tuple[str, str, str, str]:
        try:
            return self.entries[(f, v)]
        except KeyError:
            raise StructureError(f"no choice entry for cospan ({f!r}, {v!r})") from None


def build_choices(c: TwoCat, w, enforce_c3: bool = True) -> ChoiceTable:
    """Choose a filler (A'', v' ∈ W, f', invertible rho) per cospan (f, v ∈ W)."""
    w = _as_class(c, w)
    identities = set(c.id1.values())
    entries: dict[tuple[str, str], tuple[str, str, str, str]] = {}
    for f in c.mors:
        for v in sorted(w):
            if c.mor_dst[v] != c.mor_dst[f]:
                continue
            if f in identities:  # C1: pull the cospan back along v itself
                entries[(f, v)] = (c.mor_src[v], v, c.id1[c.mor_src[v]], c.id2[v])
            elif v in identities:  # C2: nothing to invert
                entries[(f, v)] = (c.mor_src[f], c.id1[c.mor_src[f]], f, c.id2[f])
            elif enforce_c3 and f == v:  # C3: a W-leg against itself
                a = c.mor_src[f]
                entries[(f, v)] = (a, c.id1[a], c.id1[a], c.id2[f])
            else:
                entries[(f, v)] = fill_cospan(c, w, f, v)
    return ChoiceTable(c, w, entries, True, True, enforce_c3)


def compose_fractions(ch: ChoiceTable, s: Span, t: Span) -> Span:
    """The composite span (s applied first, then t)."""
    c = ch.c
    if span_dst(c, s) != span_src(c, t):
        raise StructureError(f"spans {s} and {t} are not composable")
    apex, v2, f2, _rho = ch.entry(s.f, t.w)
    return Span(apex, c.compose1(s.w, v2), c.compose1(t.f, f2))


# ---------------------------------------------------------------------------
# vertical composition and whiskering of fraction cells


def _cell_from_built_rep(c: TwoCat, w, rep: CellRep, what: str) -> FractionCell:
    problems = rep_problems(c, w, rep)
    if problems:
        raise InternalInconsistency(f"{what} produced an invalid representative: "
                                    + "; ".join(problems))
    members = _hom_partition(c, w, rep.src_span, rep.dst_span)[rep]
    return FractionCell(rep.src_span, rep.dst_span, min(members), members)


def vcomp_fraction(ch: ChoiceTable, c1: FractionCell, c2: FractionCell) -> FractionCell:
    """Vertical composite (c1 applied first)."""
    c, w = ch.c, ch.w
    if c1.dst_span != c2.src_span:
        raise StructureError("fraction cells are not vertically composable")
    r1, r2 = c1.canonical, c2.canonical
    mid = c1.dst_span  # the shared span (A2, w2, f2)

    # Align the two apexes over the middle denominator: fill the cospan
    # (w2∘v2 : A3 → ., w2∘u2 ∈ W), then lift the filler cell over w2.
    left = c.compose1(mid.w, r1.v2)
    right = c.compose1(mid.w, r2.v1)
    _e, r, rp, rho = fill_cospan(c, w, left, right)
    z, sigma = lift_cell(c, w, mid.w, c.compose1(r1.v2, r), c.compose1(r2.v1, rp),
                         rho, invertible=True)
    rz, rpz = c.compose1(r, z), c.compose1(rp, z)

    alpha = c.vcomp(
        c.whisker_right(r2.alpha, rpz),
        c.vcomp(c.whisker_left(mid.w, sigma), c.whisker_right(r1.alpha, rz)),
    )
    beta = c.vcomp(
        c.whisker_right(r2.beta, rpz),
        c.vcomp(c.whisker_left(mid.f, sigma), c.whisker_right(r1.beta, rz)),
    )
    rep = CellRep(c1.src_span, c2.dst_span, c.mor_src[z],
                  c.compose1(r1.v1, rz), c.compose1(r2.v2, rpz), alpha, beta)
    return _cell_from_built_rep(c, w, rep, "vcomp_fraction")


def whisker_fraction_left(ch: ChoiceTable, t: Span, cell: FractionCell) -> FractionCell:
    """Post-compose a cell between spans A→B with a span t: B→C."""
    c, w = ch.c, ch.w
    s1, s2 = cell.src_span, cell.dst_span
    if span_dst(c, s1) != span_src(c, t):
        raise StructureError("span does not post-compose with this cell")
    rep = cell.canonical
    d1, vp1, fp1, rho1 = ch.entry(s1.f, t.w)
    d2, vp2, fp2, rho2 = ch.entry(s2.f, t.w)

    # Drag the representative apex over both choice pullbacks.
    _p_apex, p, pp, tau1 = fill_cospan(c, w, rep.v1, vp1)
    _q_apex, q, qp, tau2 = fill_cospan(c, w, c.compose1(rep.v2, p), vp2)
    pq = c.compose1(p, q)
    t1 = c.compose1(pp, q)
    tau1_back = c.whisker_right(c.inverse2(tau1), q)  # vp1∘pp∘q ⇒ v1∘p∘q

    alpha = c.vcomp(
        c.whisker_left(s2.w, tau2),
        c.vcomp(c.whisker_right(rep.alpha, pq), c.whisker_left(s1.w, tau1_back)),
    )
    # The numerator data lives over t's denominator; build the comparison
    # there and lift it off.
    omega = c.vcomp(
        c.whisker_right(rho2, qp),
        c.vcomp(
            c.whisker_left(s2.f, tau2),
            c.vcomp(
                c.whisker_right(rep.beta, pq),
                c.vcomp(c.whisker_left(s1.f, tau1_back),
                        c.whisker_right(c.inverse2(rho1), t1)),
            ),
        ),
    )
    z, phi = lift_cell(c, w, t.w, c.compose1(fp1, t1), c.compose1(fp2, qp), omega)

    src = Span(d1, c.compose1(s1.w, vp1), c.compose1(t.f, fp1))
    dst = Span(d2, c.compose1(s2.w, vp2), c.compose1(t.f, fp2))
    out = CellRep(src, dst, c.mor_src[z],
                  c.compose1(t1, z), c.compose1(qp, z),
                  c.whisker_right(alpha, z), c.whisker_left(t.f, phi))
    return _cell_from_built_rep(c, w, out, "whisker_fraction_left")


def whisker_fraction_right(ch: ChoiceTable, cell: FractionCell, s: Span) -> FractionCell:
    """Pre-compose a cell between spans B→C with a span s: A→B."""
    c, w = ch.c, ch.w
    t1s, t2s = cell.src_span, cell.dst_span
    if span_dst(c, s) != span_src(c, t1s):
        raise StructureError("span does not pre-compose with this cell")
    rep = cell.canonical
    d1, vp1, fp1, rho1 = ch.entry(s.f, t1s.w)
    d2, vp2, fp2, rho2 = ch.entry(s.f, t2s.w)

    # Stage 1: compare s's first pullback with the representative apex.
    _p, p, pp, tau = fill_cospan(c, w, c.compose1(s.f, vp1),
                                 c.compose1(t1s.w, rep.v1))
    omega0 = c.vcomp(tau, c.whisker_right(c.inverse2(rho1), p))
    z1, sigma1 = lift_cell(c, w, t1s.w, c.compose1(fp1, p), c.compose1(rep.v1, pp),
                           omega0, invertible=True)
    pz1 = c.compose1(p, z1)
    ppz1 = c.compose1(pp, z1)

    # Stage 2: drag the result over the second pullback.
    _q, q, qp, taup = fill_cospan(c, w, c.compose1(vp1, pz1), vp2)

    # Stage 3: the numerator comparison over t2's denominator, lifted off.
    omega = c.vcomp(
        c.whisker_right(rho2, qp),
        c.vcomp(
            c.whisker_left(s.f, taup),
            c.vcomp(c.whisker_right(c.inverse2(tau), c.compose1(z1, q)),
                    c.whisker_right(c.inverse2(rep.alpha), c.compose1(ppz1, q))),
        ),
    )
    z2, chi = lift_cell(c, w, t2s.w, c.compose1(c.compose1(rep.v2, ppz1), q),
                        c.compose1(fp2, qp), omega)
    leg1 = c.compose1(pz1, c.compose1(q, z2))
    leg2 = c.compose1(qp, z2)
    mid_leg = c.compose1(ppz1, c.compose1(q, z2))

    src = Span(d1, c.compose1(s.w, vp1), c.compose1(t1s.f, fp1))
    dst = Span(d2, c.compose1(s.w, vp2), c.compose1(t2s.f, fp2))
    beta = c.vcomp(
        c.whisker_left(t2s.f, chi),
        c.vcomp(c.whisker_right(rep.beta, mid_leg),
                c.whisker_left(t1s.f, c.whisker_right(sigma1, c.compose1(q, z2)))),
    )
    out = CellRep(src, dst, c.mor_src[z2], leg1, leg2,
                  c.whisker_left(s.w, c.whisker_right(taup, z2)), beta)
    return _cell_from_built_rep(c, w, out, "whisker_fraction_right")


# ---------------------------------------------------------------------------
# invertibility, associators, internal equivalences


def fraction_inverse(ch: ChoiceTable, cell: FractionCell) -> Optional[FractionCell]:
    """The two-sided vertical inverse of a fraction cell, if one exists."""
    c, w = ch.c, ch.w
    ids = identity_fraction_cell(c, w, cell.src_span)
    idd = identity_fraction_cell(c, w, cell.dst_span)

    def verify(candidate: FractionCell) -> bool:
        return (vcomp_fraction(ch, cell, candidate) == ids
                and vcomp_fraction(ch, candidate, cell) == idd)

    rep = cell.canonical
    if c.is_invertible2(rep.beta):
        swapped = CellRep(cell.dst_span, cell.src_span, rep.apex, rep.v2, rep.v1,
                          c.inverse2(rep.alpha), c.inverse2(rep.beta))
        if not rep_problems(c, w, swapped):
            candidate = cell_from_rep(c, w, swapped)
            if verify(candidate):
                return candidate
    for candidate in hom_fraction_cells(c, w, cell.dst_span, cell.src_span):
        if verify(candidate):
            return candidate
    return None


def is_invertible_fraction_cell(ch: ChoiceTable, cell: FractionCell) -> bool:
    return fraction_inverse(ch, cell) is not None


def find_associator_witness(ch: ChoiceTable, s: Span, t: Span, u: Span) -> FractionCell:
    """An invertible cell (s;t);u ⇒ s;(t;u) for a composable triple."""
    c, w = ch.c, ch.w
    left = compose_fractions(ch, compose_fractions(ch, s, t), u)
    right = compose_fractions(ch, s, compose_fractions(ch, t, u))
    if left == right:
        return identity_fraction_cell(c, w, left)
    for cand in hom_fraction_cells(c, w, left, right):
        if is_invertible_fraction_cell(ch, cand):
            return cand
    raise InternalInconsistency(
        f"no invertible associator between {left} and {right}")


def all_spans(c: TwoCat, w, src: str, dst: str) -> tuple[Span, ...]:
    w = _as_class(c, w)
    out = []
    for apex in sorted(c.objects):
        for wm in c.hom1(apex, src):
            if wm not in w:
                continue
            for f in c.hom1(apex, dst):
                out.append(Span(apex, wm, f))
    return tuple(out)


@dataclass(frozen=True)
class SpanEquivalence:
    """Internal-equivalence witness for a span in the localization."""

    e: Span
    e_bar: Span
    delta: FractionCell  # identity span ⇒ e;e_bar, invertible
    xi: FractionCell     # e_bar;e ⇒ identity span, invertible


def is_internal_equiv_search(ch: ChoiceTable, s: Span) -> Optional[SpanEquivalence]:
    """Decide internal equivalence by exhaustive quasi-inverse search."""
    c, w = ch.c, ch.w
    a, b = span_src(c, s), span_dst(c, s)
    ida, idb = identity_span(c, a), identity_span(c, b)
    for g in all_spans(c, w, b, a):
        fwd = compose_fractions(ch, s, g)
        delta = next((d for d in hom_fraction_cells(c, w, ida, fwd)
                      if is_invertible_fraction_cell(ch, d)), None)
        if delta is None:
            continue
        bwd = compose_fractions(ch, g, s)
        xi = next((x for x in hom_fraction_cells(c, w, bwd, idb)
                   if is_invertible_fraction_cell(ch, x)), None)
        if xi is not None:
            return SpanEquivalence(s, g, delta, xi)
    return None


def is_internal_equiv_closed_form(c: TwoCat, w, s: Span) -> bool:
    """Membership test: denominator in W, numerator in the right saturation."""
    w = _as_class(c, w)
    problems = span_problems(c, w, s)
    if problems:
        raise StructureError("; ".join(problems))
    return s.w in w and s.f in saturate(c, w)


def quasi_inverse_of_u(c: TwoCat, w, f: str, g: str) -> Span:
    """The span inverting u_mor(f), built from a saturation witness g."""
    w = _as_class(c, w)
    if c.mor_dst.get(g) != c.mor_src.get(f):
        raise StructureError(f"{g!r} does not land in the source of {f!r}")
    fg = c.compose1(f, g)
    if fg not in w:
        raise StructureError(f"{fg!r} = {f!r}∘{g!r} is not in W")
    return Span(c.mor_src[g], fg, g)


# ---------------------------------------------------------------------------
# the assembled localization


@dataclass(eq=False)
class Localization:
    """Enumerable view of the localized bicategory for a fixed choice table."""

    c: TwoCat
    w: frozenset[str]
    ch: ChoiceTable

    @property
    def objects(self) -> tuple[str, ...]:
        return self.c.objects

    def spans(self, src: str, dst: str) -> tuple[Span, ...]:
        return all_spans(self.c, self.w, src, dst)

    def hom_cells(self, s1: Span, s2: Span) -> tuple[FractionCell, ...]:
        return hom_fraction_cells(self.c, self.w, s1, s2)

    def identity_span(self, a: str) -> Span:
        return identity_span(self.c, a)

    def identity_cell(self, s: Span) -> FractionCell:
        return identity_fraction_cell(self.c, self.w, s)

    def compose(self, s: Span, t: Span) -> Span:
        return compose_fractions(self.ch, s, t)

    def vcomp(self, c1: FractionCell, c2: FractionCell) -> FractionCell:
        return vcomp_fraction(self.ch, c1, c2)

    def embed_mor(self, f: str) -> Span:
        return u_mor(self.c, self.w, f)

    def embed_cell(self, gamma: str) -> FractionCell:
        return u_cell(self.c, self.w, gamma)


def localize(c: TwoCat, w, ch: Optional[ChoiceTable] = None) -> Localization:
    w = _as_class(c, w)
    if ch is None:
        ch = build_choices(c, w)
    return Localization(c, w, ch)
