"""Checks for the fraction-calculus axioms (BF1-BF5) and right saturation.

A "class" of 1-cells is passed around as a plain set of identifiers together
with its ambient `TwoCat`; helpers normalise and sanity-check membership at
the boundary.  All searches run in a fixed lexicographic order so that any
reported filler or counterexample is deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import StructureError, TwoCat

AXIOMS = ("BF1", "BF2", "BF3", "BF4a", "BF4b", "BF4c", "BF5")


def _as_class(c: TwoCat, w) -> frozenset[str]:
    members = frozenset(w)
    unknown = members - set(c.mors)
    if unknown:
        raise StructureError(f"not 1-cells of this 2-category: {sorted(unknown)}")
    return members


@dataclass
class BFReport:
    """Per-axiom verdicts with one counterexample for each failure."""

    passed: dict[str, bool] = field(default_factory=dict)
    counterexamples: dict[str, tuple] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.passed.get(a, False) for a in AXIOMS)

    def lines(self) -> list[str]:
        out = []
        for a in AXIOMS:
            if self.passed.get(a, False):
                out.append(f"{a}: pass")
            else:
                out.append(f"{a}: FAIL {self.counterexamples.get(a)}")
        return out


def cospan_fillers(c: TwoCat, w: frozenset[str], f: str, v: str):
    """All (A'', v'', f'', rho) squaring the cospan (f: A→B, v: C→B), v ∈ W.

    rho: f∘v'' ⇒ v∘f'' is invertible and v'' ∈ W.  Lexicographic generator.
    """
    a, cc = c.mor_src[f], c.mor_src[v]
    for apex in c.objects:
        for v2 in c.hom1(apex, a):
            if v2 not in w:
                continue
            left = c.compose1(f, v2)
            for f2 in c.hom1(apex, cc):
                right = c.compose1(v, f2)
                for rho in c.invertible_cells(left, right):
                    yield apex, v2, f2, rho


def fill_cospan(c: TwoCat, w: frozenset[str], f: str, v: str) -> tuple[str, str, str, str]:
    """First filler of the cospan (f, v ∈ W); StructureError when none exists."""
    for filler in cospan_fillers(c, w, f, v):
        return filler
    raise StructureError(f"no filler for cospan ({f!r}, {v!r})")


def cell_lifts(c: TwoCat, w: frozenset[str], wm: str, f1: str, f2: str, alpha: str):
    """All (v ∈ W, beta: f1∘v ⇒ f2∘v) with alpha∗i_v = i_wm∗beta.

    Here alpha: wm∘f1 ⇒ wm∘f2 with wm ∈ W; the condition says beta becomes
    alpha after whiskering with wm (up to restriction along v).
    """
    a = c.mor_src[f1]
    for apex in c.objects:
        for v in c.hom1(apex, a):
            if v not in w:
                continue
            lhs = c.whisker_right(alpha, v)
            for beta in c.hom2(c.compose1(f1, v), c.compose1(f2, v)):
                if c.whisker_left(wm, beta) == lhs:
                    yield v, beta


def lift_cell(
    c: TwoCat, w: frozenset[str], wm: str, f1: str, f2: str, alpha: str,
    invertible: bool = False,
) -> tuple[str, str]:
    """First lift of alpha through wm; optionally insist on invertible beta."""
    for v, beta in cell_lifts(c, w, wm, f1, f2, alpha):
        if not invertible or c.is_invertible2(beta):
            return v, beta
    raise StructureError(f"no lift of {alpha!r} through {wm!r}")


def _coequalized(
    c: TwoCat, w: frozenset[str],
    f1: str, f2: str,
    lift1: tuple[str, str], lift2: tuple[str, str],
) -> bool:
    """Can two lifts (v, beta), (v', beta') be merged by a further zig?

    Wanted: E, s: E→dom v, p: E→dom v', invertible nu: v∘s ⇒ v'∘p with
    v∘s ∈ W and (beta'∗i_p)⊙(i_{f1}∗nu) = (i_{f2}∗nu)⊙(beta∗i_s).
    The condition is symmetric in the two lifts (replace nu by its inverse),
    so callers may check unordered pairs.
    """
    v, beta = lift1
    v2, beta2 = lift2
    for apex in c.objects:
        for s in c.hom1(apex, c.mor_src[v]):
            vs = c.compose1(v, s)
            if vs not in w:
                continue
            for p in c.hom1(apex, c.mor_src[v2]):
                v2p = c.compose1(v2, p)
                for nu in c.invertible_cells(vs, v2p):
                    left = c.vcomp(c.whisker_right(beta2, p), c.whisker_left(f1, nu))
                    right = c.vcomp(c.whisker_left(f2, nu), c.whisker_right(beta, s))
                    if left == right:
                        return True
    return False


def check_bf(c: TwoCat, w) -> BFReport:
    """Exhaustively verify BF1-BF5 for the class w inside c."""
    w = _as_class(c, w)
    rep = BFReport()

    bad = sorted(i for i in c.id1.values() if i not in w)
    rep.passed["BF1"] = not bad
    if bad:
        rep.counterexamples["BF1"] = (bad[0],)

    rep.passed["BF2"] = True
    for g, f in itertools.product(sorted(w), sorted(w)):
        if c.mor_dst[f] == c.mor_src[g] and c.compose1(g, f) not in w:
            rep.passed["BF2"] = False
            rep.counterexamples["BF2"] = (g, f, c.compose1(g, f))
            break

    rep.passed["BF3"] = True
    for f in c.mors:
        for v in sorted(w):
            if c.mor_dst[v] != c.mor_dst[f]:
                continue
            if next(cospan_fillers(c, w, f, v), None) is None:
                rep.passed["BF3"] = False
                rep.counterexamples["BF3"] = (f, v)
                break
        if not rep.passed["BF3"]:
            break

    rep.passed["BF4a"] = rep.passed["BF4b"] = rep.passed["BF4c"] = True
    for wm in sorted(w):
        b = c.mor_src[wm]
        for a_obj in c.objects:
            for f1, f2 in itertools.product(c.hom1(a_obj, b), c.hom1(a_obj, b)):
                for alpha in c.hom2(c.compose1(wm, f1), c.compose1(wm, f2)):
                    lifts = list(cell_lifts(c, w, wm, f1, f2, alpha))
                    if not lifts:
                        if rep.passed["BF4a"]:
                            rep.passed["BF4a"] = False
                            rep.counterexamples["BF4a"] = (wm, f1, f2, alpha)
                        continue
                    if c.is_invertible2(alpha) and not any(
                        c.is_invertible2(beta) for _, beta in lifts
                    ):
                        if rep.passed["BF4b"]:
                            rep.passed["BF4b"] = False
                            rep.counterexamples["BF4b"] = (wm, f1, f2, alpha)
                    for l1, l2 in itertools.combinations(lifts, 2):
                        if not _coequalized(c, w, f1, f2, l1, l2):
                            if rep.passed["BF4c"]:
                                rep.passed["BF4c"] = False
                                rep.counterexamples["BF4c"] = (wm, alpha, l1, l2)
                            break

    rep.passed["BF5"] = True
    for wm in sorted(w):
        for v in c.mors:
            if v in w or c.mor_src[v] != c.mor_src[wm] or c.mor_dst[v] != c.mor_dst[wm]:
                continue
            alphas = c.invertible_cells(v, wm)
            if alphas:
                rep.passed["BF5"] = False
                rep.counterexamples["BF5"] = (alphas[0], v)
                break
        if not rep.passed["BF5"]:
            break

    return rep


def quasi_units(c: TwoCat) -> frozenset[str]:
    """Endo-1-cells u: A→A isomorphic to id_A via an invertible 2-cell."""
    out = set()
    for u in c.mors:
        a = c.mor_src[u]
        if c.mor_dst[u] == a and c.invertible_cells(u, c.id1[a]):
            out.add(u)
    return frozenset(out)


def saturate(c: TwoCat, w) -> frozenset[str]:
    """{ f : ∃g with f∘g ∈ W, ∃h with g∘h ∈ W }, by exhaustive search."""
    w = _as_class(c, w)
    out = set()
    for f in c.mors:
        src_f = c.mor_src[f]
        for g in c.mors:
            if c.mor_dst[g] != src_f or c.compose1(f, g) not in w:
                continue
            src_g = c.mor_src[g]
            if any(
                c.mor_dst[h] == src_g and c.compose1(g, h) in w
                for h in c.mors
            ):
                out.add(f)
                break
    return frozenset(out)


def is_right_saturated(c: TwoCat, w) -> bool:
    w = _as_class(c, w)
    return saturate(c, w) == w
