"""Finite strict 2-categories given by explicit cell tables.

Everything is a string identifier looked up in dict tables; nothing is ever
normalized or rewritten.  Composition conventions, used consistently across
the whole package:

* ``comp1[(g, f)]`` is the 1-cell composite g∘f (f applied first),
* ``vcomp[(b, a)]`` is the vertical composite b⊙a (a applied first),
* ``hcomp[(b, a)]`` is the horizontal composite b∗a, where a lives over the
  earlier 1-cell: for a: f1 ⇒ f2 (A→B) and b: g1 ⇒ g2 (B→C) the result is
  a 2-cell g1∘f1 ⇒ g2∘f2.

Strictness means all the usual middle-unit/associator bookkeeping is exact
table equality, which `validate` checks exhaustively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property


class StructureError(ValueError):
    """Raised for cell references or composites the tables cannot support."""


class InternalInconsistency(RuntimeError):
    """A search that is guaranteed to succeed on valid input came up empty.

    Seeing this exception means the input structure is corrupted (e.g. a
    hand-edited table) rather than that the caller did anything wrong.
    """


@dataclass(eq=False)
class TwoCat:
    objects: tuple[str, ...]
    mor_src: dict[str, str]
    mor_dst: dict[str, str]
    comp1: dict[tuple[str, str], str]
    id1: dict[str, str]
    cell_src: dict[str, str]
    cell_dst: dict[str, str]
    vcomp_table: dict[tuple[str, str], str]
    hcomp_table: dict[tuple[str, str], str]
    id2: dict[str, str]

    # -- 1-cell structure ---------------------------------------------------

    @cached_property
    def mors(self) -> tuple[str, ...]:
        return tuple(sorted(self.mor_src))

    @cached_property
    def cells(self) -> tuple[str, ...]:
        return tuple(sorted(self.cell_src))

    def hom1(self, a: str, b: str) -> tuple[str, ...]:
        return self._hom1_index.get((a, b), ())

    @cached_property
    def _hom1_index(self) -> dict[tuple[str, str], tuple[str, ...]]:
        index: dict[tuple[str, str], list[str]] = {}
        for f in self.mors:
            index.setdefault((self.mor_src[f], self.mor_dst[f]), []).append(f)
        return {k: tuple(v) for k, v in index.items()}

    def compose1(self, g: str, f: str) -> str:
        try:
            return self.comp1[(g, f)]
        except KeyError:
            raise StructureError(f"1-cells not composable: {g} after {f}") from None

    # -- 2-cell structure ---------------------------------------------------

    def hom2(self, f: str, g: str) -> tuple[str, ...]:
        """All 2-cells f ⇒ g (f, g parallel 1-cells)."""
        return self._hom2_index.get((f, g), ())

    @cached_property
    def _hom2_index(self) -> dict[tuple[str, str], tuple[str, ...]]:
        index: dict[tuple[str, str], list[str]] = {}
        for a in self.cells:
            index.setdefault((self.cell_src[a], self.cell_dst[a]), []).append(a)
        return {k: tuple(v) for k, v in index.items()}

    def vcomp(self, b: str, a: str) -> str:
        """b⊙a: first a, then b."""
        try:
            return self.vcomp_table[(b, a)]
        except KeyError:
            raise StructureError(f"2-cells not vertically composable: {b} after {a}") from None

    def hcomp(self, b: str, a: str) -> str:
        """b∗a: a over the earlier 1-cell, b over the later one."""
        try:
            return self.hcomp_table[(b, a)]
        except KeyError:
            raise StructureError(f"2-cells not horizontally composable: {b} beside {a}") from None

    def whisker_left(self, f: str, gamma: str) -> str:
        """i_f ∗ γ, for γ over some g: A→B and f: B→C."""
        return self.hcomp(self.id2[f], gamma)

    def whisker_right(self, gamma: str, f: str) -> str:
        """γ ∗ i_f, for f: A→B and γ over some g: B→C."""
        return self.hcomp(gamma, self.id2[f])

    @cached_property
    def _inverse2(self) -> dict[str, str]:
        """cell -> vcomp-inverse, for exactly the invertible 2-cells."""
        inv: dict[str, str] = {}
        for a in self.cells:
            f, g = self.cell_src[a], self.cell_dst[a]
            for b in self.hom2(g, f):
                if (
                    self.vcomp_table.get((b, a)) == self.id2[f]
                    and self.vcomp_table.get((a, b)) == self.id2[g]
                ):
                    inv[a] = b
                    break
        return inv

    def inverse2(self, gamma: str) -> str | None:
        """The vcomp-inverse of gamma, or None (exhaustive scan, cached)."""
        return self._inverse2.get(gamma)

    def is_invertible2(self, gamma: str) -> bool:
        return gamma in self._inverse2

    def invertible_cells(self, f: str, g: str) -> tuple[str, ...]:
        return tuple(a for a in self.hom2(f, g) if a in self._inverse2)


# ---------------------------------------------------------------------------
# validation


@dataclass
class ValidationReport:
    structural: list[str] = field(default_factory=list)
    failures: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.structural and not self.failures

    def lines(self) -> list[str]:
        out = [f"structural: {msg}" for msg in self.structural]
        out += [f"{law}: {detail}" for law, detail in self.failures]
        return out


def _check_structure(c: TwoCat, report: ValidationReport) -> bool:
    """Referential integrity and table totality; False aborts law checking."""
    bad = False

    def gripe(msg: str) -> None:
        nonlocal bad
        bad = True
        report.structural.append(msg)

    objset = set(c.objects)
    if len(c.objects) != len(objset):
        gripe("duplicate object identifiers")
    if not objset:
        gripe("no objects declared")
    for f in c.mor_src:
        if c.mor_src[f] not in objset or c.mor_dst.get(f) not in objset:
            gripe(f"1-cell {f} has a dangling endpoint")
    if set(c.mor_dst) != set(c.mor_src):
        gripe("mor_src and mor_dst disagree on declared 1-cells")
    for obj in objset:
        e = c.id1.get(obj)
        if e is None:
            gripe(f"no identity 1-cell for object {obj}")
        elif e not in c.mor_src or c.mor_src[e] != obj or c.mor_dst[e] != obj:
            gripe(f"id1[{obj}] = {e} is not an endo-1-cell of {obj}")
    if bad:
        return False

    morset = set(c.mor_src)
    comp_dom = {
        (g, f)
        for g in morset
        for f in morset
        if c.mor_dst[f] == c.mor_src[g]
    }
    for pair in comp_dom - set(c.comp1):
        gripe(f"compose1 missing entry for {pair}")
    for pair in set(c.comp1) - comp_dom:
        gripe(f"compose1 has a non-composable entry {pair}")
    for (g, f), h in c.comp1.items():
        if h not in morset:
            gripe(f"compose1[{(g, f)}] = {h} is not a declared 1-cell")
        elif (g, f) in comp_dom and (
            c.mor_src[h] != c.mor_src[f] or c.mor_dst[h] != c.mor_dst[g]
        ):
            gripe(f"compose1[{(g, f)}] = {h} has the wrong boundary")

    for a in c.cell_src:
        sf, df = c.cell_src[a], c.cell_dst.get(a)
        if sf not in morset or df not in morset:
            gripe(f"2-cell {a} has a dangling boundary 1-cell")
        elif (c.mor_src[sf], c.mor_dst[sf]) != (c.mor_src[df], c.mor_dst[df]):
            gripe(f"2-cell {a}: boundary 1-cells {sf}, {df} are not parallel")
    if set(c.cell_dst) != set(c.cell_src):
        gripe("cell_src and cell_dst disagree on declared 2-cells")
    for f in morset:
        i = c.id2.get(f)
        if i is None:
            gripe(f"no identity 2-cell for 1-cell {f}")
        elif i not in c.cell_src or c.cell_src[i] != f or c.cell_dst[i] != f:
            gripe(f"id2[{f}] = {i} is not an endo-2-cell of {f}")
    if bad:
        return False

    cellset = set(c.cell_src)
    vdom = {
        (b, a)
        for b in cellset
        for a in cellset
        if c.cell_dst[a] == c.cell_src[b]
    }
    for pair in vdom - set(c.vcomp_table):
        gripe(f"vcomp missing entry for {pair}")
    for pair in set(c.vcomp_table) - vdom:
        gripe(f"vcomp has a non-composable entry {pair}")
    for (b, a), r in c.vcomp_table.items():
        if r not in cellset:
            gripe(f"vcomp[{(b, a)}] = {r} is not a declared 2-cell")
        elif (b, a) in vdom and (
            c.cell_src[r] != c.cell_src[a] or c.cell_dst[r] != c.cell_dst[b]
        ):
            gripe(f"vcomp[{(b, a)}] = {r} has the wrong boundary")

    def hcomposable(b: str, a: str) -> bool:
        return c.mor_dst[c.cell_src[a]] == c.mor_src[c.cell_src[b]]

    hdom = {(b, a) for b in cellset for a in cellset if hcomposable(b, a)}
    for pair in hdom - set(c.hcomp_table):
        gripe(f"hcomp missing entry for {pair}")
    for pair in set(c.hcomp_table) - hdom:
        gripe(f"hcomp has a non-composable entry {pair}")
    for (b, a), r in c.hcomp_table.items():
        if r not in cellset:
            gripe(f"hcomp[{(b, a)}] = {r} is not a declared 2-cell")
        elif (b, a) in hdom:
            want_src = c.comp1.get((c.cell_src[b], c.cell_src[a]))
            want_dst = c.comp1.get((c.cell_dst[b], c.cell_dst[a]))
            if c.cell_src[r] != want_src or c.cell_dst[r] != want_dst:
                gripe(f"hcomp[{(b, a)}] = {r} has the wrong boundary")
    return not bad


def validate(c: TwoCat) -> ValidationReport:
    """Exhaustively check the strict 2-category laws.

    Structural problems (dangling identifiers, partial tables) are reported
    separately from law failures and suppress them, since a partial table
    makes the law loops meaningless.  Each failing law carries one minimal
    counterexample tuple, by identifier.
    """
    report = ValidationReport()
    if not _check_structure(c, report):
        return report

    def law(name: str, witness: tuple) -> None:
        report.failures.append((name, repr(witness)))

    mors, cells = c.mors, c.cells
    for f in mors:
        ia, ib = c.id1[c.mor_src[f]], c.id1[c.mor_dst[f]]
        if c.comp1[(f, ia)] != f:
            law("compose1-right-unit", (f, ia))
        if c.comp1[(ib, f)] != f:
            law("compose1-left-unit", (ib, f))
    for (g, f) in c.comp1:
        for h in mors:
            if c.mor_dst[g] == c.mor_src[h]:
                if c.comp1[(c.comp1[(h, g)], f)] != c.comp1[(h, c.comp1[(g, f)])]:
                    law("compose1-assoc", (h, g, f))

    for a in cells:
        if c.vcomp_table[(a, c.id2[c.cell_src[a]])] != a:
            law("vcomp-right-unit", (a,))
        if c.vcomp_table[(c.id2[c.cell_dst[a]], a)] != a:
            law("vcomp-left-unit", (a,))
    for (b, a) in c.vcomp_table:
        for d in cells:
            if c.cell_dst[b] == c.cell_src[d]:
                if c.vcomp_table[(c.vcomp_table[(d, b)], a)] != c.vcomp_table[(d, c.vcomp_table[(b, a)])]:
                    law("vcomp-assoc", (d, b, a))

    for (g, f) in c.comp1:
        if c.hcomp_table[(c.id2[g], c.id2[f])] != c.id2[c.comp1[(g, f)]]:
            law("hcomp-identities", (g, f))
    for a in cells:
        f = c.cell_src[a]
        ia = c.id2[c.id1[c.mor_src[f]]]
        ib = c.id2[c.id1[c.mor_dst[f]]]
        if c.hcomp_table[(a, ia)] != a:
            law("hcomp-right-unit", (a,))
        if c.hcomp_table[(ib, a)] != a:
            law("hcomp-left-unit", (a,))
    for (b, a) in c.hcomp_table:
        for d in cells:
            if c.mor_dst[c.cell_src[b]] == c.mor_src[c.cell_src[d]]:
                if c.hcomp_table[(c.hcomp_table[(d, b)], a)] != c.hcomp_table[(d, c.hcomp_table[(b, a)])]:
                    law("hcomp-assoc", (d, b, a))

    # interchange: (b2⊙b1)∗(a2⊙a1) = (b2∗a2)⊙(b1∗a1)
    for (a2, a1) in c.vcomp_table:
        for (b2, b1) in c.vcomp_table:
            if c.mor_dst[c.cell_src[a1]] == c.mor_src[c.cell_src[b1]]:
                lhs = c.hcomp_table[(c.vcomp_table[(b2, b1)], c.vcomp_table[(a2, a1)])]
                rhs = c.vcomp_table[(c.hcomp_table[(b2, a2)], c.hcomp_table[(b1, a1)])]
                if lhs != rhs:
                    law("interchange", (b2, b1, a2, a1))
    return report


# ---------------------------------------------------------------------------
# internal equivalences


@dataclass(frozen=True)
class EquivalenceWitness:
    """e with quasi-inverse e_bar and invertible delta: id ⇒ ē∘e, xi: e∘ē ⇒ id."""

    e: str
    e_bar: str
    delta: str
    xi: str
    adjoint: bool = False


def witness_problems(c: TwoCat, w: EquivalenceWitness) -> list[str]:
    """Everything wrong with the witness; empty list means it is valid."""
    probs: list[str] = []
    a, b = c.mor_src[w.e], c.mor_dst[w.e]
    if (c.mor_src.get(w.e_bar), c.mor_dst.get(w.e_bar)) != (b, a):
        return [f"quasi-inverse {w.e_bar} has the wrong boundary"]
    ee = c.compose1(w.e_bar, w.e)
    eb = c.compose1(w.e, w.e_bar)
    if (c.cell_src.get(w.delta), c.cell_dst.get(w.delta)) != (c.id1[a], ee):
        probs.append(f"delta {w.delta} is not id_{a} ⇒ {w.e_bar}∘{w.e}")
    if (c.cell_src.get(w.xi), c.cell_dst.get(w.xi)) != (eb, c.id1[b]):
        probs.append(f"xi {w.xi} is not {w.e}∘{w.e_bar} ⇒ id_{b}")
    if probs:
        return probs
    if not c.is_invertible2(w.delta):
        probs.append(f"delta {w.delta} is not invertible")
    if not c.is_invertible2(w.xi):
        probs.append(f"xi {w.xi} is not invertible")
    if w.adjoint and not probs:
        left = c.vcomp(c.whisker_right(w.xi, w.e), c.whisker_left(w.e, w.delta))
        if left != c.id2[w.e]:
            probs.append("first triangle identity fails")
        right = c.vcomp(c.whisker_left(w.e_bar, w.xi), c.whisker_right(w.delta, w.e_bar))
        if right != c.id2[w.e_bar]:
            probs.append("second triangle identity fails")
    return probs


def find_quasi_inverse(c: TwoCat, e: str) -> EquivalenceWitness | None:
    """Exhaustive search for (ē, δ, ξ); lexicographically first hit or None."""
    a, b = c.mor_src[e], c.mor_dst[e]
    for e_bar in c.hom1(b, a):
        for delta in c.invertible_cells(c.id1[a], c.compose1(e_bar, e)):
            for xi in c.invertible_cells(c.compose1(e, e_bar), c.id1[b]):
                return EquivalenceWitness(e, e_bar, delta, xi)
    return None


def internal_equivalences(c: TwoCat) -> frozenset[str]:
    return frozenset(e for e in c.mors if find_quasi_inverse(c, e) is not None)


def adjointify(c: TwoCat, w: EquivalenceWitness) -> EquivalenceWitness:
    """Keep (e, ē, δ) and search an invertible ξ' making both triangles hold.

    Existence is a theorem for any valid witness, so an exhausted search is
    reported as data corruption rather than a normal miss.
    """
    if witness_problems(c, w):
        raise StructureError(f"not a valid equivalence witness: {w}")
    eb = c.compose1(w.e, w.e_bar)
    tgt = c.id1[c.mor_dst[w.e]]
    for xi in c.invertible_cells(eb, tgt):
        cand = EquivalenceWitness(w.e, w.e_bar, w.delta, xi, adjoint=True)
        if not witness_problems(c, cand):
            return cand
    raise InternalInconsistency(
        f"no adjoint completion for witness on {w.e}; tables are corrupted"
    )


def quasi_inverse_witness(c: TwoCat, w: EquivalenceWitness) -> EquivalenceWitness:
    """The witness showing ē is itself an equivalence, via (e, ξ⁻¹, δ⁻¹)."""
    xi_inv = c.inverse2(w.xi)
    delta_inv = c.inverse2(w.delta)
    assert xi_inv is not None and delta_inv is not None
    return EquivalenceWitness(w.e_bar, w.e, xi_inv, delta_inv)


def transport_witness(c: TwoCat, w: EquivalenceWitness, gamma: str) -> EquivalenceWitness:
    """Move a witness for e across an invertible γ: e ⇒ ẽ.

    New witness: (ē, (i_ē∗γ)⊙δ, ξ⊙(γ⁻¹∗i_ē)).
    """
    g_inv = c.inverse2(gamma)
    if g_inv is None:
        raise StructureError(f"transporting 2-cell {gamma} is not invertible")
    if c.cell_src[gamma] != w.e:
        raise StructureError(f"{gamma} does not start at {w.e}")
    e_new = c.cell_dst[gamma]
    delta_new = c.vcomp(c.whisker_left(w.e_bar, gamma), w.delta)
    xi_new = c.vcomp(w.xi, c.whisker_right(g_inv, w.e_bar))
    return EquivalenceWitness(e_new, w.e_bar, delta_new, xi_new)


def equivalence_of_composite(
    c: TwoCat, wf: EquivalenceWitness, wg: EquivalenceWitness
) -> EquivalenceWitness:
    """Witness for f∘g from witnesses for f and g, quasi-inverse ḡ∘f̄.

    δ = (i_ḡ ∗ δ_f ∗ i_g) ⊙ δ_g and ξ = ξ_f ⊙ (i_f ∗ ξ_g ∗ i_f̄), the strict
    form of the usual pasting.
    """
    f, g = wf.e, wg.e
    if c.mor_dst[g] != c.mor_src[f]:
        raise StructureError(f"1-cells not composable: {f} after {g}")
    fg = c.compose1(f, g)
    qinv = c.compose1(wg.e_bar, wf.e_bar)
    delta = c.vcomp(
        c.whisker_left(wg.e_bar, c.whisker_right(wf.delta, g)),
        wg.delta,
    )
    xi = c.vcomp(
        wf.xi,
        c.whisker_left(f, c.whisker_right(wg.xi, wf.e_bar)),
    )
    out = EquivalenceWitness(fg, qinv, delta, xi)
    probs = witness_problems(c, out)
    if probs:
        raise InternalInconsistency(f"composite witness invalid: {probs}")
    return out


def equivalence_from_cancellation(
    c: TwoCat,
    f: str,
    g: str,
    h: str,
    w_fg: EquivalenceWitness,
    w_gh: EquivalenceWitness,
) -> tuple[EquivalenceWitness, EquivalenceWitness, EquivalenceWitness]:
    """Given f∘g and g∘h equivalences, witnesses for f, g and h themselves.

    For the chain h: D→C, g: C→B, f: B→A, with m quasi-inverse of f∘g and
    l quasi-inverse of g∘h:

    * f gets quasi-inverse g∘m, with ξ_f = ξ¹ and δ_f pasted from δ¹ and ξ²;
    * g gets quasi-inverse m∘f, with δ_g = δ¹ and ξ_g = δ_f⁻¹;
    * h gets quasi-inverse l∘g, with δ_h = δ² and ξ_h conjugated from ξ².
    """
    if w_fg.e != c.compose1(f, g) or w_gh.e != c.compose1(g, h):
        raise StructureError("witnesses do not match the stated composites")
    for wit in (w_fg, w_gh):
        probs = witness_problems(c, wit)
        if probs:
            raise StructureError(f"invalid composite witness: {probs}")
    m, l = w_fg.e_bar, w_gh.e_bar
    d1, x1 = w_fg.delta, w_fg.xi
    d2, x2 = w_gh.delta, w_gh.xi

    u = c.compose1(g, m)                       # candidate quasi-inverse of f
    x2_inv = c.inverse2(x2)
    assert x2_inv is not None
    hl = c.compose1(h, l)
    delta_f = c.vcomp(
        c.whisker_left(c.compose1(u, f), x2),
        c.vcomp(
            c.whisker_right(c.whisker_left(g, d1), hl),
            x2_inv,
        ),
    )
    w_f = EquivalenceWitness(f, u, delta_f, x1)

    delta_f_inv = c.inverse2(delta_f)
    if delta_f_inv is None:
        raise InternalInconsistency("pasted delta for f is not invertible")
    w_g = EquivalenceWitness(g, c.compose1(m, f), d1, delta_f_inv)

    gbar = w_g.e_bar
    # ξ_h: h∘(l∘g) ⇒ id_C, conjugating the whiskered ξ² by δ_g on both sides.
    delta_g = w_g.delta
    delta_g_inv = c.inverse2(delta_g)
    assert delta_g_inv is not None
    xi_h = c.vcomp(
        delta_g_inv,
        c.vcomp(
            c.whisker_left(gbar, c.whisker_right(x2, g)),
            c.whisker_right(delta_g, c.compose1(hl, g)),
        ),
    )
    w_h = EquivalenceWitness(h, c.compose1(l, g), d2, xi_h)

    for label, wit in (("f", w_f), ("g", w_g), ("h", w_h)):
        probs = witness_problems(c, wit)
        if probs:
            raise InternalInconsistency(f"cancellation witness for {label}: {probs}")
    return w_f, w_g, w_h
