"""Deterministic random corpus of small BF-passing (2-category, W) pairs.

Four families, all built from tables we can prove are lawful before any
filtering: thin poset categories (2-cells are identities only), one-object
cyclic monoids, parity extensions of thin categories (an extra twist cell
over an ideal of 1-cells), and disjoint unions of the above.  Candidate W
classes are the quasi-units, the internal equivalences, and random
supersets of the quasi-units; every emitted pair passed check_bf, and
everything is reproducible from SEED.

Size caps: at most 4 objects, 8 one-cells, 12 two-cells per entry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from twoloc.core import TwoCat, internal_equivalences, validate
from twoloc.fixtures import disjoint_union, parity_twocat
from twoloc.saturation import check_bf, quasi_units

SEED = 20260814
MAX_OBJECTS, MAX_MORS, MAX_CELLS = 4, 8, 12


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    c: TwoCat
    w: frozenset


def _thin_tables(rng: random.Random):
    """A random poset on <=4 points, returned as category tables.

    The order is a random subrelation of the index order, transitively
    closed; antisymmetry is automatic because i < j numerically.
    """
    n = rng.randint(1, MAX_OBJECTS)
    objects = [f"o{i}" for i in range(n)]
    below = {i: {i} for i in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.45:
                below[i].add(j)
    for i in range(n):          # transitive closure
        for j in list(below[i]):
            below[i] |= below[j]
    mors, id1 = {}, {}
    for i in range(n):
        id1[objects[i]] = f"e{i}"
        mors[f"e{i}"] = (objects[i], objects[i])
        for j in below[i] - {i}:
            mors[f"a{i}{j}"] = (objects[i], objects[j])
    name_of = {(s, d): m for m, (s, d) in mors.items()}
    comp = {}
    for g, (gs, gd) in mors.items():
        for f, (fs, fd) in mors.items():
            if fd == gs:
                comp[(g, f)] = name_of[(fs, gd)]
    return objects, mors, id1, comp


def thin_cat(rng: random.Random) -> TwoCat | None:
    objects, mors, id1, comp = _thin_tables(rng)
    if len(mors) > MAX_MORS:
        return None
    return parity_twocat(objects, mors, id1, comp, twisted=set())


def cyclic_cat(rng: random.Random) -> TwoCat:
    """One object, 1-cells the cyclic group Z/n, identity 2-cells only."""
    n = rng.randint(1, 5)
    mors = {f"g{k}": ("x", "x") for k in range(n)}
    comp = {
        (f"g{i}", f"g{j}"): f"g{(i + j) % n}"
        for i in range(n)
        for j in range(n)
    }
    return parity_twocat(["x"], mors, {"x": "g0"}, comp, twisted=set())


def parity_cat(rng: random.Random) -> TwoCat | None:
    """Thin base plus a parity-1 twist cell over a two-sided ideal of 1-cells.

    In a poset category the non-identity arrows form an ideal (a composite
    touching a non-identity arrow cannot come back to an identity), and so
    does the set of arrows factoring through any fixed arrow, so both make
    the parity tables total.
    """
    objects, mors, id1, comp = _thin_tables(rng)
    non_id = [m for m in mors if m not in id1.values()]
    if not non_id:
        return None
    if rng.random() < 0.5:
        twisted = set(non_id)
    else:
        # principal ideal: everything factoring through one fixed arrow t,
        # i.e. src <= src(t) and dst(t) <= dst in the poset
        t = rng.choice(non_id)
        ts, td = mors[t]
        name_of = {(s, d): m for m, (s, d) in mors.items()}
        twisted = {
            m for m, (s, d) in mors.items()
            if (s, ts) in name_of and (td, d) in name_of
        }
    if len(mors) > MAX_MORS or len(mors) + len(twisted) > MAX_CELLS:
        return None
    return parity_twocat(objects, mors, id1, comp, twisted=twisted,
                         twist_name="t")


def union_cat(rng: random.Random) -> TwoCat | None:
    a = cyclic_cat(rng) if rng.random() < 0.5 else thin_cat(rng)
    b = thin_cat(rng)
    if a is None or b is None:
        return None
    c = disjoint_union(a, b)
    if (len(c.objects) > MAX_OBJECTS or len(c.mors) > MAX_MORS
            or len(c.cells) > MAX_CELLS):
        return None
    return c


def _candidate_classes(c: TwoCat, rng: random.Random):
    qu = quasi_units(c)
    yield "qu", qu
    eq = internal_equivalences(c)
    if eq != qu:
        yield "eq", eq
    extra = [m for m in c.mors if m not in qu]
    if extra:
        k = rng.randint(1, len(extra))
        yield "rand", qu | frozenset(rng.sample(extra, k))


def build_corpus(seed: int = SEED, minimum: int = 100) -> list[CorpusEntry]:
    """At least `minimum` BF-passing pairs; deterministic for a fixed seed."""
    rng = random.Random(seed)
    makers = [thin_cat, cyclic_cat, parity_cat, union_cat]
    out: list[CorpusEntry] = []
    attempts = 0
    while len(out) < minimum and attempts < 4000:
        attempts += 1
        c = makers[attempts % len(makers)](rng)
        if c is None:
            continue
        assert validate(c).ok, "corpus builder emitted an unlawful table"
        for tag, w in _candidate_classes(c, rng):
            if check_bf(c, w).ok:
                out.append(CorpusEntry(f"r{len(out):03d}-{tag}", c, w))
    return out


_cached: list[CorpusEntry] | None = None


def corpus() -> list[CorpusEntry]:
    global _cached
    if _cached is None:
        _cached = build_corpus()
    return _cached


if __name__ == "__main__":
    import collections
    import time

    t0 = time.perf_counter()
    entries = build_corpus()
    dt = time.perf_counter() - t0
    kinds = collections.Counter(e.name.rsplit("-", 1)[1] for e in entries)
    sizes = collections.Counter(
        (len(e.c.objects), len(e.c.mors), len(e.c.cells)) for e in entries
    )
    print(f"{len(entries)} entries in {dt:.1f}s; kinds={dict(kinds)}")
    print(f"distinct (objects, mors, cells) shapes: {len(sizes)}")
    biggest = max(sizes, key=lambda s: s[2])
    print(f"largest: {biggest}")
