"""Associated-group presentations and hom-set comparisons.

A finite pointed rack X presents a group on one generator per element, with
one relator y^-1 x^-1 y (x ◁ y) for every ordered pair and one extra relator
killing the basepoint generator.  The presented group is never materialized;
its homs into a finite group G are exactly the generator assignments under
which every relator dies, and those coincide, as assignments, with the
pointed rack homs X -> Conj(G).  The checks here verify that coincidence
literally, as an equality of assignment sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import BijectionFail
from .groups import FiniteGroup
from .racks import FiniteRack, conj_rack, validate_rack_hom
from .xmod import GroupXMod, RackXMod, conj_xmod

Word = tuple[int, ...]
"""Letters are nonzero ints: +(i+1) is generator i, -(i+1) its inverse."""


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]
    pointed_relator: Word
    unit: tuple[int, ...]
    """Element x of the source rack maps to generator unit[x]."""


def as_presentation(x: FiniteRack) -> Presentation:
    gens = tuple(x.label(a) if x.labels else f"x{a}" for a in x.elements())
    relators = tuple(
        (-(b + 1), -(a + 1), (b + 1), (x.table[a][b] + 1))
        for a in x.elements()
        for b in x.elements()
    )
    return Presentation(gens, relators, (x.basepoint + 1,), tuple(range(x.size)))


def evaluate_word(word: Word, assignment, g: FiniteGroup) -> int:
    acc = g.identity
    for letter in word:
        v = assignment[abs(letter) - 1]
        if letter < 0:
            v = g.inv[v]
        acc = g.mul[acc][v]
    return acc


def presentation_to_text(p: Presentation) -> str:
    """One relator per line as signed 1-based generator indices."""
    words = p.relators + (p.pointed_relator,)
    return "\n".join(" ".join(str(l) for l in w) for w in words) + "\n"


@dataclass(frozen=True)
class HomSet:
    source: str
    target: str
    maps: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.maps)


def enumerate_presented_homs(p: Presentation, g: FiniteGroup) -> HomSet:
    """All generator assignments killing every relator, in lexicographic order.

    Backtracks generator by generator; a relator is tested as soon as all
    its letters are assigned.
    """
    n = len(p.generators)
    words = p.relators + (p.pointed_relator,)
    by_last: list[list[Word]] = [[] for _ in range(n)]
    for w in words:
        by_last[max(abs(l) - 1 for l in w)].append(w)
    assign = [0] * n
    out: list[tuple[int, ...]] = []

    def place(k: int) -> None:
        if k == n:
            out.append(tuple(assign))
            return
        for v in range(g.size):
            assign[k] = v
            if all(evaluate_word(w, assign, g) == g.identity for w in by_last[k]):
                place(k + 1)

    place(0)
    return HomSet(f"<{','.join(p.generators)}>", f"group[{g.size}]", tuple(out))


def enumerate_rack_homs(x: FiniteRack, y: FiniteRack) -> HomSet:
    """All pointed rack homs x -> y, backtracking with early pair checks."""
    n = x.size
    pairs_by_last: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for a in range(n):
        for b in range(n):
            pairs_by_last[max(a, b, x.table[a][b])].append((a, b))
    f = [0] * n
    out: list[tuple[int, ...]] = []

    def place(k: int) -> None:
        if k == n:
            out.append(tuple(f))
            return
        values = (y.basepoint,) if k == x.basepoint else range(y.size)
        for v in values:
            f[k] = v
            if all(
                f[x.table[a][b]] == y.table[f[a]][f[b]] for a, b in pairs_by_last[k]
            ):
                place(k + 1)

    place(0)
    return HomSet(f"rack[{x.size}]", f"rack[{y.size}]", tuple(out))


def enumerate_rack_homs_bruteforce(x: FiniteRack, y: FiniteRack) -> HomSet:
    """Unpruned cross-check: filter every one of y.size ** x.size maps."""
    out = []
    for f in product(range(y.size), repeat=x.size):
        if f[x.basepoint] != y.basepoint:
            continue
        if all(
            f[x.table[a][b]] == y.table[f[a]][f[b]]
            for a in range(x.size)
            for b in range(x.size)
        ):
            out.append(f)
    return HomSet(f"rack[{x.size}]", f"rack[{y.size}]", tuple(out))


@dataclass(frozen=True)
class AdjunctionReport:
    rack_hom_count: int
    presented_hom_count: int
    assignments: tuple[tuple[int, ...], ...]


def check_adjunction_bijection(x: FiniteRack, g: FiniteGroup) -> AdjunctionReport:
    """Hom(X, Conj G) and Hom(As X, G) must coincide as assignment sets.

    Each side is enumerated by its own machinery and each assignment is
    re-verified against the other side's laws before comparison.
    """
    cg = conj_rack(g)
    rack_side = enumerate_rack_homs(x, cg)
    pres = as_presentation(x)
    group_side = enumerate_presented_homs(pres, g)
    rack_set = set(rack_side.maps)
    group_set = set(group_side.maps)
    words = pres.relators + (pres.pointed_relator,)
    for m in rack_side.maps:
        if any(evaluate_word(w, m, g) != g.identity for w in words):
            raise BijectionFail("rack", m)
        if m not in group_set:
            raise BijectionFail("rack", m)
    for m in group_side.maps:
        validate_rack_hom(x, cg, m)
        if m not in rack_set:
            raise BijectionFail("presented", m)
    return AdjunctionReport(rack_side.count, group_side.count, rack_side.maps)


@dataclass(frozen=True)
class XModAdjunctionReport:
    rack_side_count: int
    group_side_count: int
    pairs: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]


def check_xmod_adjunction(x: RackXMod, g: GroupXMod) -> XModAdjunctionReport:
    """Crossed-module morphisms into Conj(g) against presented assignment pairs.

    The rack side filters pairs of pointed rack homs by the two morphism
    squares.  The group side filters pairs of relator-killing assignments by
    the boundary square and the action compatibility equations evaluated on
    generators.  The two sides must be literally equal.
    """
    cg = conj_xmod(g)
    top = enumerate_rack_homs(x.dom, cg.dom).maps
    bottom = enumerate_rack_homs(x.cod, cg.cod).maps
    nr = x.dom.size
    ns = x.cod.size
    rack_pairs = []
    for m1 in top:
        for m0 in bottom:
            if any(cg.boundary.map[m1[r]] != m0[x.boundary.map[r]] for r in range(nr)):
                continue
            if any(
                m1[x.act(r, s)] != cg.act(m1[r], m0[s])
                for r in range(nr)
                for s in range(ns)
            ):
                continue
            rack_pairs.append((m1, m0))
    a1s = enumerate_presented_homs(as_presentation(x.dom), g.dom).maps
    a0s = enumerate_presented_homs(as_presentation(x.cod), g.cod).maps
    d = g.boundary.map
    group_pairs = []
    for a1 in a1s:
        for a0 in a0s:
            if any(d[a1[r]] != a0[x.boundary.map[r]] for r in range(nr)):
                continue
            if any(
                a1[x.act(r, s)] != g.act(a1[r], a0[s])
                for r in range(nr)
                for s in range(ns)
            ):
                continue
            group_pairs.append((a1, a0))
    rack_set = set(rack_pairs)
    group_set = set(group_pairs)
    for pair in rack_pairs:
        if pair not in group_set:
            raise BijectionFail("rack", pair)
    for pair in group_pairs:
        if pair not in rack_set:
            raise BijectionFail("presented", pair)
    return XModAdjunctionReport(len(rack_pairs), len(group_pairs), tuple(sorted(rack_pairs)))
