"""Rack actions, crossed modules of racks and of groups, and their morphisms.

A right action of a pointed rack R on a pointed rack S is a table
``s . r`` satisfying the exchange law ``(s.r).r' = (s.r').(r ◁ r')``, the
distributivity law ``(s ◁ s').r = (s.r) ◁ (s'.r)``, and pointed
compatibility ``1.r = 1`` and ``s.1 = s``.  The two unpointed laws do not
force the translations ``s -> s.r`` to be bijections, so constructions that
need bijectivity re-validate their output instead of assuming it.

A crossed module of racks is a pointed rack hom d: R -> S together with an
action of S on R such that d(r.s) = d(r) ◁ s and r.d(r') = r ◁ r'.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ActionAxiom1Fail,
    ActionAxiom2Fail,
    ActionSquareFail,
    AutomorphismFail,
    AxiomError,
    BoundarySquareFail,
    EquivarianceFail,
    GroupActionFail,
    NotNormal,
    PeifferFail,
    PointednessFail,
    ResultNotRack,
    X1Fail,
    X2Fail,
)
from .groups import FiniteGroup, GroupHom, identity_group_hom, subgroup, validate_group_hom
from .isomorphism import all_isomorphisms
from .racks import (
    FiniteRack,
    RackHom,
    conj_hom,
    conj_rack,
    identity_rack_hom,
    inclusion_rack_hom,
    is_normal_subrack,
    restrict_rack,
    validate_rack,
    validate_rack_hom,
)
from .tables import rect_table


# ---------------------------------------------------------------- rack actions


@dataclass(frozen=True)
class RackAction:
    actee: FiniteRack
    actor: FiniteRack
    table: tuple[tuple[int, ...], ...]

    def act(self, s: int, r: int) -> int:
        return self.table[s][r]


def validate_action(table, actee: FiniteRack, actor: FiniteRack) -> RackAction:
    """Exhaustively check the two action laws and pointed compatibility."""
    s_rack, r_rack = actee, actor
    t = rect_table(table, s_rack.size, r_rack.size, s_rack.size, "action table")
    for s in s_rack.elements():
        for r in r_rack.elements():
            sr = t[s][r]
            for rp in r_rack.elements():
                if t[sr][rp] != t[t[s][rp]][r_rack.table[r][rp]]:
                    raise ActionAxiom1Fail(s, r, rp)
    for s in s_rack.elements():
        for sp in s_rack.elements():
            ssp = s_rack.table[s][sp]
            for r in r_rack.elements():
                if t[ssp][r] != s_rack.table[t[s][r]][t[sp][r]]:
                    raise ActionAxiom2Fail(s, sp, r)
    bp = s_rack.basepoint
    for r in r_rack.elements():
        if t[bp][r] != bp:
            raise PointednessFail(bp, r, t[bp][r], "absorb")
    for s in s_rack.elements():
        if t[s][r_rack.basepoint] != s:
            raise PointednessFail(s, r_rack.basepoint, t[s][r_rack.basepoint], "unit")
    return RackAction(s_rack, r_rack, t)


def trivial_action(actee: FiniteRack, actor: FiniteRack) -> RackAction:
    return validate_action([[s] * actor.size for s in actee.elements()], actee, actor)


def conjugation_action(r: FiniteRack) -> RackAction:
    """A rack acting on itself by its own operation."""
    return validate_action(r.table, r, r)


def hemi_semidirect(action: RackAction) -> FiniteRack:
    """Pair rack with (s, r) ◁ (s', r') = (s.r', r ◁ r'); s' is discarded.

    The output is re-validated: an action whose translations are not
    bijective yields a table with a collapsing column, reported as
    ResultNotRack.
    """
    s_rack, r_rack = action.actee, action.actor
    width = r_rack.size
    table = [
        [
            action.table[s][rp] * width + r_rack.table[r][rp]
            for _sp in s_rack.elements()
            for rp in r_rack.elements()
        ]
        for s in s_rack.elements()
        for r in r_rack.elements()
    ]
    bp = s_rack.basepoint * width + r_rack.basepoint
    labels = [
        f"({s_rack.label(s)},{r_rack.label(r)})"
        for s in s_rack.elements()
        for r in r_rack.elements()
    ]
    try:
        return validate_rack(table, bp, labels=labels)
    except AxiomError as exc:
        raise ResultNotRack(exc) from exc


# ---------------------------------------------------------------- rack crossed modules


@dataclass(frozen=True)
class RackXMod:
    boundary: RackHom
    action: RackAction

    @property
    def dom(self) -> FiniteRack:
        return self.boundary.dom

    @property
    def cod(self) -> FiniteRack:
        return self.boundary.cod

    def act(self, r: int, s: int) -> int:
        return self.action.table[r][s]


def validate_rack_xmod(boundary: RackHom, action: RackAction) -> RackXMod:
    """Check both crossed-module laws over all pairs."""
    if action.actee != boundary.dom or action.actor != boundary.cod:
        raise ValueError("action endpoints do not match the boundary hom")
    r_rack, s_rack = boundary.dom, boundary.cod
    d = boundary.map
    t = action.table
    for r in r_rack.elements():
        for rp in r_rack.elements():
            if t[r][d[rp]] != r_rack.table[r][rp]:
                raise X2Fail(r, rp)
    for r in r_rack.elements():
        for s in s_rack.elements():
            if d[t[r][s]] != s_rack.table[d[r]][s]:
                raise X1Fail(r, s)
    return RackXMod(boundary, action)


def inclusion_xmod(subset, r: FiniteRack) -> RackXMod:
    """Normal subrack N of R, included into R, with R acting by conjugation."""
    check = is_normal_subrack(subset, r)
    if not check.ok:
        raise NotNormal(*check.witness)
    emb = tuple(sorted(set(subset)))
    sub = restrict_rack(r, emb)
    pos = {x: i for i, x in enumerate(emb)}
    boundary = inclusion_rack_hom(r, emb)
    table = [[pos[r.table[x][b]] for b in r.elements()] for x in emb]
    action = validate_action(table, sub, r)
    return validate_rack_xmod(boundary, action)


def identity_xmod(r: FiniteRack) -> RackXMod:
    return validate_rack_xmod(identity_rack_hom(r), conjugation_action(r))


# ---------------------------------------------------------------- rack xmod morphisms


@dataclass(frozen=True)
class RackXModMorphism:
    src: RackXMod
    dst: RackXMod
    f1: RackHom
    f0: RackHom


def validate_xmod_morphism(
    f1: RackHom, f0: RackHom, src: RackXMod, dst: RackXMod
) -> RackXModMorphism:
    if f1.dom != src.dom or f1.cod != dst.dom:
        raise ValueError("f1 endpoints do not match the crossed modules")
    if f0.dom != src.cod or f0.cod != dst.cod:
        raise ValueError("f0 endpoints do not match the crossed modules")
    for r in src.dom.elements():
        if dst.boundary.map[f1.map[r]] != f0.map[src.boundary.map[r]]:
            raise BoundarySquareFail(r)
    for r in src.dom.elements():
        for s in src.cod.elements():
            if f1.map[src.act(r, s)] != dst.act(f1.map[r], f0.map[s]):
                raise ActionSquareFail(r, s)
    return RackXModMorphism(src, dst, f1, f0)


def identity_xmod_morphism(x: RackXMod) -> RackXModMorphism:
    return validate_xmod_morphism(identity_rack_hom(x.dom), identity_rack_hom(x.cod), x, x)


def compose_xmod_morphisms(m1: RackXModMorphism, m2: RackXModMorphism) -> RackXModMorphism:
    """The composite "m1 then m2"."""
    if m1.dst != m2.src:
        raise ValueError("morphisms are not composable")
    f1 = validate_rack_hom(m1.f1.dom, m2.f1.cod, tuple(m2.f1.map[v] for v in m1.f1.map))
    f0 = validate_rack_hom(m1.f0.dom, m2.f0.cod, tuple(m2.f0.map[v] for v in m1.f0.map))
    return validate_xmod_morphism(f1, f0, m1.src, m2.dst)


def find_xmod_isomorphism(a: RackXMod, b: RackXMod) -> RackXModMorphism | None:
    """Search pairs of carrier and codomain isomorphisms for a morphism.

    Iterates the (sorted) isomorphism lists and returns the first pair that
    satisfies both squares; a bijective morphism is an isomorphism of
    crossed modules.
    """
    top = all_isomorphisms(a.dom, b.dom)
    bottom = all_isomorphisms(a.cod, b.cod)
    for f1 in top:
        for f0 in bottom:
            try:
                return validate_xmod_morphism(f1, f0, a, b)
            except AxiomError:
                continue
    return None


# ---------------------------------------------------------------- group crossed modules


@dataclass(frozen=True)
class GroupXMod:
    boundary: GroupHom
    action: tuple[tuple[int, ...], ...]

    @property
    def dom(self) -> FiniteGroup:
        return self.boundary.dom

    @property
    def cod(self) -> FiniteGroup:
        return self.boundary.cod

    def act(self, m: int, n: int) -> int:
        return self.action[m][n]


def validate_group_xmod(boundary: GroupHom, action) -> GroupXMod:
    """Right action by automorphisms, equivariance, and the Peiffer law."""
    m_grp, n_grp = boundary.dom, boundary.cod
    t = rect_table(action, m_grp.size, n_grp.size, m_grp.size, "action table")
    for n in n_grp.elements():
        for m in m_grp.elements():
            for mp in m_grp.elements():
                if t[m_grp.mul[m][mp]][n] != m_grp.mul[t[m][n]][t[mp][n]]:
                    raise AutomorphismFail(n, m, mp, "not multiplicative")
        seen: dict[int, int] = {}
        for m in m_grp.elements():
            v = t[m][n]
            if v in seen:
                raise AutomorphismFail(n, seen[v], m, "not injective")
            seen[v] = m
    for m in m_grp.elements():
        if t[m][n_grp.identity] != m:
            raise GroupActionFail(m, n_grp.identity, None)
    for m in m_grp.elements():
        for n in n_grp.elements():
            for np in n_grp.elements():
                if t[t[m][n]][np] != t[m][n_grp.mul[n][np]]:
                    raise GroupActionFail(m, n, np)
    d = boundary.map
    for m in m_grp.elements():
        for n in n_grp.elements():
            if d[t[m][n]] != n_grp.conj(d[m], n):
                raise EquivarianceFail(m, n)
    for m in m_grp.elements():
        for mp in m_grp.elements():
            if t[m][d[mp]] != m_grp.conj(m, mp):
                raise PeifferFail(m, mp)
    return GroupXMod(boundary, t)


def inclusion_group_xmod(subset, g: FiniteGroup) -> GroupXMod:
    """Normal subgroup included into g, with g acting by conjugation."""
    sub, emb_hom = subgroup(g, subset)
    emb = emb_hom.map
    pos = {x: i for i, x in enumerate(emb)}
    table = []
    for i, m in enumerate(emb):
        row = []
        for n in g.elements():
            v = g.conj(m, n)
            if v not in pos:
                raise NotNormal(m, n, v)
            row.append(pos[v])
        table.append(row)
    return validate_group_xmod(emb_hom, table)


def identity_group_xmod(g: FiniteGroup) -> GroupXMod:
    table = [[g.conj(m, n) for n in g.elements()] for m in g.elements()]
    return validate_group_xmod(identity_group_hom(g), table)


@dataclass(frozen=True)
class GroupXModMorphism:
    src: GroupXMod
    dst: GroupXMod
    f1: GroupHom
    f0: GroupHom


def validate_group_xmod_morphism(
    f1: GroupHom, f0: GroupHom, src: GroupXMod, dst: GroupXMod
) -> GroupXModMorphism:
    if f1.dom != src.dom or f1.cod != dst.dom:
        raise ValueError("f1 endpoints do not match the crossed modules")
    if f0.dom != src.cod or f0.cod != dst.cod:
        raise ValueError("f0 endpoints do not match the crossed modules")
    for m in src.dom.elements():
        if dst.boundary.map[f1.map[m]] != f0.map[src.boundary.map[m]]:
            raise BoundarySquareFail(m)
    for m in src.dom.elements():
        for n in src.cod.elements():
            if f1.map[src.act(m, n)] != dst.act(f1.map[m], f0.map[n]):
                raise ActionSquareFail(m, n)
    return GroupXModMorphism(src, dst, f1, f0)


def compose_group_xmod_morphisms(
    m1: GroupXModMorphism, m2: GroupXModMorphism
) -> GroupXModMorphism:
    if m1.dst != m2.src:
        raise ValueError("morphisms are not composable")
    f1 = validate_group_hom(m1.f1.dom, m2.f1.cod, tuple(m2.f1.map[v] for v in m1.f1.map))
    f0 = validate_group_hom(m1.f0.dom, m2.f0.cod, tuple(m2.f0.map[v] for v in m1.f0.map))
    return validate_group_xmod_morphism(f1, f0, m1.src, m2.dst)


# ---------------------------------------------------------------- conjugation functor


def conj_xmod(g: GroupXMod) -> RackXMod:
    """Conjugation racks on both groups, with the action table reused."""
    dom = conj_rack(g.dom)
    cod = conj_rack(g.cod)
    boundary = validate_rack_hom(dom, cod, g.boundary.map)
    action = validate_action(g.action, dom, cod)
    return validate_rack_xmod(boundary, action)


def conj_xmod_morphism(m: GroupXModMorphism) -> RackXModMorphism:
    return validate_xmod_morphism(
        conj_hom(m.f1), conj_hom(m.f0), conj_xmod(m.src), conj_xmod(m.dst)
    )
