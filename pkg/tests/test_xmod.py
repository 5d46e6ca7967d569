"""Actions, the pair-rack construction, and crossed modules of both flavors."""

import pytest

from rackmod import (
    compose_group_xmod_morphisms,
    compose_xmod_morphisms,
    conj_xmod,
    conj_xmod_morphism,
    conjugation_action,
    find_xmod_isomorphism,
    hemi_semidirect,
    identity_group_xmod,
    identity_rack_hom,
    identity_xmod,
    identity_xmod_morphism,
    inclusion_group_xmod,
    inclusion_xmod,
    product_rack,
    trivial_action,
    validate_action,
    validate_group_xmod,
    validate_group_xmod_morphism,
    validate_rack_hom,
    validate_rack_xmod,
    validate_xmod_morphism,
)
from rackmod.errors import (
    ActionAxiom1Fail,
    ActionAxiom2Fail,
    ActionSquareFail,
    AutomorphismFail,
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


def test_trivial_and_conjugation_actions(racks):
    cs3 = racks["cs3"]
    assert trivial_action(racks["t2"], cs3).act(1, 4) == 1
    assert conjugation_action(cs3).table == cs3.table


def test_action_pointedness_failures(racks):
    t2 = racks["t2"]
    with pytest.raises(PointednessFail) as exc:
        validate_action([[0, 1], [1, 1]], t2, t2)
    assert exc.value.side == "absorb"
    with pytest.raises(PointednessFail) as exc:
        validate_action([[0, 0], [0, 1]], t2, t2)
    assert exc.value.side == "unit"


def test_action_law_failures(racks):
    cs3, t2 = racks["cs3"], racks["t2"]
    # acting by a transposition with an order-3 translation breaks exchange
    table = [[0] * 6, [1, 1, 1, 2, 1, 1], [2, 2, 2, 1, 2, 2]]
    v3 = racks["v3"]
    with pytest.raises((ActionAxiom1Fail, ActionAxiom2Fail)):
        validate_action(table, v3, cs3)


def test_action_laws_do_not_force_bijective_translations(racks):
    """The collapsing action below satisfies every action law."""
    t2 = racks["t2"]
    action = validate_action([[0, 0], [1, 0]], t2, t2)
    column = [action.act(s, 1) for s in range(2)]
    assert column == [0, 0]


def test_hemi_semidirect_rejects_collapsing_actions(racks):
    t2 = racks["t2"]
    action = validate_action([[0, 0], [1, 0]], t2, t2)
    with pytest.raises(ResultNotRack) as exc:
        hemi_semidirect(action)
    assert exc.value.witness == (1, 0, 2)


def test_hemi_semidirect_of_trivial_action_on_point(racks):
    # with a one-element actee the pair rack is the actor itself
    for name in ("cz2", "cs3", "v3"):
        rack = racks[name]
        built = hemi_semidirect(trivial_action(racks["t1"], rack))
        assert built.table == product_rack(racks["t1"], rack).table
        assert built.table == rack.table


def test_hemi_semidirect_of_conjugation_action(racks):
    cs3 = racks["cs3"]
    built = hemi_semidirect(conjugation_action(cs3))
    assert built.size == 36
    # (s, r) <| (s', r') = (s <| r', r <| r') regardless of s'
    s, r, sp, rp = 1, 3, 4, 5
    out = built.table[s * 6 + r][sp * 6 + rp]
    assert out == cs3.table[s][rp] * 6 + cs3.table[r][rp]


def test_validate_rack_xmod_checks_peiffer_before_equivariance(racks):
    cs3 = racks["cs3"]
    with pytest.raises(X2Fail) as exc:
        validate_rack_xmod(identity_rack_hom(cs3), trivial_action(cs3, cs3))
    assert exc.value.witness == (1, 2)


def test_validate_rack_xmod_x1_witness(racks):
    # boundary hits a transposition, trivial action: X2 holds, X1 cannot
    t2, cs3 = racks["t2"], racks["cs3"]
    boundary = validate_rack_hom(t2, cs3, [0, 1])
    with pytest.raises(X1Fail) as exc:
        validate_rack_xmod(boundary, trivial_action(t2, cs3))
    assert exc.value.witness == (1, 2)


def test_validate_rack_xmod_endpoint_mismatch(racks):
    with pytest.raises(ValueError):
        validate_rack_xmod(
            identity_rack_hom(racks["cs3"]), trivial_action(racks["t2"], racks["cs3"])
        )


def test_inclusion_xmod(racks):
    xm = inclusion_xmod([0, 3, 4], racks["cs3"])
    assert xm.dom.size == 3
    assert xm.boundary.map == (0, 3, 4)
    # action is conjugation inside the big rack, rewritten on the subset
    assert xm.act(1, 1) == 2
    with pytest.raises(NotNormal) as exc:
        inclusion_xmod([0, 2], racks["cs3"])
    assert exc.value.witness == (2, 1, 5)


def test_identity_xmod(racks):
    xm = identity_xmod(racks["cs3"])
    assert xm.boundary.map == (0, 1, 2, 3, 4, 5)
    assert xm.action.table == racks["cs3"].table


def test_xmod_morphism_squares(rack_xmods, racks):
    point, incl, ident = (
        rack_xmods["point_cs3"],
        rack_xmods["a3r_cs3"],
        rack_xmods["identity_cs3"],
    )
    id_cs3 = identity_rack_hom(racks["cs3"])
    m = validate_xmod_morphism(incl.boundary, id_cs3, incl, ident)
    assert m.f1.map == (0, 3, 4)
    # composing with the identity morphism changes nothing
    comp = compose_xmod_morphisms(m, identity_xmod_morphism(ident))
    assert comp.f1.map == m.f1.map
    bad = validate_rack_hom(incl.dom, ident.dom, [0, 4, 3])
    with pytest.raises((BoundarySquareFail, ActionSquareFail)):
        validate_xmod_morphism(bad, id_cs3, incl, ident)


def test_find_xmod_isomorphism(rack_xmods):
    incl = rack_xmods["a3r_cs3"]
    iso = find_xmod_isomorphism(incl, incl)
    assert iso is not None
    assert iso.f1.map == (0, 1, 2)
    assert iso.f0.map == (0, 1, 2, 3, 4, 5)
    assert find_xmod_isomorphism(incl, rack_xmods["identity_cs3"]) is None


def test_group_xmod_validation(groups, group_xmods):
    a3s3 = group_xmods["a3_s3"]
    assert a3s3.dom.size == 3 and a3s3.cod.size == 6
    # conjugating (123) by (23) gives (132)
    assert a3s3.act(1, 1) == 2


def test_group_xmod_action_failures(groups):
    z2, z3, z4, s3 = groups["z2"], groups["z3"], groups["z4"], groups["s3"]
    from rackmod import validate_group_hom

    incl = validate_group_hom(z2, z4, [0, 2])
    with pytest.raises(AutomorphismFail):
        validate_group_xmod(incl, [[0, 0, 0, 0], [0, 0, 0, 0]])
    # both columns negate, which is an automorphism, but 0 must act as id
    collapse = validate_group_hom(z3, z2, [0, 0, 0])
    with pytest.raises(GroupActionFail) as exc:
        validate_group_xmod(collapse, [[0, 0], [2, 2], [1, 1]])
    assert exc.value.witness == (1, 0)
    # trivial action, but the boundary image is not central in S3
    j = validate_group_hom(z2, s3, [0, 2])
    with pytest.raises(EquivarianceFail) as exc:
        validate_group_xmod(j, [[0] * 6, [1] * 6])
    assert exc.value.witness == (1, 1)
    # twisting by an inner automorphism keeps every law except Peiffer
    sgn = validate_group_hom(s3, z2, [0, 1, 1, 0, 0, 1])
    twist = [[m, s3.conj(m, 2)] for m in range(6)]
    with pytest.raises(PeifferFail) as exc:
        validate_group_xmod(sgn, twist)
    assert exc.value.witness == (1, 1)


def test_inclusion_group_xmod(groups):
    with pytest.raises(NotNormal):
        inclusion_group_xmod([0, 2], groups["s3"])
    xm = inclusion_group_xmod([0, 3, 4], groups["s3"])
    assert xm.boundary.map == (0, 3, 4)
    assert identity_group_xmod(groups["z4"]).act(1, 3) == 1


def test_group_xmod_morphism_and_composition(groups, group_xmods, group_homs):
    triv, a3s3, ident = (
        group_xmods["triv_s3"],
        group_xmods["a3_s3"],
        group_xmods["identity_s3"],
    )
    from rackmod import validate_group_hom

    up = validate_group_xmod_morphism(
        validate_group_hom(triv.dom, a3s3.dom, [0]), group_homs["id_s3"], triv, a3s3
    )
    down = validate_group_xmod_morphism(
        a3s3.boundary, group_homs["id_s3"], a3s3, ident
    )
    both = compose_group_xmod_morphisms(up, down)
    assert both.f1.map == (0,)
    with pytest.raises(ValueError):
        compose_group_xmod_morphisms(down, down)


def test_conj_xmod_matches_the_rack_side_inclusion(group_xmods, rack_xmods):
    built = conj_xmod(group_xmods["a3_s3"])
    direct = rack_xmods["a3r_cs3"]
    assert built.boundary.map == direct.boundary.map
    assert built.action.table == direct.action.table
    assert built.dom.table == direct.dom.table


def test_conj_xmod_morphism(groups, group_xmods, group_homs):
    from rackmod import validate_group_hom

    triv, ident = group_xmods["triv_z2"], group_xmods["identity_z2"]
    m = validate_group_xmod_morphism(
        triv.boundary, group_homs["id_z2"], triv, ident
    )
    rm = conj_xmod_morphism(m)
    assert rm.f1.map == m.f1.map
    assert rm.f0.map == m.f0.map
