"""Presentations, hom-set enumeration, and the two adjunction checks.

Hom counts pinned here were computed by the unpruned enumerator and agree
with the backtracking one; they are frozen as regression oracles.
"""

import pytest

from rackmod import (
    AdjunctionReport,
    as_presentation,
    check_adjunction_bijection,
    check_xmod_adjunction,
    conj_rack,
    cyclic_group,
    enumerate_presented_homs,
    enumerate_rack_homs,
    evaluate_word,
    presentation_to_text,
    product_rack,
)
from rackmod import corpus
from rackmod.functors import enumerate_rack_homs_bruteforce


def test_presentation_of_the_trivial_rack(racks):
    p = as_presentation(racks["t2"])
    assert p.generators == ("x0", "x1")
    assert len(p.relators) == 4
    assert p.relators[0] == (-1, -1, 1, 1)
    assert p.relators[1] == (-2, -1, 2, 1)
    assert p.pointed_relator == (1,)
    assert p.unit == (0, 1)


def test_presentation_uses_rack_labels(racks):
    p = as_presentation(racks["cs3"])
    assert p.generators == ("e", "(23)", "(12)", "(123)", "(132)", "(13)")
    # relator for the pair (a, b) says b^-1 a^-1 b equals a <| b
    a, b = 2, 5
    assert p.relators[a * 6 + b] == (-6, -3, 6, racks["cs3"].table[a][b] + 1)


def test_evaluate_word():
    z4 = cyclic_group(4)
    assert evaluate_word((1, 1), (1,), z4) == 2
    assert evaluate_word((-1,), (1,), z4) == 3
    assert evaluate_word((2, -1), (3, 1), z4) == 2
    assert evaluate_word((), (0,), z4) == 0


def test_presentation_text_layout(racks):
    text = presentation_to_text(as_presentation(racks["t2"]))
    assert text == "-1 -1 1 1\n-2 -1 2 1\n-1 -2 1 2\n-2 -2 2 2\n1\n"


def test_hom_enumeration_into_conj_s3(racks):
    hs = enumerate_rack_homs(racks["t2"], racks["cs3"])
    # the non-basepoint element can land anywhere: conjugation is idempotent
    assert hs.maps == tuple((0, v) for v in range(6))
    assert hs.count == 6


PINNED_HOM_COUNTS = [
    ("t2", "cs3", 6),
    ("cs3", "cz2", 4),
    ("v3", "cz2", 2),
    ("cz3", "cz3", 9),
    ("cz3", "cs3", 18),
    ("cz4", "cz2", 8),
    ("cz2", "r3plus", 4),
    ("cs3", "cs3", 24),
]


@pytest.mark.parametrize("xname,yname,count", PINNED_HOM_COUNTS)
def test_hom_counts_and_enumerator_agreement(racks, xname, yname, count):
    fast = enumerate_rack_homs(racks[xname], racks[yname])
    slow = enumerate_rack_homs_bruteforce(racks[xname], racks[yname])
    assert fast.maps == slow.maps
    assert fast.count == count


def test_presented_homs_into_an_abelian_group(racks):
    # conjugation relators die in any abelian group; only the basepoint
    # generator is pinned
    hs = enumerate_presented_homs(as_presentation(racks["t2"]), cyclic_group(2))
    assert hs.maps == ((0, 0), (0, 1))


def test_adjunction_pinned_counts(racks, groups):
    for xname, gname, count in [
        ("t2", "s3", 6),
        ("cs3", "s3", 24),
        ("cs3", "z2", 4),
        ("v3", "z3", 3),
    ]:
        report = check_adjunction_bijection(racks[xname], groups[gname])
        assert report.rack_hom_count == count, (xname, gname)
        assert report.presented_hom_count == count, (xname, gname)
        assert report.assignments == enumerate_rack_homs(
            racks[xname], conj_rack(groups[gname])
        ).maps


def test_adjunction_across_all_small_racks():
    seen = 0
    for name, x, g in corpus.adjunction_pairs():
        report = check_adjunction_bijection(x, g)
        assert isinstance(report, AdjunctionReport)
        assert report.rack_hom_count == report.presented_hom_count, name
        # the everything-to-the-identity assignment always survives
        assert report.rack_hom_count >= 1, name
        seen += 1
    # every pointed rack of order <= 3 against four groups
    assert seen == 16


def test_xmod_adjunction_pinned_counts(rack_xmods, group_xmods):
    report = check_xmod_adjunction(rack_xmods["a3r_cs3"], group_xmods["a3_s3"])
    assert (report.rack_side_count, report.group_side_count) == (18, 18)
    report = check_xmod_adjunction(rack_xmods["point_t2"], group_xmods["identity_z2"])
    assert (report.rack_side_count, report.group_side_count) == (2, 2)


def test_xmod_adjunction_across_corpus():
    seen = 0
    for name, x, g in corpus.xmod_adjunction_pairs():
        report = check_xmod_adjunction(x, g)
        assert report.rack_side_count == report.group_side_count, name
        assert report.rack_side_count >= 1, name
        assert report.pairs == tuple(sorted(report.pairs)), name
        seen += 1
    assert seen >= 5


def test_hom_counts_multiply_over_products(racks):
    x = racks["cs3"]
    for a_name, b_name in [("cz2", "v3"), ("t2", "cz3")]:
        a, b = racks[a_name], racks[b_name]
        into_product = enumerate_rack_homs(x, product_rack(a, b)).count
        assert (
            into_product
            == enumerate_rack_homs(x, a).count * enumerate_rack_homs(x, b).count
        )
