from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from socialcloud.availability import PayoffParams, SharingParams, profile
from socialcloud.datasets import florentine_index, florentine_network
from socialcloud.dynamics import (
    ChangeKind,
    LinkChange,
    NeighborCase,
    SpilloverSign,
    aggregate_neighbor_availability,
    apply_change,
    local_delta,
    neighbor_case,
    spillover,
    third_party_alpha_case,
)
from socialcloud.graph import (
    build_network,
    components,
    is_connected,
    path_network,
    ring_network,
)

from .conftest import networks

QUARTER = SharingParams(Fraction(1, 2), Fraction(1, 2))
PAYOFF = PayoffParams(1, 1, Fraction(1, 10))


def test_link_change_validation():
    g = path_network(3)
    with pytest.raises(ValueError):
        apply_change(g, LinkChange.add(0, 1))
    with pytest.raises(ValueError):
        apply_change(g, LinkChange.delete(0, 2))
    with pytest.raises(ValueError):
        apply_change(g, LinkChange.add(1, 1))
    with pytest.raises(ValueError):
        apply_change(g, LinkChange.add(0, 5))
    assert str(LinkChange(ChangeKind.DELETE, 0, 1)) == "del <0,1>"


def test_five_path_neighbor_cases():
    g = path_network(5)
    assert neighbor_case(g, 1, 4, 0) is NeighborCase.FAR
    assert neighbor_case(g, 0, 3, 1) is NeighborCase.TWO_HOPS
    assert neighbor_case(g, 1, 3, 2) is NeighborCase.COMMON_NEIGHBOR
    with pytest.raises(ValueError):
        neighbor_case(g, 0, 3, 2)  # 2 is not a neighbour of 0


def test_neighbor_case_on_deletion_uses_network_without_link():
    g = build_network(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    # deleting <0,3>: neighbour 1 of 0 is two hops from 3 through 2
    assert neighbor_case(g, 0, 3, 1) is NeighborCase.TWO_HOPS


def test_five_path_far_case_moves_alpha():
    g = path_network(5)
    before = profile(g, QUARTER)
    after = profile(apply_change(g, LinkChange.add(1, 4)), QUARTER)
    assert after.alpha[1][0] < before.alpha[1][0]
    # the principals both gain
    assert local_delta(g, QUARTER, LinkChange.add(1, 4)) == (Fraction(13, 300), Fraction(5, 119))


def test_triangle_closing_is_negative_for_the_middle_agent():
    rep = spillover(path_network(3), QUARTER, PAYOFF, LinkChange.add(0, 2))
    assert rep.sign_of(1) is SpilloverSign.NEGATIVE
    assert rep.rows[1].delta_closeness == 0
    assert [r.principal for r in rep.rows] == [True, False, True]
    assert rep.alpha_ij[1] > rep.alpha_ij[0]


def test_florentine_albizzi_loses_when_medici_and_strozzi_link():
    g = florentine_network()
    change = LinkChange.add(florentine_index("Medici"), florentine_index("Strozzi"))
    rep = spillover(g, QUARTER, PAYOFF, change)
    albizzi = rep.rows[florentine_index("Albizzi")]
    assert albizzi.delta_gamma < 0 and albizzi.delta_closeness > 0
    assert rep.sign_of(florentine_index("Bischeri")) is SpilloverSign.POSITIVE
    assert rep.sign_of(florentine_index("Pucci")) is SpilloverSign.NONE


def test_bridge_deletion_leaves_component_local_values():
    g = build_network(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
    rep = spillover(g, QUARTER, PAYOFF, LinkChange.delete(2, 3))
    far = profile(build_network(3, [(0, 1), (1, 2)]), QUARTER.exact())
    for k, local in zip((3, 4, 5), (0, 1, 2)):
        assert rep.rows[k].gamma_after == far.gamma[local]
    # only the endpoints lose; the far-side bystanders gain because their
    # providers become less central and so give each of them a larger share
    assert rep.rows[3].delta_gamma < 0
    assert all(r.sign is SpilloverSign.POSITIVE for r in rep.bystanders)


def test_degenerate_payoff_is_flagged():
    no_gamma_weight = SharingParams(Fraction(1), Fraction(1, 2))  # q(1-p) = 0
    rep = spillover(path_network(3), no_gamma_weight, PAYOFF, LinkChange.add(0, 2))
    assert rep.degenerate
    assert all(r.delta_utility == -Fraction(1, 10) * r.principal for r in rep.rows)


def test_aggregate_neighbor_availability_product():
    g = path_network(3)
    prof = profile(g, QUARTER)
    assert aggregate_neighbor_availability(g, QUARTER, 1) == prof.alpha[1][0] * prof.alpha[1][2]
    assert aggregate_neighbor_availability(g, QUARTER, 1, exclude=0) == prof.alpha[1][2]


def test_third_party_cases_on_small_graphs():
    # 0-1-2 and 3-4: joining 2 and 3 brings 4 within reach of 0
    g = build_network(5, [(0, 1), (1, 2), (3, 4)])
    case = third_party_alpha_case(g, 0, 4, 2, 3)
    assert case.case == "2b" and case.ordering == 1
    # a link far from both ends on a long path: distance unchanged, closeness up
    case = third_party_alpha_case(path_network(6), 0, 1, 3, 5)
    assert case.case == "1b" and case.ordering == -1


@st.composite
def change_on(draw, graphs=networks(min_n=2, max_n=7)):
    g = draw(graphs)
    i, j = draw(st.lists(st.integers(0, g.n - 1), min_size=2, max_size=2, unique=True))
    kind = ChangeKind.DELETE if g.has_link(i, j) else ChangeKind.ADD
    return g, LinkChange(kind, i, j)


@given(change_on())
def test_principals_alpha_moves_with_the_link(gc):
    g, change = gc
    d_ij, d_ji = local_delta(g, QUARTER, change)
    if change.kind is ChangeKind.ADD:
        assert d_ij > 0 and d_ji > 0
    else:
        assert d_ij < 0 and d_ji < 0


@given(change_on())
def test_signs_follow_gamma_and_delete_undoes_add(gc):
    g, change = gc
    rep = spillover(g, QUARTER, PAYOFF, change)
    for r in rep.rows:
        assert r.sign is SpilloverSign.of(r.delta_gamma)
        if not rep.degenerate:
            assert (r.delta_utility > 0) == (r.sign is SpilloverSign.POSITIVE) or r.principal
    opposite = LinkChange(
        ChangeKind.ADD if change.kind is ChangeKind.DELETE else ChangeKind.DELETE,
        change.i,
        change.j,
    )
    back = spillover(rep.after, QUARTER, PAYOFF, opposite)
    for r, s in zip(rep.rows, back.rows):
        assert r.delta_gamma == -s.delta_gamma


@given(change_on())
def test_untouched_components_see_no_spillover(gc):
    g, change = gc
    rep = spillover(g, QUARTER, PAYOFF, change)
    touched = set()
    for comp in components(g):
        if change.i in comp or change.j in comp:
            touched |= comp
    for r in rep.bystanders:
        if r.agent not in touched:
            assert r.sign is SpilloverSign.NONE


@given(change_on(networks(min_n=3, max_n=7)))
def test_connected_networks_have_no_neutral_bystanders(gc):
    g, change = gc
    assume(is_connected(g))
    rep = spillover(g, QUARTER, PAYOFF, change)
    assert all(r.sign is not SpilloverSign.NONE for r in rep.bystanders)


def test_ring_deletion_is_positive_for_opposite_agents():
    rep = spillover(ring_network(6), QUARTER, PAYOFF, LinkChange.delete(0, 1))
    assert rep.sign_of(3) is SpilloverSign.POSITIVE or rep.sign_of(4) is SpilloverSign.POSITIVE
