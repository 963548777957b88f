"""Edge-routing conditions, forced-fixation closures, and exactness
witnesses for the block-structured placements."""

import dataclasses

import pytest

from bipartite_tsg.assignments import (
    AxisModel,
    CenterPair,
    MarkerBlock,
    VertexAssignment,
    build_axis_model,
)
from bipartite_tsg.bipartite import BipartiteAut, embeds_in_circle
from bipartite_tsg.hypotheses import (
    HypothesisViolation,
    NoSuchEdge,
    NoWitnessFound,
    check_edge_embedding_hypotheses,
    check_subgroup_theorem,
    forced_fix_closure,
    subgroup_corollary_witness,
    verify_construction,
)
from bipartite_tsg.perms import Perm
from bipartite_tsg.polyhedra import build_polyhedral_model


@pytest.fixture(scope="module")
def reports(assignments):
    return {pair: verify_construction(a) for pair, a in assignments.items()}


# -------------------------------------------------------------- positive path


def test_all_sampled_placements_pass_all_five_conditions(reports):
    for pair, report in reports.items():
        assert report.all_passed, pair
        assert [c.condition for c in report.conditions] == [1, 2, 3, 4, 5]
        assert report.subgroup_witness is not None, pair
        assert report.fixed_counts is not None


def test_arcs_pair_one_vertex_from_each_part(assignments, reports):
    for pair, report in reports.items():
        a = assignments[pair]
        seen = set()
        for arc in report.arcs:
            ends = frozenset(arc.endpoints)
            assert len(ends) == 2
            assert ends not in seen, "two arcs for the same adjacent pair"
            seen.add(ends)
            parts = {a.part_of_point(p) for p in arc.endpoints}
            assert parts == {"V", "W"}
            assert all(a.part_of_point(p) is None for p in arc.interior)


def test_arc_interiors_are_pairwise_disjoint(reports):
    for report in reports.values():
        for i, first in enumerate(report.arcs):
            for second in report.arcs[i + 1:]:
                assert not set(first.interior) & set(second.interior)


def test_step_down_edge_present_exactly_for_order_24_models_serving_a4(
    assignments, reports
):
    for (group, n), report in reports.items():
        model = assignments[(group, n)].model
        expects = group == "A4" and model.group.order == 24
        assert (report.corollary_edge is not None) == expects, (group, n)


def test_frozen_corollary_edges(reports):
    assert reports[("A4", 12)].corollary_edge == (0, 12)
    assert reports[("A4", 16)].corollary_edge == (0, 17)
    assert reports[("A4", 18)].corollary_edge == (10, 18)
    assert reports[("A4", 6)].corollary_edge is None


def test_step_down_edge_is_never_pointwise_fixed(assignments, reports):
    for pair, report in reports.items():
        if report.corollary_edge is None:
            continue
        a = assignments[pair]
        v, w = report.corollary_edge
        for e in a.model.group:
            if e.is_identity():
                continue
            perm = a.induced_perm(e)
            assert not (perm(v) == v and perm(w) == w), (pair, e)


def test_report_dict_shape(reports):
    d = reports[("A4", 16)].as_dict()
    assert d["case"] == "skeleton-4"
    assert d["n"] == 16
    assert d["group"] == "A4"
    assert len(d["conditions"]) == 5
    assert d["subgroup_witness"]["edge"] == [4, 16]
    assert d["step_down_edge"] == [0, 17]


# ------------------------------------------------------------ forced closures


def test_same_axis_edge_forces_only_itself(assignments):
    forced = forced_fix_closure(assignments[("S4", 4)], (0, 4))
    assert forced.vertices == frozenset({0, 4})
    assert (forced.shape.a, forced.shape.b) == (1, 1)


def test_cross_copy_edge_forces_the_four_cycle(assignments):
    forced = forced_fix_closure(assignments[("S4", 4)], (0, 5))
    assert forced.vertices == frozenset({0, 1, 4, 5})
    assert (forced.shape.a, forced.shape.b) == (2, 2)


def test_free_edge_forces_a_large_star(assignments):
    forced = forced_fix_closure(assignments[("A5", 90)], (0, 120))
    assert (forced.shape.a, forced.shape.b) == (90, 1)
    assert not embeds_in_circle(forced.shape)


def test_early_stop_closure_is_a_consistent_subset(assignments):
    a = assignments[("A5", 90)]
    full = forced_fix_closure(a, (0, 120))
    stopped = forced_fix_closure(a, (0, 120), stop_if_unembeddable=True)
    assert stopped.vertices <= full.vertices
    assert not embeds_in_circle(stopped.shape)


def test_closure_contains_the_edge_itself(assignments):
    for (_, n), a in assignments.items():
        forced = forced_fix_closure(a, (0, n))
        assert {0, n} <= forced.vertices


# --------------------------------------------------------- exactness witnesses


def test_subgroup_witness_for_the_skeleton_four_case(assignments):
    witness = check_subgroup_theorem(assignments[("S4", 4)])
    assert witness.edge == (0, 5)
    assert witness.condition == 2
    assert witness.psi is not None and witness.psi.order() == 3
    assert (witness.forced.shape.a, witness.forced.shape.b) == (2, 2)


def test_witness_kind_matches_its_forced_subgraph(reports):
    for pair, report in reports.items():
        witness = report.subgroup_witness
        if witness.condition == 1:
            assert not embeds_in_circle(witness.forced.shape), pair
            assert witness.psi is None
        else:
            assert witness.condition == 2
            assert embeds_in_circle(witness.forced.shape), pair
            assert witness.psi is not None and witness.psi.order() >= 3


def test_no_witness_found_when_candidates_are_exhausted(
    assignments, monkeypatch
):
    import bipartite_tsg.hypotheses as hyp

    monkeypatch.setattr(hyp, "_witness_candidates", lambda a: [])
    with pytest.raises(NoWitnessFound):
        check_subgroup_theorem(assignments[("S4", 4)])


def test_corollary_requires_an_order_24_model(assignments):
    with pytest.raises(ValueError):
        subgroup_corollary_witness(assignments[("A4", 6)])
    with pytest.raises(ValueError):
        subgroup_corollary_witness(assignments[("A5", 60)])


def test_corollary_rejects_fixed_candidate_edges(assignments):
    # (0, 4) is pointwise fixed by an order-3 rotation of the skeleton-4
    # placement, so a candidate list holding only that edge must fail.
    with pytest.raises(NoSuchEdge):
        subgroup_corollary_witness(
            assignments[("S4", 4)], candidate_edges=((0, 4),)
        )


def test_corollary_accepts_explicit_unfixed_candidates(assignments):
    edge = subgroup_corollary_witness(
        assignments[("S4", 4)], candidate_edges=((0, 4), (0, 5))
    )
    assert edge == (0, 5)


# ----------------------------------------------------------- negative controls


def build_wvvw_control() -> VertexAssignment:
    """A deliberately bad placement of K_{8,8} on the tetrahedron: both
    corner copies in V, poles and edge markers in W.  Each triple-axis
    circle then reads [W, V, V, W] around the circle, leaving only two
    usable gaps for four adjacent pairs."""
    model = build_polyhedral_model("tetrahedron")
    copies = (("inner", 1), ("outer", 2))
    blocks = (
        (CenterPair("W"), MarkerBlock("edge", "inner", "W")),
        (
            MarkerBlock("corner", "inner", "V"),
            MarkerBlock("corner", "outer", "V"),
        ),
    )
    return VertexAssignment(8, "A4", "control-wvvw", model, copies, blocks)


def test_control_placement_violates_the_gap_matching_condition():
    control = build_wvvw_control()
    with pytest.raises(HypothesisViolation) as exc:
        check_edge_embedding_hypotheses(control)
    assert exc.value.condition == 2
    occupied = exc.value.witness["occupied"]
    assert occupied.count("V") == 2
    assert occupied.count("W") == 2


def test_empty_axis_model_violates_the_shared_circle_condition(assignments):
    from bipartite_tsg.hypotheses import _check_common_fixed_circles

    with pytest.raises(HypothesisViolation) as exc:
        _check_common_fixed_circles(assignments[("A4", 6)], AxisModel(axes=()))
    assert exc.value.condition == 1


def test_truncated_arc_family_violates_equivariance(assignments, reports):
    from bipartite_tsg.hypotheses import _check_arc_equivariance

    a = assignments[("A4", 6)]
    arcs = reports[("A4", 6)].arcs
    assert len(arcs) > 1
    with pytest.raises(HypothesisViolation) as exc:
        _check_arc_equivariance(a, arcs[:-1])
    assert exc.value.condition == 3


def test_oversized_fixed_subgraph_violates_the_subarc_condition(
    assignments, monkeypatch
):
    from bipartite_tsg.hypotheses import _check_swap_fixed_shapes

    a = assignments[("S4", 4)]
    # An honest part-swapping automorphism fixes no vertex, so the failure
    # has to be injected: report a pointwise-fixed K_{2,2} for everything.
    fixed_k22 = BipartiteAut(Perm.from_cycles(8, [(2, 3), (6, 7)]), 4, "swaps")
    monkeypatch.setattr(
        VertexAssignment, "induced_aut", lambda self, e: fixed_k22
    )
    with pytest.raises(HypothesisViolation) as exc:
        _check_swap_fixed_shapes(a)
    assert exc.value.condition == 4
    assert exc.value.witness["shape"] == [2, 2]


def test_interchanger_without_a_circle_violates_condition_five(assignments):
    from bipartite_tsg.hypotheses import (
        _check_swap_circles,
        _check_swap_fixed_shapes,
    )

    a = assignments[("S4", 4)]
    _, interchangers = _check_swap_fixed_shapes(a)
    assert len(interchangers) == 6  # the six part-swapping half-turns

    with pytest.raises(HypothesisViolation) as exc:
        _check_swap_circles(a, AxisModel(axes=()), interchangers)
    assert exc.value.condition == 5


def test_shared_interchanger_circle_violates_condition_five(assignments):
    from bipartite_tsg.hypotheses import (
        _check_swap_circles,
        _check_swap_fixed_shapes,
    )

    a = assignments[("S4", 4)]
    _, interchangers = _check_swap_fixed_shapes(a)
    doctored = tuple(
        dataclasses.replace(axis, elements=axis.elements + (interchangers[-1],))
        if axis.elements and axis.elements[0] in interchangers
        else axis
        for axis in build_axis_model(a).axes
    )
    with pytest.raises(HypothesisViolation) as exc:
        _check_swap_circles(a, AxisModel(axes=doctored), interchangers)
    assert exc.value.condition == 5
    assert "sharing" in exc.value.witness
