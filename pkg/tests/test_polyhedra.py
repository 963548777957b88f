"""Exact polyhedral models, their rotation groups, and the two independent
fixed-count oracles (geometric incidence vs. abstract coset actions)."""

import pytest

from bipartite_tsg.polyhedra import (
    PHI,
    Q5,
    build_coset_model,
    build_polyhedral_model,
    dist2,
    fixed_count_table,
    incidence_fixed_signature,
)

ROTATION_KINDS = ("tetrahedron", "cube", "dodecahedron")


# ------------------------------------------------------------ exact arithmetic


def test_golden_ratio_identity():
    assert PHI * PHI == PHI + 1
    assert PHI * (PHI - 1) == Q5(1)


def test_q5_is_exact():
    # (1 + sqrt5)/2 * (1 - sqrt5)/2 = -1: no floating point in sight.
    conjugate = 1 - PHI
    assert PHI * conjugate == -1
    assert (PHI / PHI) == Q5(1)
    assert Q5(0, 1) * Q5(0, 1) == Q5(5)
    assert Q5(2, -1).sign() == -1  # 2 < sqrt 5
    assert Q5(2) < Q5(0, 1) < Q5(3)  # 2 < sqrt 5 < 3, decided exactly
    with pytest.raises(ZeroDivisionError):
        Q5(0).inverse()


# ----------------------------------------------------------- model structure


def test_marker_class_sizes(models):
    assert models["tetrahedron"].class_sizes() == (4, 6, 4)
    assert models["tetrahedron-skeleton"].class_sizes() == (4, 6, 4)
    assert models["cube"].class_sizes() == (8, 12, 6)
    assert models["dodecahedron"].class_sizes() == (20, 30, 12)


def test_euler_characteristic(models):
    for kind in ROTATION_KINDS:
        v, e, f = models[kind].class_sizes()
        assert v - e + f == 2


def test_group_orders(models):
    assert models["tetrahedron"].group.order == 12
    assert models["tetrahedron-skeleton"].group.order == 24
    assert models["cube"].group.order == 24
    assert models["dodecahedron"].group.order == 60


def test_parity_split(models):
    for kind, odd in (
        ("tetrahedron", 0),
        ("tetrahedron-skeleton", 12),
        ("cube", 0),
        ("dodecahedron", 0),
    ):
        m = models[kind]
        assert sum(1 for _, p in m.parity if p == -1) == odd
        assert m.even_subgroup().order == m.group.order - odd


def test_skeleton_even_subgroup_is_the_tetrahedral_group(models):
    even = models["tetrahedron-skeleton"].even_subgroup()
    assert even.order == 12
    assert all(e.order() in (1, 2, 3) for e in even)


def test_edges_all_same_length(models):
    for kind in ROTATION_KINDS:
        m = models[kind]
        lengths = {
            dist2(m.corner_vectors[a], m.corner_vectors[b]) for a, b in m.edges
        }
        assert len(lengths) == 1, kind


def test_corners_all_same_radius(models):
    origin = (Q5(0), Q5(0), Q5(0))
    for kind in ROTATION_KINDS:
        m = models[kind]
        norms = {dist2(v, origin) for v in m.corner_vectors}
        assert len(norms) == 1, kind


def test_group_acts_transitively_on_each_marker_class(models):
    for kind in ROTATION_KINDS:
        m = models[kind]
        orbits = m.action.orbits()
        by_class = {}
        for orbit in orbits:
            kinds = {p[0] for p in orbit}
            assert len(kinds) == 1, "an orbit mixes marker classes"
            by_class.setdefault(kinds.pop(), []).append(len(orbit))
        assert by_class["corner"] == [len(m.corner_vectors)]
        assert by_class["edge"] == [len(m.edges)]
        assert by_class["face"] == [len(m.faces)]
        assert by_class["center"] == [1, 1]


# ----------------------------------------------------------------------- axes


def test_axis_counts(models):
    assert len(models["tetrahedron"].axes) == 7  # 4 triple + 3 double
    assert len(models["cube"].axes) == 13  # 4 triple + 3 quadruple + 6 double
    assert len(models["dodecahedron"].axes) == 31  # 6 + 10 + 15
    assert len(models["tetrahedron-skeleton"].axes) == 13  # 7 + 6 odd circles


def test_every_non_glide_lies_on_exactly_one_axis(models):
    for kind, m in models.items():
        for e in m.group:
            if e.is_identity():
                continue
            hits = [entry for entry in m.axes if e in entry.elements]
            if m.axis_of(e) is None:
                assert hits == []
                # Only the skeleton's order-4 odd elements are glides.
                assert kind == "tetrahedron-skeleton"
                assert e.order() == 4 and m.parity_of(e) == -1
            else:
                assert len(hits) == 1


def test_glide_census(models):
    m = models["tetrahedron-skeleton"]
    glides = [
        e for e in m.group if not e.is_identity() and m.axis_of(e) is None
    ]
    assert len(glides) == 6
    assert all(e.order() == 4 for e in glides)


def test_axis_markers_are_fixed_by_their_elements(models):
    for m in models.values():
        for entry in m.axes:
            markers = set(entry.base_sequence())
            for e in entry.elements:
                fixed = set(m.action.fixed_points(e))
                assert {p for p in markers if p[0] != "center"} <= fixed


# ------------------------------------------------------------ fixed-count table


def table_rows(model):
    return sorted(
        (order, parity, (c["corner"], c["edge"], c["face"]))
        for _, order, parity, c in fixed_count_table(model)
    )


def test_fixed_count_tables_frozen(models):
    assert table_rows(models["tetrahedron"]) == [
        (2, 1, (0, 2, 0)),
        (3, 1, (1, 0, 1)),
        (3, 1, (1, 0, 1)),
    ]
    assert table_rows(models["tetrahedron-skeleton"]) == [
        (2, -1, (2, 2, 2)),
        (2, 1, (0, 2, 0)),
        (3, 1, (1, 0, 1)),
        (4, -1, (0, 0, 0)),
    ]
    assert table_rows(models["cube"]) == [
        (2, 1, (0, 0, 2)),
        (2, 1, (0, 2, 0)),
        (3, 1, (2, 0, 0)),
        (4, 1, (0, 0, 2)),
    ]
    assert table_rows(models["dodecahedron"]) == [
        (2, 1, (0, 2, 0)),
        (3, 1, (2, 0, 0)),
        (5, 1, (0, 0, 2)),
        (5, 1, (0, 0, 2)),
    ]


# -------------------------------------------------------- two-oracle agreement


def test_incidence_signature_rejects_the_skeleton(models):
    with pytest.raises(ValueError):
        incidence_fixed_signature(models["tetrahedron-skeleton"])


@pytest.mark.parametrize("kind", ROTATION_KINDS)
def test_geometric_and_coset_oracles_agree(models, kind):
    """The same (order, class size, fixed counts) rows must come out of the
    coordinate geometry and out of pure group theory on coset spaces."""
    assert incidence_fixed_signature(models[kind]) == build_coset_model(kind)


def test_signatures_frozen(models):
    assert incidence_fixed_signature(models["tetrahedron"]) == (
        (2, 3, (0, 2, 0)),
        (3, 4, (1, 0, 1)),
        (3, 4, (1, 0, 1)),
    )
    assert incidence_fixed_signature(models["cube"]) == (
        (2, 3, (0, 0, 2)),
        (2, 6, (0, 2, 0)),
        (3, 8, (2, 0, 0)),
        (4, 6, (0, 0, 2)),
    )
    assert incidence_fixed_signature(models["dodecahedron"]) == (
        (2, 15, (0, 2, 0)),
        (3, 20, (2, 0, 0)),
        (5, 12, (0, 0, 2)),
        (5, 12, (0, 0, 2)),
    )


def test_coset_oracle_rejects_unknown_kind():
    with pytest.raises(ValueError):
        build_coset_model("octahedron")
    with pytest.raises(ValueError):
        build_coset_model("tetrahedron-skeleton")


def test_build_rejects_unknown_kind():
    with pytest.raises(ValueError):
        build_polyhedral_model("icosahedron")
