"""Combinatorial checks behind equivariant edge routing.

Placing the vertices of ``K_{n,n}`` symmetrically is only half of a
construction; the edges must also be drawn so that the acting group permutes
them.  Two kinds of checks certify that this can be done and that the
resulting symmetry is exact:

* **Edge-routing conditions.**  Five combinatorial conditions on how the
  placed vertices sit on the rotation-axis circles.  When they hold, each
  adjacent pair that lies on a common fixed circle can be joined by an arc of
  that circle, the arcs can be chosen disjoint and equivariant, and the
  remaining edges can be routed freely; the group then acts on the whole
  embedded graph, not just its vertices.

* **Exactness witnesses.**  If a placement realized *more* symmetry than the
  acting group, some homeomorphism outside the group would pointwise fix a
  forced subgraph.  ``forced_fix_closure`` computes what an edge forces, and
  ``check_subgroup_theorem`` finds an edge whose forced subgraph either does
  not fit in a circle or meets a second element's fixed circle incompatibly.
  Either way, no strictly larger group can act, so the realized group is
  exactly the target.

* **Step-down edge.**  The order-24 placements also serve the order-12
  rotation target: re-embedding along an edge that no nontrivial element
  fixes pointwise breaks the part-swapping symmetries while keeping the
  rotations.  ``subgroup_corollary_witness`` exhibits such an edge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .assignments import (
    AxisModel,
    AxisSlots,
    Point,
    VertexAssignment,
    build_axis_model,
    FixedCountReport,
    summarize_blocks,
    verify_fixed_counts,
)
from .bipartite import (
    FixedSubgraphShape,
    embeds_in_circle,
    embeds_in_proper_subset_of_circle,
    fixed_shape,
)
from .perms import Perm

__all__ = [
    "Arc",
    "ConditionResult",
    "ForcedFix",
    "HypothesisReport",
    "HypothesisViolation",
    "NoSuchEdge",
    "NoWitnessFound",
    "SubgroupWitness",
    "check_edge_embedding_hypotheses",
    "check_subgroup_theorem",
    "forced_fix_closure",
    "subgroup_corollary_witness",
    "verify_construction",
]


def point_str(point: Point) -> str:
    """Compact human-readable form of a point label."""
    return ":".join(str(x) for x in point)


class HypothesisViolation(ValueError):
    """One of the edge-routing conditions fails for a placement.

    ``condition`` is the condition number (1-5); ``witness`` is a
    JSON-friendly description of the offending configuration.
    """

    def __init__(self, condition: int, witness: object, message: str):
        self.condition = condition
        self.witness = witness
        super().__init__(f"condition ({condition}): {message}")


class NoWitnessFound(LookupError):
    """No edge certifies that the realized group is exactly the target."""


class NoSuchEdge(LookupError):
    """Every candidate edge is pointwise fixed by a nontrivial element."""


@dataclass(frozen=True)
class Arc:
    """A chosen arc of one axis circle joining an adjacent placed pair.

    ``endpoints`` are the two vertex points (one per part) and ``interior``
    lists the unoccupied slots strictly inside the chosen gap, so two arcs
    intersect geometrically only if they share a slot label or an endpoint.
    """

    axis_index: int
    endpoints: tuple[Point, Point]
    interior: tuple[Point, ...]

    def key(self) -> tuple[frozenset, frozenset]:
        return (frozenset(self.endpoints), frozenset(self.interior))

    def as_dict(self) -> dict:
        return {
            "axis": self.axis_index,
            "endpoints": [point_str(p) for p in self.endpoints],
            "interior": [point_str(p) for p in self.interior],
        }


@dataclass(frozen=True)
class ConditionResult:
    """Outcome of one edge-routing condition."""

    condition: int
    passed: bool
    summary: str

    def as_dict(self) -> dict:
        return {
            "condition": self.condition,
            "passed": self.passed,
            "summary": self.summary,
        }


@dataclass(frozen=True)
class ForcedFix:
    """Least vertex set that a symmetry fixing one edge must fix.

    Start from the endpoints of ``edge``; whenever an orbit of edges contains
    exactly one edge incident to an already-forced vertex, the other endpoint
    of that edge is forced as well.  ``shape`` records the complete bipartite
    shape of the forced set.
    """

    edge: tuple[int, int]
    vertices: frozenset[int]
    shape: FixedSubgraphShape

    def as_dict(self) -> dict:
        return {
            "edge": list(self.edge),
            "vertices": sorted(self.vertices),
            "shape": [self.shape.a, self.shape.b],
        }


@dataclass(frozen=True)
class SubgroupWitness:
    """Certificate that no group strictly larger than the target acts.

    ``condition`` tells which exactness criterion the witness discharges:

    * 1 - the forced subgraph of ``edge`` does not embed in a circle, so no
      extra homeomorphism can fix the edge pointwise;
    * 2 - the forced subgraph fits in a circle, but it meets the fixed circle
      of ``psi`` in an adjacent pair without being contained in it, which is
      incompatible with an extra element commuting into the group.
    """

    edge: tuple[int, int]
    forced: ForcedFix
    condition: int
    psi: Perm | None = None

    def as_dict(self) -> dict:
        out = {
            "edge": list(self.edge),
            "forced": self.forced.as_dict(),
            "condition": self.condition,
        }
        if self.psi is not None:
            out["psi"] = repr(self.psi)
        return out


@dataclass(frozen=True)
class HypothesisReport:
    """Everything checked about one placement.

    ``check_edge_embedding_hypotheses`` fills the five routing conditions and
    the chosen arcs; ``verify_construction`` additionally fills the
    fixed-count table, the exactness witness, and (for order-24 placements
    serving the order-12 target) the step-down edge.
    """

    case_name: str
    n: int
    target_group: str
    conditions: tuple[ConditionResult, ...]
    arcs: tuple[Arc, ...]
    blocks: tuple[str, ...] = ()
    fixed_counts: FixedCountReport | None = None
    subgroup_witness: SubgroupWitness | None = None
    corollary_edge: tuple[int, int] | None = field(default=None)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def as_dict(self) -> dict:
        out = {
            "case": self.case_name,
            "n": self.n,
            "group": self.target_group,
            "blocks": list(self.blocks),
            "conditions": [c.as_dict() for c in self.conditions],
            "arcs": [a.as_dict() for a in self.arcs],
        }
        if self.fixed_counts is not None:
            out["fixed_counts"] = [
                {
                    "class": row.label,
                    "order": row.order,
                    "size": row.size,
                    "fixed": list(row.computed),
                }
                for row in self.fixed_counts.rows
            ]
        if self.subgroup_witness is not None:
            out["subgroup_witness"] = self.subgroup_witness.as_dict()
        if self.corollary_edge is not None:
            out["step_down_edge"] = list(self.corollary_edge)
        return out


# --------------------------------------------------------------------------
# the five edge-routing conditions


def _nontrivial(assignment: VertexAssignment) -> tuple[Perm, ...]:
    return tuple(
        e for e in assignment.model.group.elements if not e.is_identity()
    )


def _vertex_fixers(
    assignment: VertexAssignment,
) -> dict[int, tuple[Perm, ...]]:
    """Map each vertex index to the nontrivial elements fixing it."""
    out: dict[int, list[Perm]] = {}
    for e in _nontrivial(assignment):
        for i in assignment.action.perms[e].fixed_points():
            out.setdefault(i, []).append(e)
    return {i: tuple(es) for i, es in out.items()}


def _check_common_fixed_circles(
    assignment: VertexAssignment, ax: AxisModel
) -> ConditionResult:
    """Condition (1): if two nontrivial elements both fix an adjacent pair
    pointwise, they fix the same circle."""
    n = assignment.n
    axis_index = {
        e: i for i, axis in enumerate(ax.axes) for e in axis.elements
    }
    fixers = _vertex_fixers(assignment)
    pairs_checked = 0
    for v, v_els in fixers.items():
        if v >= n:
            continue
        v_set = set(v_els)
        for w, w_els in fixers.items():
            if w < n:
                continue
            common = v_set.intersection(w_els)
            if not common:
                continue
            pairs_checked += 1
            circles = {axis_index.get(e) for e in common}
            if len(circles) != 1 or None in circles:
                witness = {
                    "pair": [
                        point_str(assignment.points[v]),
                        point_str(assignment.points[w]),
                    ],
                    "elements": [repr(e) for e in sorted(common)],
                }
                raise HypothesisViolation(
                    1,
                    witness,
                    "an adjacent pair is pointwise fixed by elements with "
                    "different fixed circles",
                )
    return ConditionResult(
        1,
        True,
        f"{pairs_checked} co-fixed adjacent pairs, each on a single circle",
    )


def _axis_gaps(
    axis: AxisSlots,
) -> tuple[tuple[tuple[Point, str], ...], tuple[dict, ...]]:
    """Occupied slots of an axis and the gaps between consecutive ones.

    Each gap records its endpoint pair and the (unoccupied) slots strictly
    inside it, walking the circle from one occupied slot to the next.
    """
    occupied = [
        (i, p, part)
        for i, (p, part) in enumerate(zip(axis.slots, axis.parts))
        if part
    ]
    k = len(occupied)
    total = len(axis.slots)
    gaps = []
    for t in range(k):
        i0, p0, _ = occupied[t]
        i1, p1, _ = occupied[(t + 1) % k]
        interior = []
        j = (i0 + 1) % total
        while j != i1:
            interior.append(axis.slots[j])
            j = (j + 1) % total
        gaps.append(
            {
                "index": t,
                "endpoints": frozenset((p0, p1)),
                "interior": tuple(interior),
            }
        )
    return tuple((p, part) for _, p, part in occupied), tuple(gaps)


def _gap_preference(gap: dict) -> tuple[int, int, int]:
    """Deterministic choice order: avoid the poles, then prefer short gaps.

    Gaps through a pole slot are penalized because every part-preserving
    axis circle passes through both poles; two arcs through the same pole
    on different circles would intersect."""
    has_center = any(p[0] == "center" for p in gap["interior"])
    return (1 if has_center else 0, len(gap["interior"]), gap["index"])


def _match_pairs_to_gaps(
    pairs: list[tuple[Point, Point]], gaps: tuple[dict, ...]
) -> dict[tuple[Point, Point], dict] | None:
    """Assign each adjacent pair on a circle its own gap (backtracking)."""
    candidates = {
        pair: sorted(
            (g for g in gaps if g["endpoints"] == frozenset(pair)),
            key=_gap_preference,
        )
        for pair in pairs
    }
    if any(not cands for cands in candidates.values()):
        return None
    order = sorted(pairs, key=lambda pair: len(candidates[pair]))
    chosen: dict[tuple[Point, Point], dict] = {}
    used: set[int] = set()

    def place(i: int) -> bool:
        if i == len(order):
            return True
        pair = order[i]
        for gap in candidates[pair]:
            if gap["index"] in used:
                continue
            used.add(gap["index"])
            chosen[pair] = gap
            if place(i + 1):
                return True
            used.discard(gap["index"])
            del chosen[pair]
        return False

    return chosen if place(0) else None


def _choose_arcs(
    assignment: VertexAssignment, ax: AxisModel
) -> tuple[tuple[Arc, ...], ConditionResult]:
    """Condition (2): on each circle, every adjacent placed pair gets an arc
    bounded by the pair, with interiors avoiding all vertices and pairwise
    disjoint across the whole family."""
    arcs: list[Arc] = []
    for axis_i, axis in enumerate(ax.axes):
        occupied, gaps = _axis_gaps(axis)
        vs = [p for p, part in occupied if part == "V"]
        ws = [p for p, part in occupied if part == "W"]
        if not vs or not ws:
            continue
        pairs = [(pv, pw) for pv in vs for pw in ws]
        chosen = _match_pairs_to_gaps(pairs, gaps)
        if chosen is None:
            pattern = [part for _, part in occupied]
            raise HypothesisViolation(
                2,
                {"axis": axis_i, "occupied": pattern},
                "the placed vertices on a circle admit no family of "
                "disjoint arcs, one per adjacent pair",
            )
        for pair, gap in chosen.items():
            arcs.append(Arc(axis_i, pair, gap["interior"]))
    # interiors contain no placed vertex (they are unoccupied slots by
    # construction, but check against the global placement anyway) ...
    for arc in arcs:
        for p in arc.interior:
            if assignment.part_of_point(p) is not None:
                raise HypothesisViolation(
                    2,
                    {"arc": arc.as_dict(), "vertex": point_str(p)},
                    "an arc interior passes through a placed vertex",
                )
    # ... and are pairwise disjoint, also across different circles (two
    # circles meet only in shared slot labels, e.g. the poles).
    seen: dict[Point, Arc] = {}
    for arc in arcs:
        for p in arc.interior:
            other = seen.get(p)
            if other is not None and other is not arc:
                raise HypothesisViolation(
                    2,
                    {"arcs": [arc.as_dict(), other.as_dict()], "slot": point_str(p)},
                    "two arcs share an interior point",
                )
            seen[p] = arc
    return tuple(arcs), ConditionResult(
        2, True, f"{len(arcs)} disjoint arcs chosen across the axis circles"
    )


def _check_arc_equivariance(
    assignment: VertexAssignment, arcs: tuple[Arc, ...]
) -> ConditionResult:
    """Condition (3): the group permutes the chosen arc family, and any
    element that setwise fixes an arc's endpoint pair or fixes one of its
    interior points maps that arc to itself."""
    family = {arc.key(): arc for arc in arcs}
    for e in _nontrivial(assignment):
        for arc in arcs:
            image_end = frozenset(assignment.apply(e, p) for p in arc.endpoints)
            image_int = frozenset(assignment.apply(e, p) for p in arc.interior)
            if (image_end, image_int) not in family:
                raise HypothesisViolation(
                    3,
                    {"element": repr(e), "arc": arc.as_dict()},
                    "an element maps a chosen arc outside the family",
                )
            stabilizes = image_end == frozenset(arc.endpoints) or any(
                assignment.apply(e, p) == p for p in arc.interior
            )
            if stabilizes and (image_end, image_int) != arc.key():
                raise HypothesisViolation(
                    3,
                    {"element": repr(e), "arc": arc.as_dict()},
                    "an element stabilizing an arc's boundary or an interior "
                    "point does not map the arc to itself",
                )
    return ConditionResult(
        3, True, "the group permutes the arc family equivariantly"
    )


def _cross_two_cycle(assignment: VertexAssignment, e: Perm) -> bool:
    """Whether ``e`` interchanges the two endpoints of some edge."""
    perm = assignment.action.perms[e]
    n = assignment.n
    for v in range(n):
        w = perm(v)
        if w >= n and perm(w) == v:
            return True
    return False


def _check_swap_fixed_shapes(
    assignment: VertexAssignment,
) -> tuple[ConditionResult, tuple[Perm, ...]]:
    """Condition (4): an element interchanging the endpoints of an edge must
    pointwise fix a subgraph small enough for a proper sub-arc of a circle."""
    interchangers = []
    for e in _nontrivial(assignment):
        if assignment.model.parity_of(e) == 1:
            continue
        if not _cross_two_cycle(assignment, e):
            continue
        interchangers.append(e)
        shape = fixed_shape([assignment.induced_aut(e)])
        if not embeds_in_proper_subset_of_circle(shape):
            raise HypothesisViolation(
                4,
                {"element": repr(e), "shape": [shape.a, shape.b]},
                "an edge-interchanging element fixes a subgraph too large "
                "for a proper sub-arc of its circle",
            )
    return (
        ConditionResult(
            4,
            True,
            f"{len(interchangers)} edge-interchanging elements, all with "
            "arc-sized fixed subgraphs",
        ),
        tuple(interchangers),
    )


def _check_swap_circles(
    assignment: VertexAssignment,
    ax: AxisModel,
    interchangers: tuple[Perm, ...],
) -> ConditionResult:
    """Condition (5): an element interchanging the endpoints of an edge has a
    nonempty fixed circle shared with no other element."""
    for e in interchangers:
        axis = ax.axis_of(e)
        if axis is None:
            raise HypothesisViolation(
                5,
                {"element": repr(e)},
                "an edge-interchanging element has an empty fixed-point set",
            )
        if len(axis.elements) != 1:
            raise HypothesisViolation(
                5,
                {
                    "element": repr(e),
                    "sharing": [repr(x) for x in axis.elements],
                },
                "an edge-interchanging element shares its fixed circle with "
                "another element",
            )
    return ConditionResult(
        5,
        True,
        f"{len(interchangers)} edge-interchanging elements, each alone on "
        "its own circle",
    )


def check_edge_embedding_hypotheses(
    assignment: VertexAssignment, ax: AxisModel | None = None
) -> HypothesisReport:
    """Check the five conditions under which the edges of a placed
    ``K_{n,n}`` can be routed equivariantly.

    Raises :class:`HypothesisViolation` carrying the failed condition number
    and a witness; on success returns a report with the chosen arc family.
    """
    if ax is None:
        ax = build_axis_model(assignment)
    results = [_check_common_fixed_circles(assignment, ax)]
    arcs, cond2 = _choose_arcs(assignment, ax)
    results.append(cond2)
    results.append(_check_arc_equivariance(assignment, arcs))
    cond4, interchangers = _check_swap_fixed_shapes(assignment)
    results.append(cond4)
    results.append(_check_swap_circles(assignment, ax, interchangers))
    return HypothesisReport(
        case_name=assignment.case_name,
        n=assignment.n,
        target_group=assignment.target_group,
        conditions=tuple(results),
        arcs=arcs,
    )


# --------------------------------------------------------------------------
# forced fixed sets and the exactness witnesses


def _forced_neighbors(assignment: VertexAssignment, x: int) -> set[int]:
    """Opposite-part vertices forced to be fixed once ``x`` is fixed.

    ``y`` qualifies when the orbit of the edge ``{x, y}`` contains no other
    edge incident to ``x``: a homeomorphism fixing ``x`` and permuting each
    edge orbit must then fix that edge, hence ``y``.
    """
    n = assignment.n
    perms = assignment.action.perms
    opposite = range(n, 2 * n) if x < n else range(n)
    stab = [
        e
        for e in _nontrivial(assignment)
        if perms[e](x) == x
    ]
    good = {y for y in opposite if all(perms[e](y) == y for e in stab)}
    for e in _nontrivial(assignment):
        p = perms[e]
        y0 = p.inverse()(x)
        if y0 in good and p(x) != y0:
            good.discard(y0)
    return good


def _shape_of(assignment: VertexAssignment, vertices: set[int]) -> FixedSubgraphShape:
    n = assignment.n
    return FixedSubgraphShape(
        sum(1 for v in vertices if v < n),
        sum(1 for v in vertices if v >= n),
    )


def forced_fix_closure(
    assignment: VertexAssignment,
    edge: tuple[int, int],
    stop_if_unembeddable: bool = False,
) -> ForcedFix:
    """Least vertex set a symmetry fixing ``edge`` pointwise must fix.

    Starts from the endpoints and repeatedly applies: if a forced vertex
    ``x`` has an incident edge that is the only edge of its orbit incident to
    ``x``, the edge's other endpoint is forced too.  With
    ``stop_if_unembeddable`` the closure stops early once the forced shape
    already fails to embed in a circle (enough for the exactness argument).
    """
    v, w = edge
    n = assignment.n
    if not (0 <= v < 2 * n and 0 <= w < 2 * n):
        raise ValueError(f"edge {edge} out of range for n = {n}")
    if (v < n) == (w < n):
        raise ValueError(f"edge {edge} does not join the two parts")
    vertices = {v, w}
    queue = deque((v, w))
    while queue:
        if stop_if_unembeddable and not embeds_in_circle(
            _shape_of(assignment, vertices)
        ):
            break
        x = queue.popleft()
        new = _forced_neighbors(assignment, x) - vertices
        vertices |= new
        queue.extend(sorted(new))
    return ForcedFix(
        edge=(v, w),
        vertices=frozenset(vertices),
        shape=_shape_of(assignment, vertices),
    )


def _witness_candidates(assignment: VertexAssignment) -> list[tuple[int, int]]:
    """Candidate edges for the exactness witness, most promising first."""
    n = assignment.n
    points = assignment.points
    out: list[tuple[int, int]] = []
    free_v = next((i for i in range(n) if points[i][0] == "free"), None)
    free_w = next((i for i in range(n, 2 * n) if points[i][0] == "free"), None)
    if free_v is not None:
        out.append((free_v, n))
    if free_w is not None:
        out.append((0, free_w))
    index = assignment.action.point_index
    center = index.get(("center", 0))
    if center is not None:
        if center < n:
            non_center = next(
                i for i in range(n) if points[i][0] != "center"
            )
            out.append((non_center, n))
        else:
            non_center = next(
                i for i in range(n, 2 * n) if points[i][0] != "center"
            )
            out.append((0, non_center))
    # fall back to one representative per V-orbit against every W-vertex
    reps = sorted(
        {
            min(i for i in (index[p] for p in orbit) if i < n)
            for orbit in assignment.action.orbits()
            if any(index[p] < n for p in orbit)
        }
    )
    for x in reps:
        for y in range(n, 2 * n):
            out.append((x, y))
    seen: set[tuple[int, int]] = set()
    unique = []
    for e in out:
        if e not in seen:
            seen.add(e)
            unique.append(e)
    return unique


def check_subgroup_theorem(assignment: VertexAssignment) -> SubgroupWitness:
    """Certify that the realized symmetry group is not strictly larger than
    the acting group.

    Searches for an edge whose forced fixed set either fails to embed in a
    circle (condition 1) or meets the fixed circle of some element ``psi`` in
    an adjacent pair without being contained in it (condition 2).  Raises
    :class:`NoWitnessFound` if neither witness exists.
    """
    candidates = _witness_candidates(assignment)
    for edge in candidates:
        forced = forced_fix_closure(assignment, edge, stop_if_unembeddable=True)
        if not embeds_in_circle(forced.shape):
            return SubgroupWitness(edge, forced, 1)
    n = assignment.n
    perms = assignment.action.perms
    for edge in candidates:
        forced = forced_fix_closure(assignment, edge)
        for psi in _nontrivial(assignment):
            fix_psi = set(perms[psi].fixed_points())
            meet = forced.vertices & fix_psi
            if (
                any(x < n for x in meet)
                and any(x >= n for x in meet)
                and not forced.vertices <= fix_psi
            ):
                return SubgroupWitness(edge, forced, 2, psi)
    raise NoWitnessFound(
        f"no exactness witness for the {assignment.case_name} placement "
        f"at n = {assignment.n}"
    )


# --------------------------------------------------------------------------
# the step-down edge for order-24 placements


def _table_step_down_edge(
    assignment: VertexAssignment,
) -> tuple[int, int] | None:
    """The documented unfixed edge for each order-24 placement family."""
    n = assignment.n
    points = assignment.points
    index = assignment.action.point_index
    case = assignment.case_name
    model = assignment.model
    if case == "skeleton-0":
        return (0, n)
    if case == "skeleton-4":
        return (index[("corner", "inner", 0)], index[("corner", "outer", 1)])
    if case == "cube-2":
        free_v = next(i for i in range(n) if points[i][0] == "free")
        return (free_v, n)
    if case == "cube-6":
        free_w = next(i for i in range(n, 2 * n) if points[i][0] == "free")
        return (0, free_w)
    if case in ("cube-8", "cube-20"):
        corner = model.faces[0][0]
        return (
            index[("face", "base", 0)],
            index[("corner", "base", corner)],
        )
    if case == "cube-14":
        corner = model.edges[0][0]
        return (
            index[("edge", "base", 0)],
            index[("corner", "base", corner)],
        )
    if case == "cube-18":
        edge_i = next(
            i for i, pair in enumerate(model.edges) if 0 in pair
        )
        return (
            index[("corner", "outer", 0)],
            index[("edge", "base", edge_i)],
        )
    return None


def _edge_fixer(
    assignment: VertexAssignment, edge: tuple[int, int]
) -> Perm | None:
    """A nontrivial element fixing both endpoints of ``edge``, if any."""
    v, w = edge
    for e in _nontrivial(assignment):
        p = assignment.action.perms[e]
        if p(v) == v and p(w) == w:
            return e
    return None


def subgroup_corollary_witness(
    assignment: VertexAssignment,
    candidate_edges: list[tuple[int, int]] | None = None,
) -> tuple[int, int]:
    """An edge no nontrivial element fixes pointwise, for stepping an
    order-24 placement down to its order-12 rotation subgroup.

    Re-embedding such an edge asymmetrically destroys every symmetry that
    setwise fixes it and every symmetry taking it elsewhere is unaffected,
    which cuts the realized group in half.  ``candidate_edges`` restricts the
    search (used to exercise the error path); by default the documented edge
    for the placement family is tried first, then all edges.  Raises
    :class:`NoSuchEdge` when every candidate is pointwise fixed by some
    nontrivial element.
    """
    if assignment.model.group.order != 24:
        raise ValueError(
            "the step-down edge applies to the order-24 placements only"
        )
    n = assignment.n
    if candidate_edges is None:
        candidates: list[tuple[int, int]] = []
        table = _table_step_down_edge(assignment)
        if table is not None:
            candidates.append(table)
        candidates.extend(
            (v, w) for v in range(n) for w in range(n, 2 * n)
        )
    else:
        candidates = list(candidate_edges)
    for edge in candidates:
        if _edge_fixer(assignment, edge) is None:
            return edge
    raise NoSuchEdge(
        "every candidate edge is pointwise fixed by a nontrivial element"
    )


# --------------------------------------------------------------------------
# the full verification pipeline for one placement


def verify_construction(assignment: VertexAssignment) -> HypothesisReport:
    """Run every check on a placement and return the combined report.

    The report covers: the per-class fixed-count table (matched against the
    counting rows of the necessity engine), the five edge-routing conditions
    with the chosen arcs, the exactness witness, and - when an order-24
    action serves the order-12 target - the step-down edge.
    """
    counts = verify_fixed_counts(assignment)
    base = check_edge_embedding_hypotheses(assignment)
    witness = check_subgroup_theorem(assignment)
    corollary = None
    if (
        assignment.target_group == "A4"
        and assignment.model.group.order == 24
    ):
        corollary = subgroup_corollary_witness(assignment)
    return HypothesisReport(
        case_name=base.case_name,
        n=base.n,
        target_group=base.target_group,
        conditions=base.conditions,
        arcs=base.arcs,
        blocks=summarize_blocks(assignment),
        fixed_counts=counts,
        subgroup_witness=witness,
        corollary_edge=corollary,
    )
