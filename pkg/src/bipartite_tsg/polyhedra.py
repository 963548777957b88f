"""Exact combinatorial models of the regular tetrahedron, cube and
dodecahedron with their orientation-preserving symmetry groups.

Corners carry exact coordinates over Q(sqrt 5) so that edges, faces and
rotation axes are derived, never hand-typed: edges are the closest corner
pairs, faces are the girth cycles of the edge graph, and each rotation's
axis is read off from its fixed incidence markers.  A fourth model,
"tetrahedron-skeleton", extends the tetrahedral group to the full S4 action
on the 1-skeleton, where odd permutations exchange the inside and outside of
the tetrahedron (so they swap the two center markers, and the odd order-4
elements fix no point at all).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cache, cached_property
from typing import Iterable

from .perms import (
    FiniteGroup,
    GroupAction,
    Perm,
    alternating_group,
    coset_action,
    generate_group,
    symmetric_group,
)


class Q5:
    """Exact element a + b*sqrt(5) of the field Q(sqrt 5)."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def of(cls, x) -> "Q5":
        return x if isinstance(x, Q5) else cls(x)

    def __add__(self, other):
        other = Q5.of(other)
        return Q5(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return Q5(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-Q5.of(other))

    def __rsub__(self, other):
        return Q5.of(other) + (-self)

    def __mul__(self, other):
        other = Q5.of(other)
        return Q5(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Q5":
        norm = self.a * self.a - 5 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("zero has no inverse")
        return Q5(self.a / norm, -self.b / norm)

    def __truediv__(self, other):
        return self * Q5.of(other).inverse()

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(5)."""
        a, b = self.a, self.b
        if a == 0 and b == 0:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a^2 with 5 b^2 on the side of the larger term
        head = 1 if a > 0 else -1
        diff = a * a - 5 * b * b
        if diff == 0:
            return 0
        return head if diff > 0 else -head

    def __eq__(self, other):
        other = Q5.of(other)
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __lt__(self, other):
        return (self - Q5.of(other)).sign() < 0

    def __le__(self, other):
        return (self - Q5.of(other)).sign() <= 0

    def __repr__(self):
        return f"Q5({self.a}, {self.b})"


PHI = Q5(Fraction(1, 2), Fraction(1, 2))  # golden ratio (1 + sqrt 5) / 2

Vec = tuple[Q5, Q5, Q5]
Mat = tuple[Vec, Vec, Vec]


def vec(x, y, z) -> Vec:
    return (Q5.of(x), Q5.of(y), Q5.of(z))


def vadd(u: Vec, v: Vec) -> Vec:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def vneg(u: Vec) -> Vec:
    return (-u[0], -u[1], -u[2])


def vsum(vecs: Iterable[Vec]) -> Vec:
    total = vec(0, 0, 0)
    for v in vecs:
        total = vadd(total, v)
    return total


def dot(u: Vec, v: Vec) -> Q5:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Vec, v: Vec) -> Vec:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dist2(u: Vec, v: Vec) -> Q5:
    d = (u[0] - v[0], u[1] - v[1], u[2] - v[2])
    return dot(d, d)


def mat_apply(m: Mat, v: Vec) -> Vec:
    return tuple(dot(row, v) for row in m)  # type: ignore[return-value]


def mat_mul(m: Mat, n: Mat) -> Mat:
    cols = tuple(zip(*n))
    return tuple(
        tuple(dot(row, col) for col in cols) for row in m
    )  # type: ignore[return-value]


def mat_det(m: Mat) -> Q5:
    return dot(m[0], cross(m[1], m[2]))


# point-class label helpers: labels are ("corner", i), ("edge", i),
# ("face", i), ("center", 0 | 1)
Label = tuple[str, int]


def _closest_pairs(points: list[Vec]) -> list[tuple[int, int]]:
    best: Q5 | None = None
    pairs = []
    for i, j in itertools.combinations(range(len(points)), 2):
        d = dist2(points[i], points[j])
        if best is None or d < best:
            best = d
            pairs = [(i, j)]
        elif d == best:
            pairs.append((i, j))
    return pairs


def _girth_cycles(n_points: int, edges: list[tuple[int, int]], length: int) -> list[tuple[int, ...]]:
    """All simple cycles of the given length, canonicalized (min corner
    first, lexicographically smaller direction)."""
    adjacency: dict[int, set[int]] = {i: set() for i in range(n_points)}
    for i, j in edges:
        adjacency[i].add(j)
        adjacency[j].add(i)
    found: set[tuple[int, ...]] = set()

    def canonical(cycle: tuple[int, ...]) -> tuple[int, ...]:
        k = cycle.index(min(cycle))
        rotated = cycle[k:] + cycle[:k]
        reverse = (rotated[0],) + tuple(reversed(rotated[1:]))
        return min(rotated, reverse)

    def extend(path: list[int]):
        if len(path) == length:
            if path[0] in adjacency[path[-1]]:
                found.add(canonical(tuple(path)))
            return
        for nxt in adjacency[path[-1]]:
            if nxt > path[0] and nxt not in path:
                extend(path + [nxt])

    for start in range(n_points):
        extend([start])
    return sorted(found)


@dataclass(frozen=True)
class AxisEntry:
    """One fixed circle in the geometric action: the nontrivial elements
    whose fixed-point set is this circle, and the base special points on it.

    For circles through the two global centers (even elements), the markers
    come split into the two rays from the center, so that nested-copy slots
    can be interleaved radially.  Odd skeleton circles avoid the centers and
    carry their markers in exact circular order instead.
    """

    elements: tuple[Perm, ...]
    has_centers: bool
    positive_side: tuple[Label, ...]
    negative_side: tuple[Label, ...]
    circular_markers: tuple[Label, ...]  # odd circles only, in circle order

    def base_sequence(self) -> tuple[Label, ...]:
        """Circular slot order with just the base polyhedron's markers."""
        if not self.has_centers:
            return self.circular_markers
        return (
            (("center", 0),)
            + self.positive_side
            + (("center", 1),)
            + tuple(reversed(self.negative_side))
        )


@dataclass(frozen=True)
class PolyhedralModel:
    kind: str
    corner_vectors: tuple[Vec, ...]
    edges: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]
    group: FiniteGroup  # permutations of the corners
    parity: tuple[tuple[Perm, int], ...]  # +1 rotations, -1 skeleton-odd
    action: GroupAction  # on all labels: corners, edges, faces, centers
    axes: tuple[AxisEntry, ...]

    @property
    def points(self) -> tuple[Label, ...]:
        return self.action.points  # type: ignore[return-value]

    @cached_property
    def _parity_map(self) -> dict[Perm, int]:
        return dict(self.parity)

    def parity_of(self, g: Perm) -> int:
        return self._parity_map[g]

    def even_subgroup(self) -> FiniteGroup:
        par = self._parity_map
        return FiniteGroup([g for g in self.group if par[g] == 1])

    def class_sizes(self) -> tuple[int, int, int]:
        return (len(self.corner_vectors), len(self.edges), len(self.faces))

    def vector_of(self, label: Label) -> Vec:
        """Unnormalized direction vector of a special point (not centers)."""
        cls, i = label
        if cls == "corner":
            return self.corner_vectors[i]
        if cls == "edge":
            a, b = self.edges[i]
            return vadd(self.corner_vectors[a], self.corner_vectors[b])
        if cls == "face":
            return vsum(self.corner_vectors[k] for k in self.faces[i])
        raise ValueError(f"no direction vector for {label!r}")

    def fixed_specials(self, g: Perm) -> tuple[Label, ...]:
        """Corner/edge/face labels fixed by g (centers excluded)."""
        return tuple(
            p for p in self.action.fixed_points(g) if p[0] != "center"
        )

    def axis_of(self, g: Perm) -> AxisEntry | None:
        """The fixed circle of a nontrivial element, None for glides."""
        for entry in self.axes:
            if g in entry.elements:
                return entry
        return None


def _rotation_matrices(kind: str) -> tuple[list[Mat], list[Vec]]:
    one, zero = Q5(1), Q5(0)
    r3: Mat = (vec(0, 0, 1), vec(1, 0, 0), vec(0, 1, 0))  # cyclic x->y->z->x
    if kind in ("tetrahedron", "tetrahedron-skeleton"):
        corners = [vec(1, 1, 1), vec(1, -1, -1), vec(-1, 1, -1), vec(-1, -1, 1)]
        r2: Mat = (vec(-1, 0, 0), vec(0, -1, 0), vec(0, 0, 1))
        gens = [r3, r2]
        if kind == "tetrahedron-skeleton":
            swap_xy: Mat = (vec(0, 1, 0), vec(1, 0, 0), vec(0, 0, 1))
            gens.append(swap_xy)
        return gens, corners
    if kind == "cube":
        corners = [vec(x, y, z) for x in (1, -1) for y in (1, -1) for z in (1, -1)]
        r4: Mat = (vec(0, -1, 0), vec(1, 0, 0), vec(0, 0, 1))  # quarter turn about z
        return [r4, r3], corners
    if kind == "dodecahedron":
        inv_phi = PHI - 1  # 1/phi = phi - 1
        corners = [vec(x, y, z) for x in (1, -1) for y in (1, -1) for z in (1, -1)]
        for s1 in (1, -1):
            for s2 in (1, -1):
                a, b = PHI * s1, inv_phi * s2
                corners.append((Q5(0), a, b))
                corners.append((b, Q5(0), a))
                corners.append((a, b, Q5(0)))
        half = Q5(Fraction(1, 2))
        r5: Mat = (
            ((PHI - 1) * half, -PHI * half, half),
            (PHI * half, half, (PHI - 1) * half),
            (-half, (PHI - 1) * half, PHI * half),
        )
        r2: Mat = (vec(-1, 0, 0), vec(0, -1, 0), vec(0, 0, 1))
        return [r5, r3, r2], corners
    raise ValueError(f"unknown polyhedron kind {kind!r}")


_FACE_LENGTH = {"tetrahedron": 3, "tetrahedron-skeleton": 3, "cube": 4, "dodecahedron": 5}
_EXPECTED = {
    "tetrahedron": (4, 6, 4, 12),
    "tetrahedron-skeleton": (4, 6, 4, 24),
    "cube": (8, 12, 6, 24),
    "dodecahedron": (20, 30, 12, 60),
}


def _angular_order(markers: list[Label], vectors: list[Vec]) -> tuple[Label, ...]:
    """Exact circular order of coplanar points around the origin."""
    u = vectors[0]
    w = next(v for v in vectors if cross(u, v) != vec(0, 0, 0))
    normal = cross(u, w)
    coords = []
    for label, v in zip(markers, vectors):
        if dot(v, normal) != Q5(0):
            raise ValueError(f"{label!r} is not coplanar with the circle")
        x = dot(v, u)
        y = dot(cross(normal, u), v)  # component along the in-plane normal of u
        coords.append((label, x, y))

    def half(x: Q5, y: Q5) -> int:
        # 0 for angle in [0, pi), 1 for [pi, 2 pi)
        if y.sign() > 0 or (y.sign() == 0 and x.sign() > 0):
            return 0
        return 1

    import functools

    def compare(p, q):
        _, x1, y1 = p
        _, x2, y2 = q
        h1, h2 = half(x1, y1), half(x2, y2)
        if h1 != h2:
            return -1 if h1 < h2 else 1
        s = (x1 * y2 - x2 * y1).sign()
        return -s  # positive cross product means p comes first

    ordered = sorted(coords, key=functools.cmp_to_key(compare))
    return tuple(label for label, _, _ in ordered)


def _build_axes(
    group: FiniteGroup,
    parity: dict[Perm, int],
    action: GroupAction,
    vector_of,
) -> tuple[AxisEntry, ...]:
    by_fixed: dict[tuple[Label, ...], list[Perm]] = {}
    for g in group:
        if g.is_identity():
            continue
        fixed = tuple(
            p for p in action.fixed_points(g) if p[0] != "center"
        )
        by_fixed.setdefault(fixed, []).append(g)
    entries = []
    for fixed, elements in sorted(by_fixed.items()):
        parities = {parity[g] for g in elements}
        if len(parities) != 1:
            raise AssertionError("elements sharing a fixed set must share parity")
        if not fixed:
            # No fixed special points: glide-type elements with empty fixed
            # set.  Only odd order-4 skeleton elements may land here.
            if any(parity[g] == 1 or g.order() != 4 for g in elements):
                raise AssertionError("unexpected fixed-point-free rotation")
            continue
        if parities == {1}:
            # rotation axis through the two centers; split markers by ray
            u = vector_of(fixed[0])
            pos, neg = [], []
            for label in fixed:
                v = vector_of(label)
                c = cross(u, v)
                if c != vec(0, 0, 0):
                    raise AssertionError("axis markers must be collinear")
                (pos if dot(u, v).sign() > 0 else neg).append(label)
            entries.append(
                AxisEntry(tuple(sorted(elements)), True, tuple(pos), tuple(neg), ())
            )
        else:
            vectors = [vector_of(label) for label in fixed]
            order = _angular_order(list(fixed), vectors)
            entries.append(AxisEntry(tuple(sorted(elements)), False, (), (), order))
    return tuple(entries)


@cache
def build_polyhedral_model(kind: str) -> PolyhedralModel:
    matrices, corners = _rotation_matrices(kind)
    n_corners = len(corners)
    index = {v: i for i, v in enumerate(corners)}

    def corner_perm(m: Mat) -> Perm:
        images = []
        for v in corners:
            w = mat_apply(m, v)
            if w not in index:
                raise ValueError("matrix does not preserve the corner set")
            images.append(index[w])
        return Perm(images)

    gen_perms = [corner_perm(m) for m in matrices]
    gen_parity = [mat_det(m).sign() for m in matrices]
    group = generate_group(gen_perms)

    # parity extends multiplicatively from the generators along the closure
    parity: dict[Perm, int] = {group.identity: 1}
    frontier = [group.identity]
    while frontier:
        new = []
        for e in frontier:
            for g, sign in zip(gen_perms, gen_parity):
                p = g * e
                if p not in parity:
                    parity[p] = sign * parity[e]
                    new.append(p)
        frontier = new

    edges = sorted(_closest_pairs(corners))
    faces = _girth_cycles(n_corners, edges, _FACE_LENGTH[kind])
    exp_corners, exp_edges, exp_faces, exp_order = _EXPECTED[kind]
    if (n_corners, len(edges), len(faces), group.order) != (
        exp_corners,
        exp_edges,
        exp_faces,
        exp_order,
    ):
        raise AssertionError(f"derived {kind} model has wrong class sizes")
    edge_count: dict[tuple[int, int], int] = {e: 0 for e in edges}
    for f in faces:
        for a, b in zip(f, f[1:] + f[:1]):
            edge_count[(min(a, b), max(a, b))] += 1
    if set(edge_count.values()) != {2}:
        raise AssertionError("every edge must bound exactly two faces")

    edge_index = {e: i for i, e in enumerate(edges)}
    face_sets = [frozenset(f) for f in faces]
    face_index = {s: i for i, s in enumerate(face_sets)}
    labels: list[Label] = (
        [("corner", i) for i in range(n_corners)]
        + [("edge", i) for i in range(len(edges))]
        + [("face", i) for i in range(len(faces))]
        + [("center", 0), ("center", 1)]
    )

    def act(g: Perm, label: Label) -> Label:
        cls, i = label
        if cls == "corner":
            return ("corner", g(i))
        if cls == "edge":
            a, b = edges[i]
            return ("edge", edge_index[(min(g(a), g(b)), max(g(a), g(b)))])
        if cls == "face":
            return ("face", face_index[frozenset(g(k) for k in face_sets[i])])
        if parity[g] == 1:
            return label
        return ("center", 1 - i)

    action = GroupAction(group, tuple(labels), act, check="generators")

    corner_vectors = tuple(corners)

    def vector_of(label: Label) -> Vec:
        cls, i = label
        if cls == "corner":
            return corner_vectors[i]
        if cls == "edge":
            a, b = edges[i]
            return vadd(corner_vectors[a], corner_vectors[b])
        return vsum(corner_vectors[k] for k in faces[i])

    axes = _build_axes(group, parity, action, vector_of)

    model = PolyhedralModel(
        kind,
        corner_vectors,
        tuple(edges),
        tuple(faces),
        group,
        tuple(sorted(parity.items())),
        action,
        axes,
    )
    _sanity_check_axes(model)
    return model


def _sanity_check_axes(model: PolyhedralModel) -> None:
    covered = 0
    for entry in model.axes:
        covered += len(entry.elements)
        seq = entry.base_sequence()
        if len(set(seq)) != len(seq):
            raise AssertionError("axis sequence repeats a slot")
    glides = sum(
        1
        for g in model.group
        if not g.is_identity() and model.axis_of(g) is None
    )
    if covered + glides != model.group.order - 1:
        raise AssertionError("every nontrivial element needs a fixed-set record")


def fixed_count_table(
    model: PolyhedralModel,
) -> tuple[tuple[Perm, int, int, dict[str, int]], ...]:
    """Fixed counts per point class, one row per conjugacy class:
    (representative, order, parity, counts).  Conjugate elements must agree."""
    rows = []
    for cls in model.group.conjugacy_classes():
        rep = cls[0]
        if rep.is_identity():
            continue
        per_element = []
        for g in cls:
            counts = {"corner": 0, "edge": 0, "face": 0}
            for p in model.fixed_specials(g):
                counts[p[0]] += 1
            per_element.append(counts)
        if any(c != per_element[0] for c in per_element):
            raise AssertionError("conjugate elements disagree on fixed counts")
        rows.append((rep, rep.order(), model.parity_of(rep), per_element[0]))
    return tuple(rows)


# --------------------------------------------------------------------------
# the independent coset-action oracle

ClassSignature = tuple[tuple[int, int, tuple[int, int, int]], ...]
# Sorted rows (element order, conjugacy class size, fixed counts per marker
# class in corner/edge/face order) - the group-agnostic form under which the
# two oracles can be compared.


def incidence_fixed_signature(model: PolyhedralModel) -> ClassSignature:
    """Class signature of a rotation model, from the geometric incidences."""
    rows = []
    classes = {cls[0]: len(cls) for cls in model.group.conjugacy_classes()}
    for rep, order, parity, counts in fixed_count_table(model):
        if parity != 1:
            raise ValueError(
                "the signature is defined for rotation-only models"
            )
        rows.append(
            (order, classes[rep], (counts["corner"], counts["edge"], counts["face"]))
        )
    return tuple(sorted(rows))


_MARKER_STABILIZER_ORDER = {
    "tetrahedron": {"corner": 3, "edge": 2, "face": 3},
    "cube": {"corner": 3, "edge": 2, "face": 4},
    "dodecahedron": {"corner": 3, "edge": 2, "face": 5},
}


def _abstract_rotation_group(kind: str) -> FiniteGroup:
    """The rotation group as an abstract permutation group, built without
    reference to any geometry: the tetrahedral group permutes its 4 corners
    evenly, the octahedral group permutes the cube's 4 long diagonals, and
    the icosahedral group is the alternating group on 5 letters (acting on
    the 5 inscribed compounds)."""
    if kind == "tetrahedron":
        return alternating_group(4)
    if kind == "cube":
        return symmetric_group(4)
    if kind == "dodecahedron":
        return alternating_group(5)
    raise ValueError(f"no abstract rotation group for {kind!r}")


def _cyclic_stabilizer(group: FiniteGroup, order: int) -> FiniteGroup:
    """A cyclic subgroup generated by an element of the given order.

    Where two conjugacy classes share the order (the octahedral involutions)
    the marker stabilizer is the class whose elements move fewer letters:
    an edge of the cube is stabilized by the half-turn exchanging just one
    pair of diagonals, not by a face half-turn exchanging both pairs."""
    candidates = group.elements_of_order(order)
    generator = max(
        candidates, key=lambda e: (len(e.fixed_points()), e.images)
    )
    powers = {generator}
    current = generator
    while True:
        current = current * generator
        if current in powers:
            break
        powers.add(current)
    return FiniteGroup(powers)


def build_coset_model(kind: str) -> ClassSignature:
    """Class signature of a solid from pure group theory: each marker class
    is the coset space of a cyclic stabilizer, and fixed counts are fixed
    cosets.  Independent of the coordinate models, so agreement with
    :func:`incidence_fixed_signature` cross-validates both."""
    group = _abstract_rotation_group(kind)
    stabilizer_orders = _MARKER_STABILIZER_ORDER[kind]
    actions = {
        marker: coset_action(group, _cyclic_stabilizer(group, order))
        for marker, order in stabilizer_orders.items()
    }
    rows = []
    for cls in group.conjugacy_classes():
        rep = cls[0]
        if rep.is_identity():
            continue
        per_element = {
            g: tuple(
                actions[marker].fixed_count(g)
                for marker in ("corner", "edge", "face")
            )
            for g in cls
        }
        first = per_element[rep]
        if any(v != first for v in per_element.values()):
            raise AssertionError("conjugate elements disagree on fixed cosets")
        rows.append((rep.order(), len(cls), first))
    return tuple(sorted(rows))
