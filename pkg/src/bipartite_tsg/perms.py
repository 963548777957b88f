"""Permutations, fully enumerated finite groups, and group actions.

Every group handled by this package has order at most a few thousand, so
groups are closed by plain breadth-first multiplication and kept as sorted
element tuples.  No stabilizer chains, no randomization: element order is
the lexicographic order of image tuples, which makes every downstream
enumeration deterministic.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import lcm
from typing import Callable, Hashable, Iterable, Iterator, Sequence


class Perm:
    """An immutable permutation of range(degree), stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        self.images: tuple[int, ...] = images

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Build a permutation from disjoint cycles; unmentioned points are fixed."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            cycle = list(cycle)
            for x in cycle:
                if not 0 <= x < degree:
                    raise ValueError(f"point {x} out of range for degree {degree}")
                if x in seen:
                    raise ValueError(f"point {x} appears in two cycles")
                seen.add(x)
            for pos, x in enumerate(cycle):
                images[x] = cycle[(pos + 1) % len(cycle)]
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition: (p * q)(x) = p(q(x))."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        imgs = self.images
        return Perm(imgs[i] for i in other.images)

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> tuple[tuple[int, ...], ...]:
        """Cycle normal form: each cycle starts at its smallest point, cycles
        are sorted by smallest point."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                seen[x] = True
                cycle.append(x)
                x = self.images[x]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return tuple(out)

    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles(include_fixed=True)))

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, j in enumerate(self.images) if i == j)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())
        return f"Perm[{body or 'id'}]"


def perm_order(p: Perm) -> int:
    """Order of a permutation: the lcm of its cycle lengths."""
    return p.order()


class FiniteGroup:
    """A fully enumerated permutation group on range(degree).

    ``elements`` is always sorted lexicographically by image tuple, so any
    iteration over a group is reproducible across runs.
    """

    def __init__(self, elements: Iterable[Perm], generators: Sequence[Perm] = ()):
        elems = sorted(set(elements))
        if not elems:
            raise ValueError("a group needs at least the identity")
        self.degree: int = elems[0].degree
        if any(e.degree != self.degree for e in elems):
            raise ValueError("degree mismatch among elements")
        self.elements: tuple[Perm, ...] = tuple(elems)
        self.generators: tuple[Perm, ...] = tuple(generators) or self.elements
        self.identity: Perm = Perm.identity(self.degree)
        self._element_set = frozenset(self.elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if self.identity not in self._element_set:
            raise ValueError("identity missing")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self._element_set

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, p: Perm) -> int:
        return self._index[p]

    def validate(self) -> None:
        """Exhaustive group-axiom check (closure and inverses). Desk scale."""
        for a in self.elements:
            if a.inverse() not in self._element_set:
                raise ValueError(f"inverse of {a} missing")
            for b in self.elements:
                if a * b not in self._element_set:
                    raise ValueError(f"not closed: {a} * {b}")

    def is_subgroup(self, sub: "FiniteGroup") -> bool:
        return sub.degree == self.degree and all(h in self for h in sub.elements)

    def elements_of_order(self, k: int) -> tuple[Perm, ...]:
        return tuple(e for e in self.elements if e.order() == k)

    def conjugacy_classes(self) -> tuple[tuple[Perm, ...], ...]:
        """Partition of the elements into conjugacy classes, each class sorted,
        classes ordered by their least element."""
        remaining = set(self.elements)
        classes = []
        for e in self.elements:
            if e not in remaining:
                continue
            cls = {g * e * g.inverse() for g in self.elements}
            remaining -= cls
            classes.append(tuple(sorted(cls)))
        return tuple(sorted(classes, key=lambda c: c[0]))

    def conjugacy_class_of(self, e: Perm) -> tuple[Perm, ...]:
        return tuple(sorted({g * e * g.inverse() for g in self.elements}))

    def centralizer_order(self, e: Perm) -> int:
        return sum(1 for g in self.elements if g * e == e * g)

    def cyclic_subgroups(self) -> tuple[tuple[Perm, ...], ...]:
        """All cyclic subgroups, as sorted element tuples, deduplicated."""
        subs = {tuple(sorted({e ** k for k in range(e.order())})) for e in self.elements}
        return tuple(sorted(subs))

    def maximal_cyclic_subgroups(self) -> tuple[tuple[Perm, ...], ...]:
        """Cyclic subgroups not properly contained in a larger cyclic subgroup."""
        subs = self.cyclic_subgroups()
        out = []
        for s in subs:
            sset = set(s)
            if len(s) == 1:
                continue
            if any(sset < set(t) for t in subs):
                continue
            out.append(s)
        return tuple(out)

    def subgroup(self, elements: Iterable[Perm]) -> "FiniteGroup":
        sub = FiniteGroup(elements)
        if not self.is_subgroup(sub):
            raise ValueError("not a subgroup: elements escape the parent group")
        return sub


def generate_group(gens: Sequence[Perm]) -> FiniteGroup:
    """Close a generating set under multiplication.

    Raises ValueError if the generators do not share a degree.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("degree mismatch among generators")
    identity = Perm.identity(degree)
    elements = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for e in frontier:
            for g in gens:
                p = g * e
                if p not in elements:
                    elements.add(p)
                    new.append(p)
        frontier = new
    return FiniteGroup(elements, generators=tuple(gens))


def conjugacy_classes(group: FiniteGroup) -> tuple[tuple[Perm, ...], ...]:
    return group.conjugacy_classes()


def symmetric_group(n: int) -> FiniteGroup:
    if n <= 1:
        return FiniteGroup([Perm.identity(max(n, 1))])
    gens = [Perm.from_cycles(n, [(0, 1)]), Perm.from_cycles(n, [tuple(range(n))])]
    return generate_group(gens)


def alternating_group(n: int) -> FiniteGroup:
    if n <= 2:
        return FiniteGroup([Perm.identity(max(n, 1))])
    if n == 3:
        return generate_group([Perm.from_cycles(3, [(0, 1, 2)])])
    three_cycles = [Perm.from_cycles(n, [(0, 1, k)]) for k in range(2, n)]
    return generate_group(three_cycles)


def cyclic_group(n: int, degree: int | None = None) -> FiniteGroup:
    degree = degree or n
    return generate_group([Perm.from_cycles(degree, [tuple(range(n))])])


class UnionFind:
    """Plain union-find over range(n), used for direct orbit counting."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if rb < ra:
                ra, rb = rb, ra
            self.parent[rb] = ra

    def component_count(self) -> int:
        return len({self.find(x) for x in range(len(self.parent))})


class GroupAction:
    """A finite group acting on a finite labelled point set.

    ``act_fn(element, label) -> label`` defines the action; every element is
    converted to a Perm on point indices at construction.  The homomorphism
    law act(g*a) = act(g) o act(a) is verified for every generator g against
    every element a, which pins the whole multiplication table for a
    generated group; ``check="full"`` verifies all pairs outright.
    """

    def __init__(
        self,
        group: FiniteGroup,
        points: Sequence[Hashable],
        act_fn: Callable[[Perm, Hashable], Hashable],
        check: str = "generators",
    ):
        self.group = group
        self.points: tuple[Hashable, ...] = tuple(points)
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate point labels")
        index = {p: i for i, p in enumerate(self.points)}
        self.point_index = index
        perms: dict[Perm, Perm] = {}
        for e in group.elements:
            images = []
            for p in self.points:
                q = act_fn(e, p)
                if q not in index:
                    raise ValueError(f"action leaves the point set: {e!r} sends {p!r} to {q!r}")
                images.append(index[q])
            perms[e] = Perm(images)
        self.perms = perms
        if not perms[group.identity].is_identity():
            raise ValueError("identity does not act trivially")
        if check == "generators":
            pairs: Iterable[tuple[Perm, Perm]] = (
                (g, a) for g in group.generators for a in group.elements
            )
        elif check == "full":
            pairs = itertools.product(group.elements, group.elements)
        elif check == "none":
            pairs = ()
        else:
            raise ValueError(f"unknown check mode {check!r}")
        for g, a in pairs:
            if perms[g * a] != perms[g] * perms[a]:
                raise ValueError(f"not a homomorphism at ({g!r}, {a!r})")

    def perm_of(self, e: Perm) -> Perm:
        return self.perms[e]

    def apply(self, e: Perm, label: Hashable) -> Hashable:
        return self.points[self.perms[e](self.point_index[label])]

    def fixed_points(self, e: Perm) -> tuple[Hashable, ...]:
        return tuple(self.points[i] for i in self.perms[e].fixed_points())

    def fixed_count(self, e: Perm) -> int:
        return len(self.perms[e].fixed_points())

    def orbits(self) -> tuple[tuple[Hashable, ...], ...]:
        uf = UnionFind(len(self.points))
        for e in self.group.generators:
            perm = self.perms[e]
            for i in range(len(self.points)):
                uf.union(i, perm(i))
        buckets: dict[int, list[Hashable]] = {}
        for i, p in enumerate(self.points):
            buckets.setdefault(uf.find(i), []).append(p)
        return tuple(tuple(b) for _, b in sorted(buckets.items()))

    def orbit_count_unionfind(self) -> int:
        return len(self.orbits())

    def orbit_count_burnside(self) -> Fraction:
        total = sum(self.fixed_count(e) for e in self.group.elements)
        return Fraction(total, self.group.order)

    def orbit_count(self) -> int:
        """Orbit count computed two independent ways; they must agree and the
        Burnside average must be an integer."""
        direct = self.orbit_count_unionfind()
        average = self.orbit_count_burnside()
        if average.denominator != 1 or average != direct:
            raise AssertionError(
                f"orbit count mismatch: union-find {direct}, Burnside {average}"
            )
        return direct


def coset_action(group: FiniteGroup, sub: FiniteGroup) -> GroupAction:
    """Left multiplication of ``group`` on the left cosets of ``sub``.

    Cosets are labelled by their least element.  Raises ValueError if ``sub``
    is not a subgroup of ``group``.
    """
    if not group.is_subgroup(sub):
        raise ValueError("H is not a subgroup of G")
    rep_of: dict[Perm, Perm] = {}
    reps = []
    for g in group.elements:
        if g in rep_of:
            continue
        coset = sorted(g * h for h in sub.elements)
        rep = coset[0]
        reps.append(rep)
        for x in coset:
            rep_of[x] = rep
    return GroupAction(group, tuple(sorted(reps)), lambda e, r: rep_of[e * r])


def fixed_points(e: Perm, action: GroupAction) -> tuple[Hashable, ...]:
    return action.fixed_points(e)


def orbit_count(action: GroupAction) -> int:
    return action.orbit_count()
