"""Top-level decision API: for which ``n`` does ``K_{n,n}`` embed in the
three-sphere with orientation-preserving topological symmetry group A4, S4,
or A5?

``decide`` combines the two halves of the classification: the necessity
engine (arithmetic constraints that exclude pairs) and the construction
pipeline (an explicit equivariant placement, verified combinatorially, for
every admitted pair).  The outcome always equals the closed-form predicate

* A4:  n ≡ 0, 2, 4, 6, 8 (mod 12) and n ≥ 4,
* S4:  n ≡ 0, 2, 4, 6, 8 (mod 12), n ≥ 4 and n ≠ 6,
* A5:  n ≡ 0, 2, 12, 20, 30, 32, 42, 50 (mod 60) and n > 30;

any disagreement between the pipeline and the predicate raises
:class:`InternalMismatch` and is a bug, never an input error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .assignments import NotRealizable, build_assignment
from .hypotheses import (
    HypothesisReport,
    HypothesisViolation,
    NoWitnessFound,
    verify_construction,
)
from .necessity import (
    FixedProfile,
    NecessityVerdict,
    TABLE_MODULUS,
    necessity_verdict,
)

__all__ = [
    "GROUPS",
    "InternalMismatch",
    "SweepTable",
    "Verdict",
    "decide",
    "sweep",
    "theorem_predicate",
]

GROUPS = ("A4", "S4", "A5")

_MOD12_RESIDUES = frozenset({0, 2, 4, 6, 8})
_MOD60_RESIDUES = frozenset({0, 2, 12, 20, 30, 32, 42, 50})


def theorem_predicate(n: int, group: str) -> bool:
    """The closed-form classification, as a plain arithmetic test."""
    if group == "A4":
        return n % 12 in _MOD12_RESIDUES and n >= 4
    if group == "S4":
        return n % 12 in _MOD12_RESIDUES and n >= 4 and n != 6
    if group == "A5":
        return n % 60 in _MOD60_RESIDUES and n > 30
    raise ValueError(f"unknown group {group!r}")


class InternalMismatch(RuntimeError):
    """The verification pipeline disagrees with the closed-form predicate.

    This cannot be triggered by input: it means a construction recipe or a
    checker is wrong."""

    def __init__(self, verdict: "Verdict", expected: bool):
        self.verdict = verdict
        self.expected = expected
        super().__init__(
            f"pipeline answered {verdict.realizable} for "
            f"(n={verdict.n}, {verdict.group}) but the classification "
            f"says {expected}"
            + (f": {verdict.diagnostic}" if verdict.diagnostic else "")
        )


def _profile_dict(profile: FixedProfile, residue: int, modulus: int) -> dict:
    return {
        "residue": f"{residue} (mod {modulus})",
        "v": {slot: str(count) for slot, count in profile.v},
        "w": {slot: str(count) for slot, count in profile.w},
    }


@dataclass(frozen=True)
class Verdict:
    """Composite answer for one (n, group) pair.

    ``realizable`` is true exactly when the necessity engine admits the pair
    and the construction pipeline produced a fully verified placement.
    ``citations`` lists the ids of the necessity rules behind the verdict;
    ``diagnostic`` is set only when a construction failed (a build bug).
    """

    n: int
    group: str
    realizable: bool
    necessity: NecessityVerdict
    construction: HypothesisReport | None
    citations: tuple[str, ...]
    diagnostic: str | None = None

    def as_dict(self) -> dict:
        out = {
            "n": self.n,
            "group": self.group,
            "realizable": self.realizable,
            "rules": [
                {"id": rule.id, "citation": rule.statement}
                for rule in self.necessity.rules_fired
            ],
        }
        if self.necessity.witness_profile is not None:
            modulus = TABLE_MODULUS[self.group]
            out["profile"] = _profile_dict(
                self.necessity.witness_profile, self.n % modulus, modulus
            )
        if self.construction is not None:
            c = self.construction.as_dict()
            out["construction"] = {
                "case": c["case"],
                "blocks": c["blocks"],
                "fixed_counts": c.get("fixed_counts"),
                "hypotheses": {
                    "conditions": c["conditions"],
                    "arcs": len(self.construction.arcs),
                },
                "witness": c.get("subgroup_witness"),
            }
            if "step_down_edge" in c:
                out["construction"]["step_down_edge"] = c["step_down_edge"]
        if self.diagnostic is not None:
            out["diagnostic"] = self.diagnostic
        return out


def decide(n: int, group: str, strict: bool = True) -> Verdict:
    """Decide one (n, group) pair by running the whole pipeline.

    Runs the necessity engine; when it admits the pair, builds the placement
    and verifies fixed counts, the five edge-routing conditions, and the
    exactness witness.  With ``strict`` (the default) a disagreement with the
    closed-form classification raises :class:`InternalMismatch`.
    """
    if n < 0:
        raise ValueError("part size must be nonnegative")
    necessity = necessity_verdict(n, group)
    construction = None
    diagnostic = None
    realizable = False
    if necessity.allowed:
        try:
            assignment = build_assignment(group, n)
            construction = verify_construction(assignment)
            realizable = all(c.passed for c in construction.conditions)
        except (
            NotRealizable,
            HypothesisViolation,
            NoWitnessFound,
            AssertionError,
        ) as exc:
            diagnostic = f"{type(exc).__name__}: {exc}"
    verdict = Verdict(
        n=n,
        group=group,
        realizable=realizable,
        necessity=necessity,
        construction=construction,
        citations=tuple(rule.id for rule in necessity.rules_fired),
        diagnostic=diagnostic,
    )
    expected = theorem_predicate(n, group)
    if strict and verdict.realizable != expected:
        raise InternalMismatch(verdict, expected)
    return verdict


@dataclass(frozen=True)
class SweepTable:
    """Verdicts for every n from 1 to ``n_max`` for one group."""

    group: str
    n_max: int
    rows: tuple[Verdict, ...]

    def realizable_values(self) -> tuple[int, ...]:
        return tuple(v.n for v in self.rows if v.realizable)

    def residue_summary(self) -> dict[int, int]:
        """Number of realizable n per residue class of the group's modulus."""
        modulus = TABLE_MODULUS[self.group]
        out: dict[int, int] = {}
        for v in self.rows:
            if v.realizable:
                out[v.n % modulus] = out.get(v.n % modulus, 0) + 1
        return dict(sorted(out.items()))


def sweep(group: str, n_max: int, strict: bool = True) -> SweepTable:
    """Decide every n from 1 to ``n_max`` (inclusive), in order."""
    if n_max < 0:
        raise ValueError("sweep limit must be nonnegative")
    rows = tuple(decide(n, group, strict=strict) for n in range(1, n_max + 1))
    return SweepTable(group=group, n_max=n_max, rows=rows)
