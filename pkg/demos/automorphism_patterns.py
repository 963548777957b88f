"""Which automorphisms of K_{n,n} can a symmetry of an embedding induce?

An automorphism is induced by an orientation-preserving homeomorphism of
some embedding exactly when its cycle structure matches one of nine
patterns.  This demo classifies every automorphism of K_{3,3} and then
examines a few larger hand-picked examples given in cycle notation.

Run:  python3 demos/automorphism_patterns.py
"""

from itertools import permutations

from bipartite_tsg import check_realizable, validate_automorphism
from bipartite_tsg.cli import check_automorphism_cmd
from bipartite_tsg.notation import print_cycles
from bipartite_tsg.perms import Perm


def all_automorphisms(n: int):
    """Brute force: part permutations combined with an optional swap."""
    for swap in (False, True):
        for sigma in permutations(range(n)):
            for tau in permutations(range(n)):
                if swap:
                    images = tuple(n + tau[i] for i in range(n)) + tuple(
                        sigma[j] for j in range(n)
                    )
                else:
                    images = tuple(sigma) + tuple(n + tau[j] for j in range(n))
                yield Perm(images)


def main() -> None:
    n = 3
    accepted, rejected = [], []
    for perm in all_automorphisms(n):
        aut = validate_automorphism(perm, n)
        result = check_realizable(aut)
        (accepted if result.realizable else rejected).append((perm, result))
    total = len(accepted) + len(rejected)
    print(f"K_{{3,3}} has {total} automorphisms; "
          f"{len(accepted)} are realizable, {len(rejected)} are not\n")

    print("examples of rejected automorphisms:")
    for perm, _ in rejected[:3]:
        text = print_cycles(perm, n) or "(identity)"
        print(f"  {text}")

    print("\nhand-picked examples:")
    for text, size in (
        ("(v1 v2 v3)(v4 v5 v6)(w1 w2 w3)(w4 w5 w6)", 6),
        ("(v1 w1 v2 w2)(v3 w3 v4 w4)", 4),
        ("(v1 v2 v3)(w1 w2 w3)", 6),
    ):
        result, report = check_automorphism_cmd(text, size)
        print(f"\n  n = {size}: {report['cycles']}")
        print(f"    order {report['order']}, {report['part_behavior']} the parts")
        if result.realizable:
            print(f"    realizable ({result.orientation})")
            for entry in report["matched_cases"]:
                print(f"      case ({entry['case']}): {entry['pattern']}")
        else:
            print("    not realizable")


if __name__ == "__main__":
    main()
