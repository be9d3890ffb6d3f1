"""Two-colourings of 1..n with no monochromatic 3-term progression.

Searching only for colourings that read the same reversed with colours
swapped visits fewer nodes and still finds a certificate for n = 8.
No colouring of 1..9 exists, which pins W(3, 2) at 9.
"""

from __future__ import annotations

from symsearch import enumerate_solutions, restrict_to_internal, solve
from symsearch.internal import pipeline_find_then_restrict
from symsearch.problems import VdwSpec, build_vdw, format_vdw, vdw_symmetries


def main():
    spec = VdwSpec(8)
    p = build_vdw(spec)
    cat = vdw_symmetries(spec)

    plain = enumerate_solutions(p)
    print(f"n=8: {len(plain.solutions)} valid colourings ({plain.stats.line()})")
    for a in plain.solutions:
        print("  " + format_vdw(spec, a.values()).splitlines()[1])

    sym = cat["reflect+colorswap"]
    quot = enumerate_solutions(restrict_to_internal(p, sym))
    print(f"\nfixed by reflect+colorswap: {len(quot.solutions)} ({quot.stats.line()})")

    print("\nn=9:", "refuted" if solve(build_vdw(VdwSpec(9))) is None else "found")

    # find the symmetries shared by the small certificates, then reuse them
    seeds = [a for a in plain.solutions if sym(a) == a]
    res = pipeline_find_then_restrict(p, seeds, list(cat.values()))
    print("\nsymmetries common to the seeds:", [s.name for s in res.seed_symmetries])


if __name__ == "__main__":
    main()
