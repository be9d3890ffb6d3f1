"""Order-3 magic squares: one symmetry class, broken two ways.

Run with ``python demos/01_magic_symmetry_breaking.py``.
"""

from __future__ import annotations

from symsearch import enumerate_solutions, lex_leader, transform_sbc_set, validate_sbc
from symsearch.problems import build_magic, format_magic, magic_group, magic_symmetries
from symsearch.symbreak import corner_constraint


def show(title, solutions):
    print(f"{title}: {len(solutions)} solutions")
    for a in solutions:
        print(format_magic(a.values()))


def main():
    p = build_magic(3)
    group = magic_group(3)
    sq = magic_symmetries(3)

    res = enumerate_solutions(p)
    print(f"all order-3 squares: {len(res.solutions)} ({res.stats.line()})")

    # every square is an image of the first one, so the census is a single orbit
    first = res.solutions[0]
    images = {sq[name](first) for name in ("id", "rot90", "rot180", "rot270",
                                           "flipH", "flipV", "diag", "antidiag")}
    print(f"images of the first square under the 8 moves: {len(images)}\n")

    lex = lex_leader(group)
    show("with lex-leader constraints", enumerate_solutions(p.with_constraints(*lex)).solutions)
    print(validate_sbc(p, lex, group).summary(), "\n")

    # a single comparison halves the census but does not break it fully
    corner = [corner_constraint(p)]
    print("corner constraint:", validate_sbc(p, corner, group).summary())

    # reflecting the constraint through the main diagonal swaps which half survives
    moved = transform_sbc_set(corner, sq["diag"], group)
    print("after the diag transform:", moved[0])
    a = set(enumerate_solutions(p.with_constraints(*corner)).solutions)
    b = set(enumerate_solutions(p.with_constraints(*moved)).solutions)
    print(f"survivors {len(a)} and {len(b)}; diag maps one set onto the other:",
          {sq["diag"](x) for x in a} == b)


if __name__ == "__main__":
    main()
