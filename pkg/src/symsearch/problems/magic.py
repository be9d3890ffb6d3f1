"""Normal magic squares of order n.

Cell ``(row, col)`` is variable ``col + n * row`` (row-major), holding a
value in ``1..n*n``.
"""

from __future__ import annotations

from typing import Sequence

from ..constraints import AllDifferent, LinearSumEq
from ..engine import Problem
from ..symmetry import Assignment, Symmetry, close_group, identity
from .common import Verdict

__all__ = [
    "magic_constant",
    "magic_lines",
    "build_magic",
    "magic_symmetries",
    "magic_group",
    "verify_magic",
    "grid_to_assignment",
    "assignment_to_grid",
]


def magic_constant(n: int) -> int:
    return n * (n * n + 1) // 2


def magic_lines(n: int) -> list[tuple[str, tuple[int, ...]]]:
    """Named lines in check order: rows, columns, main diagonal, anti-diagonal."""
    lines = [(f"row {r}", tuple(c + n * r for c in range(n))) for r in range(n)]
    lines += [(f"column {c}", tuple(c + n * r for r in range(n))) for c in range(n)]
    lines.append(("main diagonal", tuple(i + n * i for i in range(n))))
    lines.append(("anti-diagonal", tuple((n - 1 - i) + n * i for i in range(n))))
    return lines


def build_magic(n: int) -> Problem:
    if n < 1:
        raise ValueError("magic square order must be at least 1")
    cells = n * n
    values = range(1, cells + 1)
    m = magic_constant(n)
    cons = [AllDifferent(tuple(range(cells)))]
    cons += [LinearSumEq(line, m) for _, line in magic_lines(n)]
    return Problem.uniform(cells, values, cons, family="magic", params=(n,))


def _spatial(n: int, move, name: str) -> Symmetry:
    """Symmetry sending the content of cell (r, c) to cell ``move(r, c)``."""
    perm = [0] * (n * n)
    for r in range(n):
        for c in range(n):
            r2, c2 = move(r, c)
            perm[c + n * r] = c2 + n * r2
    universe = tuple(range(1, n * n + 1))
    return Symmetry(tuple(perm), universe, universe, name)


def magic_symmetries(n: int) -> dict[str, Symmetry]:
    """The eight square symmetries plus the label inversion ``k -> n*n+1-k``.

    ``diag`` is the reflection that swaps the top-left and bottom-right
    corners: it maps Lo Shu ``[[4,9,2],[3,5,7],[8,1,6]]`` to
    ``[[6,7,2],[1,5,9],[8,3,4]]``.  ``antidiag`` is the transpose, which
    fixes those two corners instead.
    """
    k = n - 1
    cat = {
        "id": identity(n * n, range(1, n * n + 1)),
        "rot90": _spatial(n, lambda r, c: (c, k - r), "rot90"),
        "rot180": _spatial(n, lambda r, c: (k - r, k - c), "rot180"),
        "rot270": _spatial(n, lambda r, c: (k - c, r), "rot270"),
        "diag": _spatial(n, lambda r, c: (k - c, k - r), "diag"),
        "antidiag": _spatial(n, lambda r, c: (c, r), "antidiag"),
        "flipH": _spatial(n, lambda r, c: (r, k - c), "flipH"),
        "flipV": _spatial(n, lambda r, c: (k - r, c), "flipV"),
    }
    universe = tuple(range(1, n * n + 1))
    cat["inv"] = Symmetry(
        tuple(range(n * n)), universe, tuple(n * n + 1 - v for v in universe), "inv"
    )
    return cat


def magic_group(n: int, with_inversion: bool = False) -> list[Symmetry]:
    """The 8-element square group, or the 16-element group including ``inv``."""
    cat = magic_symmetries(n)
    gens = [cat["rot90"], cat["diag"]]
    if with_inversion:
        gens.append(cat["inv"])
    return close_group(gens)


def grid_to_assignment(grid: Sequence[Sequence[int]] | Sequence[int]) -> Assignment:
    flat = [v for row in grid for v in row] if grid and not isinstance(grid[0], int) else list(grid)
    return Assignment.from_values(flat)


def assignment_to_grid(a: Assignment) -> list[list[int]]:
    vals = a.values()
    n = int(round(len(vals) ** 0.5))
    if n * n != len(vals):
        raise ValueError(f"{len(vals)} cells do not form a square")
    return [list(vals[r * n:(r + 1) * n]) for r in range(n)]


def verify_magic(n: int, grid) -> Verdict:
    """Check a grid (nested rows or flat row-major) is a normal magic square."""
    flat = grid_to_assignment(grid).values() if not isinstance(grid, Assignment) else grid.values()
    if len(flat) != n * n:
        raise ValueError(f"expected {n * n} entries, got {len(flat)}")
    if sorted(flat) != list(range(1, n * n + 1)):
        return Verdict(False, f"entries are not a permutation of 1..{n * n}")
    m = magic_constant(n)
    for name, line in magic_lines(n):
        s = sum(flat[i] for i in line)
        if s != m:
            return Verdict(False, f"{name} sums to {s}, expected {m}")
    return Verdict(True)
