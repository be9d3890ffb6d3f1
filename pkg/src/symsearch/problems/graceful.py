"""Graceful labellings of cycles, wheels and double wheels.

Vertex layout: a rim of length n uses vertices ``0..n-1``; a wheel adds the
hub as vertex ``n``.  A double wheel has rims ``0..n-1`` and ``n..2n-1``
and the shared hub ``2n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..constraints import AllDifferent, GracefulEdges
from ..engine import Problem
from ..symmetry import Symmetry, close_group, identity
from .common import Verdict

__all__ = [
    "Graph",
    "cycle",
    "wheel",
    "double_wheel",
    "build_graceful",
    "verify_graceful",
    "graceful_symmetries",
    "graceful_group",
]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    family: str = "custom"
    n: int = 0

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) leaves 0..{self.vertex_count - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "edges", edges)

    @property
    def q(self) -> int:
        return len(self.edges)

    @classmethod
    def from_edges(cls, edges: Sequence[tuple[int, int]]) -> Graph:
        edges = [tuple(e) for e in edges]
        count = 1 + max(max(e) for e in edges) if edges else 0
        return cls(count, tuple(edges))

    @property
    def spec(self) -> str:
        return f"{self.family}:{self.n}" if self.family != "custom" else "custom"


def _rim(n: int, offset: int = 0) -> list[tuple[int, int]]:
    return [(offset + i, offset + (i + 1) % n) for i in range(n)]


def _check_n(n: int):
    if n < 3:
        raise ValueError("rim length must be at least 3")


def cycle(n: int) -> Graph:
    _check_n(n)
    return Graph(n, tuple(_rim(n)), "cycle", n)


def wheel(n: int) -> Graph:
    _check_n(n)
    return Graph(n + 1, tuple(_rim(n) + [(i, n) for i in range(n)]), "wheel", n)


def double_wheel(n: int) -> Graph:
    """Two disjoint n-cycles sharing one hub: 2n+1 vertices, 4n edges."""
    _check_n(n)
    hub = 2 * n
    edges = _rim(n) + _rim(n, n) + [(i, hub) for i in range(2 * n)]
    return Graph(2 * n + 1, tuple(edges), "dwheel", n)


def build_graceful(g: Graph) -> Problem:
    if g.q < 1:
        raise ValueError("graceful labelling needs at least one edge")
    cons = [AllDifferent(tuple(range(g.vertex_count))), GracefulEdges(g.edges)]
    return Problem.uniform(g.vertex_count, range(g.q + 1), cons, family="graceful", params=(g,))


def verify_graceful(g: Graph, labels: Sequence[int]) -> Verdict:
    labels = list(labels)
    if len(labels) != g.vertex_count:
        return Verdict(False, f"{len(labels)} labels for {g.vertex_count} vertices")
    owner = {}
    for vtx, lab in enumerate(labels):
        if not 0 <= lab <= g.q:
            return Verdict(False, f"vertex {vtx} label {lab} outside 0..{g.q}")
        if lab in owner:
            return Verdict(False, f"vertices {owner[lab]} and {vtx} share label {lab}")
        owner[lab] = vtx
    first = {}
    for u, v in g.edges:
        d = abs(labels[u] - labels[v])
        if d in first:
            return Verdict(False, f"edges {first[d]} and {(u, v)} both have label {d}")
        first[d] = (u, v)
    # q distinct differences in 1..q cover 1..q exactly
    return Verdict(True)


def _rim_map(g: Graph, step: int = 1, mirror: bool = False, swap: bool = False) -> tuple[int, ...]:
    n = g.n
    perm = list(range(g.vertex_count))
    rims = 2 if g.family == "dwheel" else 1
    for r in range(rims):
        for i in range(n):
            j = (-i + step) % n if mirror else (i + step) % n
            target_rim = (1 - r) if swap else r
            perm[r * n + i] = target_rim * n + j
    return tuple(perm)


def graceful_symmetries(g: Graph) -> dict[str, Symmetry]:
    """Label complement ``v -> q - v`` plus rim automorphisms of the built families.

    ``rotate`` turns every rim one step, ``reflect`` reverses every rim, and
    for double wheels ``swap`` exchanges the two rims.  ``rotate:<s>`` turns
    by ``s`` steps.
    """
    universe = tuple(range(g.q + 1))
    cat = {
        "id": identity(g.vertex_count, universe),
        "complement": Symmetry(
            tuple(range(g.vertex_count)), universe, tuple(g.q - v for v in universe), "complement"
        ),
    }
    if g.family in ("cycle", "wheel", "dwheel"):
        for s in range(1, g.n):
            cat[f"rotate:{s}"] = Symmetry(_rim_map(g, s), universe, universe, f"rotate:{s}")
        cat["rotate"] = cat["rotate:1"].named("rotate")
        cat["reflect"] = Symmetry(_rim_map(g, 0, mirror=True), universe, universe, "reflect")
    if g.family == "dwheel":
        cat["swap"] = Symmetry(_rim_map(g, 0, swap=True), universe, universe, "swap")
    return cat


def graceful_group(g: Graph) -> list[Symmetry]:
    cat = graceful_symmetries(g)
    gens = [cat[name] for name in ("complement", "rotate", "reflect", "swap") if name in cat]
    return close_group(gens)
