"""Van der Waerden certificates: k-colourings of 1..n with no monochromatic
l-term arithmetic progression.  A valid colouring shows W(l, k) > n.

Positions are 1-based in messages and certificates, 0-based as variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..constraints import NoMonoAP, arithmetic_progressions
from ..engine import Problem
from ..symmetry import Symmetry, close_group, compose, identity
from .common import Verdict

__all__ = ["VdwSpec", "build_vdw", "vdw_symmetries", "vdw_group", "verify_vdw", "parse_coloring"]


@dataclass(frozen=True)
class VdwSpec:
    n: int
    k: int = 2
    l: int = 3

    def __post_init__(self):
        if self.n < 1 or self.k < 2 or self.l < 3:
            raise ValueError(f"invalid vdw spec n={self.n} k={self.k} l={self.l}")


def build_vdw(spec: VdwSpec) -> Problem:
    return Problem.uniform(
        spec.n,
        range(spec.k),
        [NoMonoAP.over(spec.n, spec.l)],
        family="vdw",
        params=(spec.n, spec.k, spec.l),
    )


def vdw_symmetries(spec: VdwSpec) -> dict[str, Symmetry]:
    """Reflection, colour swap of 0 and 1, and their composite.

    Other colour permutations are reachable by name as ``colorswap:<perm>``
    through :func:`symsearch.symmetry.parse_symmetry`, e.g. ``colorswap:120``.
    """
    n, colors = spec.n, tuple(range(spec.k))
    swap = list(colors)
    swap[0], swap[1] = 1, 0
    reflect = Symmetry(tuple(n - 1 - i for i in range(n)), colors, colors, "reflect")
    colorswap = Symmetry(tuple(range(n)), colors, tuple(swap), "colorswap")
    return {
        "id": identity(n, colors),
        "reflect": reflect,
        "colorswap": colorswap,
        "reflect+colorswap": compose(reflect, colorswap).named("reflect+colorswap"),
    }


def vdw_group(spec: VdwSpec) -> list[Symmetry]:
    """Reflection times the full colour permutation group."""
    cat = vdw_symmetries(spec)
    gens = [cat["reflect"], cat["colorswap"]]
    if spec.k > 2:
        colors = tuple(range(spec.k))
        shift = tuple((c + 1) % spec.k for c in colors)
        gens.append(Symmetry(tuple(range(spec.n)), colors, shift))
    return close_group(gens)


def verify_vdw(spec: VdwSpec, coloring: Sequence[int]) -> Verdict:
    coloring = list(coloring)
    if len(coloring) != spec.n:
        return Verdict(False, f"colouring has length {len(coloring)}, expected {spec.n}")
    for i, c in enumerate(coloring):
        if not 0 <= c < spec.k:
            return Verdict(False, f"position {i + 1} has colour {c} outside 0..{spec.k - 1}")
    for ap in arithmetic_progressions(spec.n, spec.l):
        c = coloring[ap[0]]
        if all(coloring[i] == c for i in ap):
            return Verdict(
                False,
                f"monochromatic progression start={ap[0] + 1} difference={ap[1] - ap[0]} colour={c}",
            )
    return Verdict(True)


def parse_coloring(text: str, alphabet: str | None = None) -> list[int]:
    """Decode ``"00110011"`` or, given ``alphabet="rb"``, ``"rrbbrrbb"``."""
    text = text.strip()
    if alphabet is not None:
        return [alphabet.index(ch) for ch in text]
    return [int(ch) for ch in text]
