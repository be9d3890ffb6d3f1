"""Symmetry-breaking constraints and their images under a symmetry."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .constraints import (
    AllDifferent,
    BinaryLess,
    Constraint,
    FunctionalBind,
    GracefulEdges,
    LexLeqUnder,
    LinearSumEq,
    NoMonoAP,
)
from .engine import Problem, SearchConfig, enumerate_solutions
from .symmetry import Assignment, Symmetry, compose, inverse, is_closed, orbit

__all__ = [
    "lex_leader",
    "corner_constraint",
    "transform_constraint",
    "transform_sbc_set",
    "SbcReport",
    "validate_sbc",
    "orbit_key",
]


def lex_leader(group: Sequence[Symmetry], var_order: Sequence[int] | None = None) -> list[LexLeqUnder]:
    """One ``X <=lex sym(X)`` constraint per non-identity group element.

    A total assignment satisfies all of them iff it is the lexicographically
    smallest member of its orbit, reading variables in ``var_order``.
    """
    if not is_closed(group):
        raise ValueError("lex_leader needs a closed group (see close_group)")
    if var_order is None:
        var_order = range(group[0].arity)
    order = tuple(var_order)
    return [LexLeqUnder(order, g) for g in group if not g.is_identity]


def corner_constraint(problem: Problem) -> BinaryLess:
    """Top-left cell smaller than bottom-right cell of a magic square."""
    if problem.family != "magic":
        raise ValueError("corner constraint applies to magic-square problems only")
    (n,) = problem.params
    if n < 2:
        raise ValueError("corner constraint needs a square of order at least 2")
    return BinaryLess(0, n * n - 1)


def _value_shape(sym: Symmetry):
    """Classify the value permutation: returns (monotone, affine).

    ``monotone`` is +1 / -1 for an increasing / decreasing map, else 0.
    ``affine`` is ``(alpha, beta)`` with ``rho(v) = alpha*v + beta`` when
    such a map with ``alpha`` in {1, -1} matches, else None.
    """
    pairs = list(zip(sym.universe, sym.val_perm))
    images = [q for _, q in pairs]
    if images == sorted(images):
        mono = 1
    elif images == sorted(images, reverse=True):
        mono = -1
    else:
        mono = 0
    affine = None
    for alpha in (1, -1):
        beta = pairs[0][1] - alpha * pairs[0][0]
        if all(q == alpha * u + beta for u, q in pairs):
            affine = (alpha, beta)
            break
    return mono, affine


def _conjugate(sym: Symmetry, tau: Symmetry) -> Symmetry:
    return compose(compose(sym, tau), inverse(sym))


def transform_constraint(c: Constraint, sym: Symmetry) -> Constraint:
    """Image of ``c`` under ``sym``.

    An assignment ``a`` satisfies the result iff ``inverse(sym)(a)``
    satisfies ``c``.  Variables are renamed through ``sym.var_perm``; value
    literals and value comparisons are carried through ``sym.val_perm``.
    Raises ValueError when the image cannot be written in the same variant
    (e.g. a sum constraint under a non-affine value map).
    """
    pi = sym.var_perm
    mono, affine = _value_shape(sym)

    def unrepresentable(why):
        return ValueError(f"{type(c).__name__} under {sym!r}: {why}")

    if isinstance(c, AllDifferent):
        return AllDifferent(tuple(pi[x] for x in c.vars))
    if isinstance(c, LinearSumEq):
        if affine is None:
            raise unrepresentable("value map is not v -> +-v + b")
        alpha, beta = affine
        return LinearSumEq(tuple(pi[x] for x in c.vars), alpha * c.target + beta * len(c.vars))
    if isinstance(c, BinaryLess):
        if mono == 1:
            return BinaryLess(pi[c.x], pi[c.y])
        if mono == -1:
            return BinaryLess(pi[c.y], pi[c.x])
        raise unrepresentable("value map is not monotone")
    if isinstance(c, LexLeqUnder):
        if mono != 1:
            raise unrepresentable("lex order is only preserved by increasing value maps")
        return LexLeqUnder(tuple(pi[x] for x in c.vars), _conjugate(sym, c.sym))
    if isinstance(c, NoMonoAP):
        return NoMonoAP(c.length, tuple(pi[x] for x in c.positions))
    if isinstance(c, GracefulEdges):
        if affine is None:
            raise unrepresentable("label differences are only preserved by v -> +-v + b")
        return GracefulEdges(tuple((pi[u], pi[v]) for u, v in c.edges))
    if isinstance(c, FunctionalBind):
        return FunctionalBind(_conjugate(sym, c.sym))
    raise TypeError(f"unknown constraint type {type(c).__name__}")


def transform_sbc_set(
    constraints: Sequence[Constraint],
    sym: Symmetry,
    group: Sequence[Symmetry] | None = None,
) -> list[Constraint]:
    if group is not None and sym.key() not in {g.key() for g in group}:
        raise ValueError(f"{sym!r} is not an element of the given group")
    return [transform_constraint(c, sym) for c in constraints]


def orbit_key(a: Assignment, group: Sequence[Symmetry]) -> Assignment:
    """Canonical orbit representative (smallest member)."""
    return min(orbit(a, group))


@dataclass
class SbcReport:
    solutions: list[Assignment]
    survivors: list[Assignment]
    orbits: int
    survivors_per_orbit: dict[Assignment, int] = field(repr=False)
    at_least_one: bool
    at_most_one: bool
    complete: bool

    @property
    def breaks_fully(self) -> bool:
        return self.complete and self.at_least_one and self.at_most_one

    def summary(self) -> str:
        status = "" if self.complete else " (PARTIAL: node limit reached)"
        return (
            f"solutions={len(self.solutions)} survivors={len(self.survivors)} "
            f"orbits={self.orbits} at_least_one={self.at_least_one} "
            f"at_most_one={self.at_most_one}{status}"
        )


def validate_sbc(
    problem: Problem,
    constraints: Sequence[Constraint],
    group: Sequence[Symmetry],
    node_limit: int | None = 5_000_000,
) -> SbcReport:
    """Enumerate ``problem`` with and without ``constraints`` and compare orbits.

    ``at_least_one`` says every solution orbit keeps a survivor (the set is
    sound); ``at_most_one`` says no orbit keeps two (it breaks the group
    completely).  ``complete`` is False if either run hit ``node_limit``.
    """
    cfg = SearchConfig(node_limit=node_limit)
    base = enumerate_solutions(problem, cfg)
    kept = enumerate_solutions(problem.with_constraints(*constraints), cfg)
    per_orbit: dict[Assignment, int] = {}
    for a in base.solutions:
        per_orbit.setdefault(orbit_key(a, group), 0)
    for a in kept.solutions:
        k = orbit_key(a, group)
        per_orbit[k] = per_orbit.get(k, 0) + 1
    counts = per_orbit.values()
    return SbcReport(
        solutions=base.solutions,
        survivors=kept.solutions,
        orbits=len(per_orbit),
        survivors_per_orbit=per_orbit,
        at_least_one=all(c >= 1 for c in counts),
        at_most_one=all(c <= 1 for c in counts),
        complete=base.complete and kept.complete,
    )
