"""Search restricted to assignments fixed by a symmetry.

Restricting to ``sym(a) == a`` is posted as a :class:`FunctionalBind`
constraint, so the engine itself is unchanged.  The cycle analysis in
:func:`cycle_supports` doubles as the root propagation of that constraint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Collection, Sequence

from .constraints import FunctionalBind
from .engine import Problem
from .symmetry import Assignment, Symmetry, find_internal_symmetries

__all__ = [
    "cycles",
    "cycle_supports",
    "PrecheckResult",
    "consistency_precheck",
    "restrict_to_internal",
    "PipelineResult",
    "pipeline_find_then_restrict",
]


def cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycle decomposition, each cycle starting at its smallest element."""
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        out.append(tuple(cyc))
    return out


def cycle_supports(sym: Symmetry, domains: Sequence[Collection[int]]) -> dict[int, set[int]]:
    """Values each variable may take in an assignment fixed by ``sym``.

    Along a variable cycle ``x0 -> x1 -> ... -> x(L-1)`` the value at ``x0``
    determines the rest (``X[x_i] = rho^i(X[x0])``), and it must come back to
    itself after ``L`` steps while staying inside every domain on the way.
    """
    vm = sym.val_map
    allowed: dict[int, set[int]] = {}
    for cyc in cycles(sym.var_perm):
        keep: dict[int, set[int]] = {x: set() for x in cyc}
        for v in domains[cyc[0]]:
            chain = []
            w = v
            ok = True
            for x in cyc:
                if w not in domains[x]:
                    ok = False
                    break
                chain.append(w)
                if w not in vm:
                    ok = False
                    break
                w = vm[w]
            if ok and w == v:
                for x, u in zip(cyc, chain):
                    keep[x].add(u)
        allowed.update(keep)
    return allowed


@dataclass(frozen=True)
class PrecheckResult:
    """Domain reductions forced by a fixed-point restriction.

    ``pruned`` maps each affected variable to the values it loses.
    ``feasible`` is False when some domain empties, i.e. no assignment
    inside the domains is fixed by the symmetry.
    """

    feasible: bool
    pruned: dict[int, tuple[int, ...]] = field(default_factory=dict)
    domains: tuple[tuple[int, ...], ...] = ()


def consistency_precheck(sym: Symmetry, domains: Sequence[Collection[int]]) -> PrecheckResult:
    if len(domains) != sym.arity:
        raise ValueError(f"{len(domains)} domains for a symmetry of arity {sym.arity}")
    allowed = cycle_supports(sym, domains)
    pruned = {}
    new = []
    for x, d in enumerate(domains):
        kept = tuple(sorted(allowed[x]))
        gone = tuple(sorted(set(d) - allowed[x]))
        if gone:
            pruned[x] = gone
        new.append(kept)
    return PrecheckResult(all(new), pruned, tuple(new))


def restrict_to_internal(problem: Problem, sym: Symmetry) -> Problem:
    """``problem`` restricted to the solutions that ``sym`` maps to themselves."""
    if sym.arity != problem.arity:
        raise ValueError(f"arity mismatch: symmetry {sym.arity}, problem {problem.arity}")
    if sym.universe != problem.universe:
        raise ValueError("symmetry value universe differs from the problem's")
    return problem.with_constraints(FunctionalBind(sym))


@dataclass
class PipelineResult:
    """Internal symmetries found on the seeds, and the restricted problems.

    ``seed_symmetries`` are the non-identity candidates that passed the
    seed test, ``lifted`` their images on the target instance, and ``problems`` the
    target problem restricted by each lifted symmetry (same order).
    An empty (falsy) result means no non-identity candidate qualified.
    """

    seed_symmetries: list[Symmetry]
    lifted: list[Symmetry]
    problems: list[Problem]

    def __bool__(self):
        return bool(self.problems)


def pipeline_find_then_restrict(
    problem: Problem,
    seeds: Sequence[Assignment],
    candidates: Sequence[Symmetry],
    lift: Callable[[Symmetry], Symmetry] | None = None,
    require: str = "all",
) -> PipelineResult:
    """Find internal symmetries of ``seeds``, lift them, restrict ``problem``.

    ``seeds`` are solutions of a (usually smaller) instance of the same
    family and ``candidates`` act on that instance.  With ``require="all"``
    a candidate must fix every seed; with ``"any"`` one seed suffices.
    ``lift`` carries a seed symmetry to ``problem``'s instance; omit it when
    both are the same size.
    """
    if not seeds:
        raise ValueError("pipeline needs at least one seed solution")
    if require not in ("all", "any"):
        raise ValueError(f"require must be 'all' or 'any', not {require!r}")
    if require == "all":
        common = list(candidates)
        for a in seeds:
            common = find_internal_symmetries(a, common)
    else:
        hits = [find_internal_symmetries(a, candidates) for a in seeds]
        common = [s for s in candidates if any(s in h for h in hits)]
    common = [s for s in common if not s.is_identity]
    lift = lift or (lambda s: s)
    lifted = [lift(s) for s in common]
    problems = [restrict_to_internal(problem, s) for s in lifted]
    return PipelineResult(common, lifted, problems)
