"""Finite-domain problems and a deterministic backtracking enumerator."""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import Iterable, Literal, Sequence

from .constraints import Constraint, Status
from .symmetry import Assignment

__all__ = [
    "Problem",
    "SearchConfig",
    "SearchStats",
    "SearchResult",
    "NodeLimitReached",
    "enumerate_solutions",
    "solve",
]


class NodeLimitReached(RuntimeError):
    """Search stopped at its node budget before reaching a verdict."""

    def __init__(self, stats: SearchStats):
        super().__init__(f"node limit reached after {stats.nodes} nodes")
        self.stats = stats


@dataclass(frozen=True)
class Problem:
    """Variables ``0..arity-1`` with finite integer domains and constraints.

    ``family`` and ``params`` are descriptive tags set by the problem
    builders (for example ``("magic", (3,))``); they do not affect search.
    """

    arity: int
    domains: tuple[tuple[int, ...], ...]
    constraints: tuple[Constraint, ...] = ()
    universe: tuple[int, ...] = ()
    family: str = field(default="", compare=False)
    params: tuple = field(default=(), compare=False)

    def __post_init__(self):
        doms = tuple(tuple(sorted(set(d))) for d in self.domains)
        object.__setattr__(self, "domains", doms)
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if len(doms) != self.arity:
            raise ValueError(f"{len(doms)} domains for {self.arity} variables")
        for i, d in enumerate(doms):
            if not d:
                raise ValueError(f"domain of variable {i} is empty")
        union = sorted(set().union(*doms)) if doms else []
        universe = tuple(sorted(set(self.universe))) if self.universe else tuple(union)
        object.__setattr__(self, "universe", universe)
        uset = set(universe)
        if not set(union) <= uset:
            raise ValueError("domains contain values outside the value universe")
        for c in self.constraints:
            for x in c.scope:
                if not 0 <= x < self.arity:
                    raise ValueError(f"{c!r} references variable {x} outside 0..{self.arity - 1}")
            if not c.literals() <= uset:
                raise ValueError(f"{type(c).__name__} uses values outside the universe")
            sym = getattr(c, "sym", None)
            if sym is not None and (sym.universe != universe or sym.arity != self.arity):
                raise ValueError(f"{type(c).__name__} symmetry does not match the problem")

    @classmethod
    def uniform(cls, arity: int, values: Iterable[int], constraints: Sequence[Constraint] = (), **kw):
        values = tuple(values)
        return cls(arity, (values,) * arity, tuple(constraints), values, **kw)

    def with_constraints(self, *extra: Constraint) -> Problem:
        return replace(self, constraints=self.constraints + tuple(extra))

    def is_solution(self, a: Assignment) -> bool:
        """Direct (non-search) evaluation of a total assignment."""
        if a.arity != self.arity or not a.is_total:
            return False
        values = a.as_list()
        if any(v not in d for v, d in zip(values, self.domains)):
            return False
        doms = [(v,) for v in values]
        return all(c.check(values, doms) is Status.SATISFIED for c in self.constraints)


@dataclass(frozen=True)
class SearchConfig:
    var_order: Literal["minDomain", "inputOrder"] = "minDomain"
    val_order: Literal["ascending"] = "ascending"
    solution_limit: int | None = None
    node_limit: int | None = None

    def __post_init__(self):
        if self.var_order not in ("minDomain", "inputOrder"):
            raise ValueError(f"unknown variable order {self.var_order!r}")
        if self.val_order != "ascending":
            raise ValueError(f"unknown value order {self.val_order!r}")
        for name in ("solution_limit", "node_limit"):
            lim = getattr(self, name)
            if lim is not None and lim <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass
class SearchStats:
    nodes: int = 0
    solutions: int = 0
    elapsed: float = 0.0

    @property
    def elapsed_ms(self) -> int:
        return int(round(self.elapsed * 1000))

    def line(self) -> str:
        return f"nodes={self.nodes} solutions={self.solutions} elapsed_ms={self.elapsed_ms}"


@dataclass
class SearchResult:
    """Outcome of :func:`enumerate_solutions`.

    ``stopped`` is ``None`` for a complete search, ``"solution_limit"`` when
    truncated on request, and ``"node_limit"`` when the node budget ran out
    (the solution list is then incomplete).
    """

    solutions: list[Assignment]
    stats: SearchStats
    stopped: str | None = None

    @property
    def complete(self) -> bool:
        return self.stopped is None

    def __iter__(self):
        # allows ``solutions, stats = enumerate_solutions(...)``
        return iter((self.solutions, self.stats))


class _Stop(Exception):
    pass


class _Search:
    def __init__(self, problem: Problem, cfg: SearchConfig):
        self.p = problem
        self.cfg = cfg
        n = problem.arity
        self.values: list[int | None] = [None] * n
        self.domains: list[set[int]] = [set(d) for d in problem.domains]
        self.watch: list[list[Constraint]] = [[] for _ in range(n)]
        for c in problem.constraints:
            for x in c.scope:
                self.watch[x].append(c)
        self.stats = SearchStats()
        self.solutions: list[Assignment] = []
        self.stopped: str | None = None

    def _remove_all(self, removals, trail) -> bool:
        doms = self.domains
        for x, w in removals:
            d = doms[x]
            if w in d:
                d.discard(w)
                trail.append((x, w))
                if not d:
                    return False
        return True

    def _undo(self, trail, mark):
        doms = self.domains
        while len(trail) > mark:
            x, w = trail.pop()
            doms[x].add(w)

    def _select(self) -> int | None:
        values = self.values
        if self.cfg.var_order == "inputOrder":
            for x, v in enumerate(values):
                if v is None:
                    return x
            return None
        best, size = None, None
        for x, v in enumerate(values):
            if v is None:
                s = len(self.domains[x])
                if size is None or s < size:
                    best, size = x, s
        return best

    def _count_node(self):
        lim = self.cfg.node_limit
        if lim is not None and self.stats.nodes >= lim:
            self.stopped = "node_limit"
            raise _Stop
        self.stats.nodes += 1

    def run(self):
        start = time.perf_counter()
        try:
            self._count_node()
            trail: list = []
            ok = True
            for c in self.p.constraints:
                if not self._remove_all(list(c.root_prune(self.domains)), trail):
                    ok = False
                    break
            if ok:
                ok = not any(
                    c.check(self.values, self.domains) is Status.VIOLATED
                    for c in self.p.constraints
                )
            if ok:
                self._dfs()
        except _Stop:
            pass
        self.stats.elapsed = time.perf_counter() - start
        self.stats.solutions = len(self.solutions)
        return SearchResult(self.solutions, self.stats, self.stopped)

    def _emit(self):
        self.solutions.append(Assignment.from_values(self.values))
        lim = self.cfg.solution_limit
        if lim is not None and len(self.solutions) >= lim:
            self.stopped = "solution_limit"
            raise _Stop

    def _dfs(self):
        var = self._select()
        if var is None:
            self._emit()
            return
        values, domains = self.values, self.domains
        trail: list = []
        for v in sorted(domains[var]):
            self._count_node()
            values[var] = v
            saved = domains[var]
            domains[var] = {v}
            ok = not any(c.violated_after(values, domains, var) for c in self.watch[var])
            if ok:
                for c in self.watch[var]:
                    if not self._remove_all(list(c.prune(values, domains, var)), trail):
                        ok = False
                        break
            if ok:
                self._dfs()
            self._undo(trail, 0)
            domains[var] = saved
            values[var] = None


def enumerate_solutions(problem: Problem, cfg: SearchConfig | None = None) -> SearchResult:
    """Every total assignment satisfying ``problem``, in DFS order.

    Variables are picked by the configured order (lowest index breaks ties),
    values ascending.  Limits truncate the run and are flagged on the result.
    """
    return _Search(problem, cfg or SearchConfig()).run()


def solve(problem: Problem, cfg: SearchConfig | None = None) -> Assignment | None:
    """First solution in enumeration order, or ``None`` if there is none.

    Raises :class:`NodeLimitReached` if the node budget runs out first.
    """
    cfg = replace(cfg or SearchConfig(), solution_limit=1)
    res = enumerate_solutions(problem, cfg)
    if res.solutions:
        return res.solutions[0]
    if res.stopped == "node_limit":
        raise NodeLimitReached(res.stats)
    return None
