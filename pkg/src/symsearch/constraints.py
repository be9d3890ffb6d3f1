"""The closed constraint vocabulary and its consistency checks.

Every constraint works on a per-variable ``values`` list (``None`` for an
unbound variable) together with the current domains.  ``check`` is sound:
it only reports VIOLATED when no extension of the partial assignment can
satisfy the constraint.  ``prune`` is the light propagation the search
engine runs after each assignment; it yields ``(var, value)`` removals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Collection, Iterator, Sequence

from .symmetry import Assignment, Symmetry

__all__ = [
    "Status",
    "Constraint",
    "AllDifferent",
    "LinearSumEq",
    "BinaryLess",
    "LexLeqUnder",
    "NoMonoAP",
    "GracefulEdges",
    "FunctionalBind",
    "arithmetic_progressions",
    "check",
    "satisfies",
]

Values = Sequence["int | None"]
Domains = Sequence[Collection[int]]


class Status(enum.Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    UNKNOWN = "unknown"


SAT, VIOL, UNK = Status.SATISFIED, Status.VIOLATED, Status.UNKNOWN


class Constraint:
    """Base class; concrete variants are frozen dataclasses below."""

    @property
    def scope(self) -> tuple[int, ...]:
        raise NotImplementedError

    def literals(self) -> frozenset[int]:
        """Value literals mentioned by the constraint (must lie in the universe)."""
        return frozenset()

    def check(self, values: Values, domains: Domains) -> Status:
        raise NotImplementedError

    def violated_after(self, values: Values, domains: Domains, var: int) -> bool:
        """Incremental violation test after ``var`` was bound."""
        return self.check(values, domains) is VIOL

    def prune(self, values: Values, domains: Domains, var: int) -> Iterator[tuple[int, int]]:
        return iter(())

    def root_prune(self, domains: Domains) -> Iterator[tuple[int, int]]:
        return iter(())


@dataclass(frozen=True)
class AllDifferent(Constraint):
    vars: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("AllDifferent lists a variable twice")

    @property
    def scope(self):
        return self.vars

    def check(self, values, domains):
        seen = set()
        complete = True
        for x in self.vars:
            v = values[x]
            if v is None:
                complete = False
            elif v in seen:
                return VIOL
            else:
                seen.add(v)
        return SAT if complete else UNK

    def violated_after(self, values, domains, var):
        v = values[var]
        return any(values[x] == v for x in self.vars if x != var)

    def prune(self, values, domains, var):
        v = values[var]
        for x in self.vars:
            if x != var and values[x] is None and v in domains[x]:
                yield x, v


@dataclass(frozen=True)
class LinearSumEq(Constraint):
    vars: tuple[int, ...]
    target: int

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))

    @property
    def scope(self):
        return self.vars

    def check(self, values, domains):
        lo = hi = 0
        complete = True
        for x in self.vars:
            v = values[x]
            if v is None:
                complete = False
                lo += min(domains[x])
                hi += max(domains[x])
            else:
                lo += v
                hi += v
        if not lo <= self.target <= hi:
            return VIOL
        return SAT if complete else UNK


@dataclass(frozen=True)
class BinaryLess(Constraint):
    """``X[x] < X[y]``."""

    x: int
    y: int

    @property
    def scope(self):
        return (self.x,) if self.x == self.y else (self.x, self.y)

    def check(self, values, domains):
        vx, vy = values[self.x], values[self.y]
        if vx is not None and vy is not None:
            return SAT if vx < vy else VIOL
        if self.x == self.y:
            return VIOL
        lo_x = vx if vx is not None else min(domains[self.x])
        hi_y = vy if vy is not None else max(domains[self.y])
        if lo_x >= hi_y:
            return VIOL
        return UNK

    def prune(self, values, domains, var):
        if self.x == self.y:
            return
        vx, vy = values[self.x], values[self.y]
        if vx is not None and vy is None:
            for w in domains[self.y]:
                if w <= vx:
                    yield self.y, w
        elif vy is not None and vx is None:
            for w in domains[self.x]:
                if w >= vy:
                    yield self.x, w

    def root_prune(self, domains):
        if self.x == self.y:
            for w in domains[self.x]:
                yield self.x, w
            return
        lo, hi = min(domains[self.x]), max(domains[self.y])
        for w in domains[self.y]:
            if w <= lo:
                yield self.y, w
        for w in domains[self.x]:
            if w >= hi:
                yield self.x, w


@dataclass(frozen=True)
class LexLeqUnder(Constraint):
    """``(X[v] for v in vars) <=lex (sym(X)[v] for v in vars)``.

    ``sym(X)[v]`` is ``rho(X[pi^-1(v)])``, the image of the assignment under
    ``sym``, so a lex-leader constraint reads ``X <=lex sym(X)``.
    """

    vars: tuple[int, ...]
    sym: Symmetry

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if any(not 0 <= v < self.sym.arity for v in self.vars):
            raise ValueError("LexLeqUnder vector mentions a variable outside the symmetry")

    @property
    def scope(self):
        inv = self.sym.var_inv
        return tuple(sorted(set(self.vars) | {inv[v] for v in self.vars}))

    def literals(self):
        return frozenset(self.sym.universe)

    def check(self, values, domains):
        inv = self.sym.var_inv
        vm = self.sym.val_map
        fixed_vals = self.sym.values_fixed
        for v in self.vars:
            src = inv[v]
            if src == v and fixed_vals:
                continue
            lhs, r = values[v], values[src]
            if lhs is None or r is None:
                return UNK
            rhs = vm[r]
            if lhs < rhs:
                return SAT
            if lhs > rhs:
                return VIOL
        return SAT


def arithmetic_progressions(n: int, length: int) -> list[tuple[int, ...]]:
    """All ``length``-term progressions inside ``0..n-1`` (0-based indices)."""
    out = []
    for d in range(1, n):
        for s in range(n - (length - 1) * d):
            out.append(tuple(s + i * d for i in range(length)))
    return out


@dataclass(frozen=True)
class NoMonoAP(Constraint):
    """No ``length`` equally spaced positions all take the same value.

    ``positions[i]`` is the variable sitting at position ``i``.  Use
    :meth:`over` for the plain layout where position ``i`` is variable ``i``.
    """

    length: int
    positions: tuple[int, ...]
    _aps: tuple = field(default=(), init=False, repr=False, compare=False)
    _through: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.length < 2:
            raise ValueError("progression length must be at least 2")
        object.__setattr__(self, "positions", tuple(self.positions))
        if len(set(self.positions)) != len(self.positions):
            raise ValueError("NoMonoAP positions repeat a variable")
        aps = tuple(
            tuple(self.positions[i] for i in ap)
            for ap in arithmetic_progressions(len(self.positions), self.length)
        )
        through: dict[int, list] = {x: [] for x in self.positions}
        for ap in aps:
            for x in ap:
                through[x].append(ap)
        object.__setattr__(self, "_aps", aps)
        object.__setattr__(self, "_through", {x: tuple(v) for x, v in through.items()})

    @classmethod
    def over(cls, n: int, length: int) -> NoMonoAP:
        return cls(length, tuple(range(n)))

    @property
    def progressions(self) -> tuple[tuple[int, ...], ...]:
        return self._aps

    @property
    def scope(self):
        return self.positions

    def _mono(self, values, ap):
        v0 = values[ap[0]]
        if v0 is None:
            return False
        return all(values[x] == v0 for x in ap[1:])

    def check(self, values, domains):
        if any(self._mono(values, ap) for ap in self._aps):
            return VIOL
        if all(values[x] is not None for x in self.positions):
            return SAT
        return UNK

    def violated_after(self, values, domains, var):
        return any(self._mono(values, ap) for ap in self._through.get(var, ()))

    def prune(self, values, domains, var):
        # an AP with all but one member bound to the same colour forbids that colour
        c = values[var]
        for ap in self._through.get(var, ()):
            free = None
            for x in ap:
                w = values[x]
                if w is None:
                    if free is not None:
                        break
                    free = x
                elif w != c:
                    break
            else:
                if free is not None and c in domains[free]:
                    yield free, c


@dataclass(frozen=True)
class GracefulEdges(Constraint):
    """The absolute label differences across ``edges`` are pairwise distinct."""

    edges: tuple[tuple[int, int], ...]
    _incident: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if u == v:
                raise ValueError(f"edge ({u}, {v}) is a loop")
        object.__setattr__(self, "edges", edges)
        inc: dict[int, list] = {}
        for u, v in edges:
            inc.setdefault(u, []).append((u, v))
            inc.setdefault(v, []).append((u, v))
        object.__setattr__(self, "_incident", inc)

    @property
    def scope(self):
        return tuple(sorted(self._incident))

    def _used(self, values):
        used = {}
        for u, v in self.edges:
            a, b = values[u], values[v]
            if a is not None and b is not None:
                d = abs(a - b)
                used[d] = used.get(d, 0) + 1
        return used

    def check(self, values, domains):
        used = self._used(values)
        if any(c > 1 for c in used.values()):
            return VIOL
        if sum(used.values()) == len(self.edges):
            return SAT
        return UNK

    def violated_after(self, values, domains, var):
        mine = []
        for u, v in self._incident.get(var, ()):
            a, b = values[u], values[v]
            if a is not None and b is not None:
                mine.append(abs(a - b))
        if not mine:
            return False
        if len(set(mine)) != len(mine):
            return True
        mine = set(mine)
        for u, v in self.edges:
            if u == var or v == var:
                continue
            a, b = values[u], values[v]
            if a is not None and b is not None and abs(a - b) in mine:
                return True
        return False

    def prune(self, values, domains, var):
        used = set(self._used(values))
        for u, v in self._incident.get(var, ()):
            other = v if u == var else u
            if values[other] is not None:
                continue
            a = values[var]
            for w in domains[other]:
                if abs(a - w) in used:
                    yield other, w


@dataclass(frozen=True)
class FunctionalBind(Constraint):
    """``X[pi(x)] == rho(X[x])`` for every variable: the assignment is fixed by ``sym``."""

    sym: Symmetry

    @property
    def scope(self):
        return tuple(range(self.sym.arity))

    def literals(self):
        return frozenset(self.sym.universe)

    def check(self, values, domains):
        vm = self.sym.val_map
        complete = True
        for x, y in enumerate(self.sym.var_perm):
            a, b = values[x], values[y]
            if a is None:
                complete = False
                continue
            if a not in vm:
                return VIOL
            if b is not None and b != vm[a]:
                return VIOL
        return SAT if complete else UNK

    def violated_after(self, values, domains, var):
        a = values[var]
        if a not in self.sym.val_map:
            return True
        y = self.sym.var_perm[var]
        if values[y] is not None and values[y] != self.sym.val_map[a]:
            return True
        p = self.sym.var_inv[var]
        b = values[p]
        return b is not None and self.sym.val_map.get(b) != a

    def prune(self, values, domains, var):
        a = values[var]
        y = self.sym.var_perm[var]
        want = self.sym.val_map[a]
        if values[y] is None:
            for w in domains[y]:
                if w != want:
                    yield y, w
        p = self.sym.var_inv[var]
        if values[p] is None:
            want = self.sym.val_inv_map[a]
            for w in domains[p]:
                if w != want:
                    yield p, w

    def root_prune(self, domains):
        from .internal import cycle_supports

        for x, allowed in cycle_supports(self.sym, domains).items():
            for w in domains[x]:
                if w not in allowed:
                    yield x, w


def check(c: Constraint, a: Assignment, domains: Domains) -> Status:
    """Three-valued consistency check of ``c`` against a (partial) assignment."""
    values = a.as_list()
    doms = [
        (d if values[i] is None else (values[i],)) for i, d in enumerate(domains)
    ]
    return c.check(values, doms)


def satisfies(a: Assignment, c: Constraint) -> bool:
    """Direct evaluation on a total assignment."""
    if not a.is_total:
        raise ValueError("satisfies() needs a total assignment")
    values = a.as_list()
    return c.check(values, [(v,) for v in values]) is SAT
