"""Variable x value permutation symmetries acting on assignments.

A :class:`Symmetry` is a pair ``(var_perm, val_perm)``.  It maps the binding
``X[x] = v`` to ``X[var_perm[x]] = val_perm(v)``.  Value permutations are
stored as image lists over an explicit, sorted value universe.

Composition is right-to-left: ``compose(s1, s2)`` applies ``s2`` first.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Assignment",
    "Symmetry",
    "GroupTooLargeError",
    "identity",
    "apply",
    "apply_to_set",
    "compose",
    "inverse",
    "close_group",
    "is_closed",
    "is_internal_symmetry",
    "find_internal_symmetries",
    "orbit",
    "parse_symmetry",
    "format_symmetry",
]

DEFAULT_GROUP_CAP = 10_000


class GroupTooLargeError(ValueError):
    """Raised when a group closure exceeds its size cap."""


@dataclass(frozen=True, order=True)
class Assignment:
    """A total or partial map from variable index to integer value.

    Bindings are kept sorted by variable index, so two assignments with the
    same bindings compare (and hash) equal regardless of construction order.
    """

    bindings: tuple[tuple[int, int], ...]
    arity: int

    def __post_init__(self):
        pairs = tuple(sorted((int(x), int(v)) for x, v in self.bindings))
        seen = set()
        for x, _ in pairs:
            if x in seen:
                raise ValueError(f"variable {x} bound twice")
            if not 0 <= x < self.arity:
                raise ValueError(f"variable index {x} outside 0..{self.arity - 1}")
            seen.add(x)
        object.__setattr__(self, "bindings", pairs)

    @classmethod
    def from_values(cls, values: Sequence[int | None]) -> Assignment:
        """Build from a per-variable list; ``None`` leaves a variable unbound."""
        return cls(
            tuple((x, v) for x, v in enumerate(values) if v is not None), len(values)
        )

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int], arity: int) -> Assignment:
        return cls(tuple(mapping.items()), arity)

    @property
    def is_total(self) -> bool:
        return len(self.bindings) == self.arity

    def get(self, var: int, default=None):
        for x, v in self.bindings:
            if x == var:
                return v
        return default

    def as_list(self) -> list[int | None]:
        out: list[int | None] = [None] * self.arity
        for x, v in self.bindings:
            out[x] = v
        return out

    def values(self) -> tuple[int, ...]:
        """Values in variable order; only defined for total assignments."""
        if not self.is_total:
            raise ValueError("values() requires a total assignment")
        return tuple(v for _, v in self.bindings)

    def __len__(self):
        return len(self.bindings)

    def __repr__(self):
        if self.is_total:
            return f"Assignment({list(self.values())})"
        return f"Assignment({dict(self.bindings)}, arity={self.arity})"


def _check_perm(images: Sequence[int], domain: Sequence[int], what: str):
    if sorted(images) != sorted(domain):
        raise ValueError(f"{what} is not a permutation of its domain: {list(images)}")


@dataclass(frozen=True)
class Symmetry:
    """A variable permutation paired with a value permutation.

    ``val_perm[i]`` is the image of ``universe[i]``.  ``name`` is a display
    label only and takes no part in equality.
    """

    var_perm: tuple[int, ...]
    universe: tuple[int, ...]
    val_perm: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "var_perm", tuple(int(p) for p in self.var_perm))
        object.__setattr__(self, "universe", tuple(int(u) for u in self.universe))
        object.__setattr__(self, "val_perm", tuple(int(q) for q in self.val_perm))
        if list(self.universe) != sorted(set(self.universe)):
            raise ValueError("value universe must be sorted and duplicate-free")
        if len(self.val_perm) != len(self.universe):
            raise ValueError("val_perm length differs from universe size")
        _check_perm(self.var_perm, range(len(self.var_perm)), "var_perm")
        _check_perm(self.val_perm, self.universe, "val_perm")

    @property
    def arity(self) -> int:
        return len(self.var_perm)

    @functools.cached_property
    def val_map(self) -> dict[int, int]:
        return dict(zip(self.universe, self.val_perm))

    @functools.cached_property
    def var_inv(self) -> tuple[int, ...]:
        inv = [0] * self.arity
        for x, y in enumerate(self.var_perm):
            inv[y] = x
        return tuple(inv)

    @functools.cached_property
    def val_inv_map(self) -> dict[int, int]:
        return {q: u for u, q in zip(self.universe, self.val_perm)}

    @property
    def is_identity(self) -> bool:
        return self.var_perm == tuple(range(self.arity)) and self.val_perm == self.universe

    @property
    def values_fixed(self) -> bool:
        return self.val_perm == self.universe

    def key(self) -> tuple:
        """Sort key used for deterministic tie-breaking."""
        return (self.var_perm, self.val_perm)

    def named(self, name: str) -> Symmetry:
        return Symmetry(self.var_perm, self.universe, self.val_perm, name)

    def __call__(self, a: Assignment) -> Assignment:
        return apply(self, a)

    def __repr__(self):
        if self.name:
            return f"Symmetry<{self.name}>"
        return f"Symmetry(var={list(self.var_perm)}, val={list(self.val_perm)})"


def identity(arity: int, universe: Iterable[int]) -> Symmetry:
    universe = tuple(sorted(set(universe)))
    return Symmetry(tuple(range(arity)), universe, universe, "id")


def apply(sym: Symmetry, a: Assignment) -> Assignment:
    if a.arity != sym.arity:
        raise ValueError(f"arity mismatch: symmetry has {sym.arity}, assignment {a.arity}")
    vm = sym.val_map
    out = []
    for x, v in a.bindings:
        if v not in vm:
            raise ValueError(f"value {v} at variable {x} is outside the symmetry's universe")
        out.append((sym.var_perm[x], vm[v]))
    return Assignment(tuple(out), a.arity)


def apply_to_set(sym: Symmetry, assignments: Iterable[Assignment]) -> frozenset[Assignment]:
    assignments = list(assignments)
    arities = {a.arity for a in assignments}
    if len(arities) > 1:
        raise ValueError(f"assignments of mixed arity: {sorted(arities)}")
    return frozenset(apply(sym, a) for a in assignments)


def _compatible(s1: Symmetry, s2: Symmetry):
    if s1.arity != s2.arity:
        raise ValueError(f"arity mismatch: {s1.arity} vs {s2.arity}")
    if s1.universe != s2.universe:
        raise ValueError("symmetries act on different value universes")


def compose(s1: Symmetry, s2: Symmetry) -> Symmetry:
    """Return ``s1 o s2``: apply ``s2``, then ``s1``."""
    _compatible(s1, s2)
    var = tuple(s1.var_perm[s2.var_perm[x]] for x in range(s1.arity))
    vm1 = s1.val_map
    val = tuple(vm1[q] for q in s2.val_perm)
    return Symmetry(var, s1.universe, val)


def inverse(sym: Symmetry) -> Symmetry:
    inv = sym.val_inv_map
    return Symmetry(sym.var_inv, sym.universe, tuple(inv[u] for u in sym.universe))


def close_group(
    generators: Sequence[Symmetry],
    *,
    arity: int | None = None,
    universe: Iterable[int] | None = None,
    cap: int = DEFAULT_GROUP_CAP,
) -> list[Symmetry]:
    """Materialize the group generated by ``generators``.

    Breadth-first from the identity; each new layer is sorted by permutation
    lexicographic order so the result is reproducible.  With no generators the
    arity and universe must be given explicitly.
    """
    if generators:
        for g in generators[1:]:
            _compatible(generators[0], g)
        ident = identity(generators[0].arity, generators[0].universe)
    else:
        if arity is None or universe is None:
            raise ValueError("close_group([]) needs arity and universe")
        return [identity(arity, universe)]

    seen = {ident.key(): ident}
    order = [ident]
    layer = [ident]
    while layer:
        found = {}
        for elem in layer:
            for g in generators:
                prod = compose(g, elem)
                k = prod.key()
                if k not in seen and k not in found:
                    found[k] = prod
        layer = [found[k] for k in sorted(found)]
        for elem in layer:
            seen[elem.key()] = elem
            order.append(elem)
            if len(order) > cap:
                raise GroupTooLargeError(f"group closure exceeds cap of {cap} elements")
    return order


def is_closed(group: Sequence[Symmetry]) -> bool:
    """True if ``group`` holds the identity and is closed under compose/inverse."""
    if not group:
        return False
    keys = {g.key() for g in group}
    if identity(group[0].arity, group[0].universe).key() not in keys:
        return False
    for a in group:
        if inverse(a).key() not in keys:
            return False
        for b in group:
            if compose(a, b).key() not in keys:
                return False
    return True


def is_internal_symmetry(sym: Symmetry, a: Assignment) -> bool:
    if not a.is_total:
        raise ValueError("internal symmetry is only defined for total assignments")
    return apply(sym, a) == a


def find_internal_symmetries(a: Assignment, candidates: Sequence[Symmetry]) -> list[Symmetry]:
    """Candidates fixing ``a``, in input order (the stabilizer when closed)."""
    if not a.is_total:
        raise ValueError("internal symmetry is only defined for total assignments")
    return [s for s in candidates if apply(s, a) == a]


def orbit(a: Assignment, group: Sequence[Symmetry]) -> frozenset[Assignment]:
    return frozenset(apply(s, a) for s in group)


# ---------------------------------------------------------------------------
# literal format

def parse_symmetry(
    text: str,
    universe: Sequence[int],
    catalog: Mapping[str, Symmetry] | None = None,
) -> Symmetry:
    """Parse a symmetry literal.

    Either a two-line record::

        var: p0 p1 ... p(n-1)
        val: q0 q1 ...          # images of the universe, in universe order

    or a catalog name.  Names may be chained with ``+``; ``a+b`` is
    ``compose(a, b)``.  ``colorswap:<perm>`` is resolved by the catalog.
    """
    universe = tuple(sorted(universe))
    lines = [ln.split("#", 1)[0].strip() for ln in text.strip().splitlines()]
    lines = [ln for ln in lines if ln]
    if lines and lines[0].startswith("var:"):
        fields = {}
        for ln in lines:
            key, _, rest = ln.partition(":")
            key = key.strip()
            if key not in ("var", "val"):
                raise ValueError(f"unknown symmetry record field {key!r}")
            try:
                fields[key] = tuple(int(t) for t in rest.split())
            except ValueError as exc:
                raise ValueError(f"bad integer in {key!r} line: {rest.strip()!r}") from exc
        if "var" not in fields:
            raise ValueError("symmetry record lacks a 'var:' line")
        val = fields.get("val", universe)
        return Symmetry(fields["var"], universe, val)

    if len(lines) != 1:
        raise ValueError(f"cannot parse symmetry literal {text!r}")
    if catalog is None:
        raise ValueError(f"named symmetry {lines[0]!r} needs a catalog")
    result = None
    for token in lines[0].split("+"):
        token = token.strip()
        sym = catalog.get(token)
        if sym is None and token.startswith("colorswap:") and "colorswap" in catalog:
            sym = _colorswap_from(token, catalog["colorswap"])
        if sym is None:
            raise ValueError(f"unknown symmetry name {token!r}")
        result = sym if result is None else compose(result, sym)
    return result.named(lines[0])


def _colorswap_from(token: str, template: Symmetry) -> Symmetry:
    body = token.split(":", 1)[1]
    parts = body.split(",") if "," in body else list(body)
    try:
        perm = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"bad colour permutation in {token!r}") from exc
    images = tuple(template.universe[p] if 0 <= p < len(template.universe) else -1 for p in perm)
    return Symmetry(tuple(range(template.arity)), template.universe, images, token)


def format_symmetry(sym: Symmetry) -> str:
    return (
        "var: " + " ".join(map(str, sym.var_perm)) + "\n"
        "val: " + " ".join(map(str, sym.val_perm)) + "\n"
    )
