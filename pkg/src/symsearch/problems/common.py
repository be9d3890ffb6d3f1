from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..symmetry import Symmetry, parse_symmetry


@dataclass(frozen=True)
class Verdict:
    """Result of a certificate check; falsy on failure, with a reason."""

    ok: bool
    detail: str = ""

    def __bool__(self):
        return self.ok


def lift_by_name(sym: Symmetry, catalog: Mapping[str, Symmetry]) -> Symmetry:
    """Rebuild a named symmetry from another instance's catalog."""
    if not sym.name:
        raise ValueError("only named symmetries can be lifted between instances")
    universe = next(iter(catalog.values())).universe
    return parse_symmetry(sym.name, universe, catalog)
