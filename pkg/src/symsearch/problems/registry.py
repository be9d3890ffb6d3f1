"""Problem spec strings (``magic:3``, ``vdw:8,2,3``, ``graceful:cycle:5``...)
resolved into a problem plus everything needed to print and check it."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from ..engine import Problem
from ..symmetry import Symmetry
from .certificates import (
    FAMILY_BUILDERS,
    Certificate,
    format_graceful,
    format_magic,
    format_vdw,
    parse_graph_file,
)
from .common import Verdict
from .graceful import Graph, build_graceful, graceful_group, graceful_symmetries, verify_graceful
from .magic import build_magic, magic_group, magic_symmetries, verify_magic
from .vdw import VdwSpec, build_vdw, vdw_group, vdw_symmetries, verify_vdw

__all__ = ["SpecError", "Instance", "parse_problem_spec"]


class SpecError(ValueError):
    """An unparseable problem spec; ``token`` is the offending piece."""

    def __init__(self, token: str, why: str):
        super().__init__(f"bad problem spec token {token!r}: {why}")
        self.token = token


@dataclass
class Instance:
    """A concrete problem with its catalog, groups, printer and verifier.

    ``sbc_group`` is the group lex-leader constraints break by default;
    ``full_group`` is the larger candidate set used when looking for
    internal symmetries (for magic squares it adds label inversion).
    """

    spec: str
    kind: str
    problem: Problem
    catalog: dict[str, Symmetry]
    sbc_group: list[Symmetry]
    full_group: list[Symmetry]
    format: Callable[[Sequence[int]], str]
    verify: Callable[[Sequence[int]], Verdict]
    vdw: VdwSpec | None = None
    graph: Graph | None = None

    def check_certificate(self, cert: Certificate) -> Verdict:
        """Verify ``cert`` against this instance, including header agreement."""
        if cert.kind != self.kind:
            return Verdict(False, f"certificate is {cert.kind}, problem is {self.kind}")
        if self.vdw is not None and cert.vdw != self.vdw:
            return Verdict(False, f"certificate header {cert.vdw} does not match {self.vdw}")
        if self.graph is not None and cert.graph is not None:
            if sorted(map(sorted, cert.graph.edges)) != sorted(map(sorted, self.graph.edges)):
                return Verdict(False, "certificate graph differs from the problem graph")
        return self.verify(cert.values)


def _int(token: str, whole: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise SpecError(token, f"expected an integer in {whole!r}") from None


def _graceful_instance(spec: str, g: Graph) -> Instance:
    return Instance(
        spec,
        "graceful",
        build_graceful(g),
        graceful_symmetries(g),
        graceful_group(g),
        graceful_group(g),
        lambda vals: format_graceful(g, vals),
        lambda vals: verify_graceful(g, vals),
        graph=g,
    )


def parse_problem_spec(spec: str) -> Instance:
    head, _, rest = spec.partition(":")
    if head == "magic":
        n = _int(rest, spec)
        if n < 1:
            raise SpecError(rest, "magic square order must be at least 1")
        return Instance(
            spec,
            "magic",
            build_magic(n),
            magic_symmetries(n),
            magic_group(n),
            magic_group(n, with_inversion=True),
            format_magic,
            lambda vals: verify_magic(n, list(vals)),
        )
    if head == "vdw":
        parts = rest.split(",")
        if len(parts) != 3:
            raise SpecError(rest, "expected vdw:<n>,<k>,<l>")
        n, k, l = (_int(p, spec) for p in parts)
        try:
            vs = VdwSpec(n, k, l)
        except ValueError as exc:
            raise SpecError(rest, str(exc)) from None
        return Instance(
            spec,
            "vdw",
            build_vdw(vs),
            vdw_symmetries(vs),
            vdw_group(vs),
            vdw_group(vs),
            lambda vals: format_vdw(vs, vals),
            lambda vals: verify_vdw(vs, vals),
            vdw=vs,
        )
    if head == "graceful":
        fam, _, arg = rest.partition(":")
        if fam == "file":
            try:
                text = Path(arg).read_text()
            except OSError as exc:
                raise SpecError(arg, f"cannot read graph file ({exc.strerror})") from None
            try:
                g = parse_graph_file(text)
            except ValueError as exc:
                raise SpecError(arg, str(exc)) from None
            return _graceful_instance(spec, g)
        if fam not in FAMILY_BUILDERS:
            raise SpecError(fam, "unknown graph family (cycle, wheel, dwheel, file)")
        n = _int(arg, spec)
        if n < 3:
            raise SpecError(arg, "rim length must be at least 3")
        return _graceful_instance(spec, FAMILY_BUILDERS[fam](n))
    raise SpecError(head, "unknown problem family (magic, vdw, graceful)")
