"""Plain-text certificate files.

magic::

    4 9 2
    3 5 7
    8 1 6

vdw (header, then the colouring as digits)::

    vdw 8 2 3
    00110011

graceful (family header, then one line of vertex labels)::

    graceful cycle:4
    0 4 1 2

or, for an arbitrary graph, ``graceful custom`` followed by one ``u v``
line per edge; the final line holds the labels.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .graceful import Graph, cycle, double_wheel, wheel
from .vdw import VdwSpec

__all__ = [
    "Certificate",
    "CertificateError",
    "FAMILY_BUILDERS",
    "parse_certificate",
    "read_certificate",
    "format_magic",
    "format_vdw",
    "format_graceful",
    "parse_graph_file",
]

FAMILY_BUILDERS = {"cycle": cycle, "wheel": wheel, "dwheel": double_wheel}


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class Certificate:
    """A parsed certificate.

    ``kind`` is ``"magic"``, ``"vdw"`` or ``"graceful"``; ``values`` is the
    flat value vector in variable order.  ``vdw`` and ``graph`` carry the
    instance named by the header, when the format has one.
    """

    kind: str
    values: tuple[int, ...]
    n: int = 0
    vdw: VdwSpec | None = None
    graph: Graph | None = None


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(t) for t in line.split()]
    except ValueError:
        raise CertificateError(f"line {lineno}: expected integers, got {line!r}") from None


def _lines(text: str) -> list[tuple[int, str]]:
    return [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines()) if ln.strip()]


def parse_graph_header(token: str) -> Graph:
    family, _, n = token.partition(":")
    if family not in FAMILY_BUILDERS or not n.isdigit():
        raise CertificateError(f"unknown graph family {token!r}")
    return FAMILY_BUILDERS[family](int(n))


def parse_certificate(text: str) -> Certificate:
    lines = _lines(text)
    if not lines:
        raise CertificateError("empty certificate")
    first = lines[0][1].split()
    if first[0] == "vdw":
        if len(first) != 4:
            raise CertificateError("vdw header must be 'vdw n k l'")
        spec = VdwSpec(*_ints(" ".join(first[1:]), lines[0][0]))
        if len(lines) != 2:
            raise CertificateError("vdw certificate needs exactly one colouring line")
        body = lines[1][1]
        if not body.isdigit():
            raise CertificateError(f"line {lines[1][0]}: colouring must be digits without separators")
        return Certificate("vdw", tuple(int(ch) for ch in body), spec.n, vdw=spec)
    if first[0] == "graceful":
        if len(first) != 2:
            raise CertificateError("graceful header must be 'graceful <family>:<n>' or 'graceful custom'")
        if len(lines) < 2:
            raise CertificateError("graceful certificate lacks a label line")
        if first[1] == "custom":
            edges = []
            for lineno, ln in lines[1:-1]:
                pair = _ints(ln, lineno)
                if len(pair) != 2:
                    raise CertificateError(f"line {lineno}: edge lines hold two vertices")
                edges.append(tuple(pair))
            labels = _ints(lines[-1][1], lines[-1][0])
            top = 1 + max((max(e) for e in edges), default=-1)
            graph = Graph(max(top, len(labels)), tuple(edges))
        else:
            graph = parse_graph_header(first[1])
            if len(lines) != 2:
                raise CertificateError("family graceful certificate needs exactly one label line")
        labels = _ints(lines[-1][1], lines[-1][0])
        return Certificate("graceful", tuple(labels), graph.n, graph=graph)
    rows = [_ints(ln, no) for no, ln in lines]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise CertificateError(f"magic certificate must be {n} rows of {n} integers")
    return Certificate("magic", tuple(v for r in rows for v in r), n)


def read_certificate(path: str | Path) -> Certificate:
    return parse_certificate(Path(path).read_text())


def parse_graph_file(text: str) -> Graph:
    """A ``graceful custom`` file holding only edge lines."""
    lines = _lines(text)
    if not lines or lines[0][1].split() != ["graceful", "custom"]:
        raise CertificateError("graph file must start with 'graceful custom'")
    edges = []
    for lineno, ln in lines[1:]:
        pair = _ints(ln, lineno)
        if len(pair) != 2:
            raise CertificateError(f"line {lineno}: edge lines hold two vertices")
        edges.append(tuple(pair))
    if not edges:
        raise CertificateError("graph file lists no edges")
    return Graph.from_edges(edges)


def format_magic(values: Sequence[int]) -> str:
    n = int(round(len(values) ** 0.5))
    rows = [" ".join(map(str, values[r * n:(r + 1) * n])) for r in range(n)]
    return "\n".join(rows) + "\n"


def format_vdw(spec: VdwSpec, values: Sequence[int]) -> str:
    if spec.k > 10:
        raise ValueError("digit colourings support at most 10 colours")
    return f"vdw {spec.n} {spec.k} {spec.l}\n" + "".join(map(str, values)) + "\n"


def format_graceful(g: Graph, labels: Sequence[int]) -> str:
    if g.family == "custom":
        head = "graceful custom\n" + "".join(f"{u} {v}\n" for u, v in g.edges)
    else:
        head = f"graceful {g.family}:{g.n}\n"
    return head + " ".join(map(str, labels)) + "\n"
