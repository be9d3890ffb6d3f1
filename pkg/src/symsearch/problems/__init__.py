"""Builders, verifiers and symmetry catalogs for the demonstration families."""

from .certificates import (
    Certificate,
    CertificateError,
    format_graceful,
    format_magic,
    format_vdw,
    parse_certificate,
    parse_graph_file,
    read_certificate,
)
from .common import Verdict, lift_by_name
from .graceful import (
    Graph,
    build_graceful,
    cycle,
    double_wheel,
    graceful_group,
    graceful_symmetries,
    verify_graceful,
    wheel,
)
from .magic import (
    assignment_to_grid,
    build_magic,
    grid_to_assignment,
    magic_constant,
    magic_group,
    magic_symmetries,
    verify_magic,
)
from .vdw import VdwSpec, build_vdw, parse_coloring, vdw_group, vdw_symmetries, verify_vdw

__all__ = [
    "Certificate", "CertificateError", "format_graceful", "format_magic", "format_vdw",
    "parse_certificate", "parse_graph_file", "read_certificate", "Verdict", "lift_by_name",
    "Graph", "build_graceful", "cycle", "double_wheel", "graceful_group",
    "graceful_symmetries", "verify_graceful", "wheel", "assignment_to_grid", "build_magic",
    "grid_to_assignment", "magic_constant", "magic_group", "magic_symmetries", "verify_magic",
    "VdwSpec", "build_vdw", "parse_coloring", "vdw_group", "vdw_symmetries", "verify_vdw",
]
