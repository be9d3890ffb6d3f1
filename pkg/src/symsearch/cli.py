"""Command-line front end.

Exit codes: 0 found/verified, 1 exhausted/refuted, 2 usage error,
3 resource (node) limit hit.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .engine import SearchConfig, enumerate_solutions
from .internal import restrict_to_internal
from .problems.certificates import read_certificate
from .problems.registry import Instance, SpecError, parse_problem_spec
from .symbreak import corner_constraint, lex_leader, transform_sbc_set, validate_sbc
from .symmetry import Assignment, Symmetry, find_internal_symmetries, parse_symmetry

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _symmetry(inst: Instance, text: str) -> Symmetry:
    """A catalog name (``inv+rot180``) or a path to a ``var:/val:`` record."""
    try:
        return parse_symmetry(text, inst.problem.universe, inst.catalog)
    except ValueError as name_err:
        try:
            with open(text) as fh:
                body = fh.read()
        except OSError:
            raise UsageError(str(name_err)) from None
        try:
            return parse_symmetry(body, inst.problem.universe, inst.catalog).named(text)
        except ValueError as exc:
            raise UsageError(f"{text}: {exc}") from None


def _sbc(inst: Instance, kind: str):
    if kind == "none":
        return []
    if kind == "corner":
        try:
            return [corner_constraint(inst.problem)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if kind == "lexleader":
        return lex_leader(inst.sbc_group)
    raise UsageError(f"unknown --sbc value {kind!r}")


def _build(args) -> tuple[Instance, object]:
    inst = parse_problem_spec(args.problem)
    problem = inst.problem.with_constraints(*_sbc(inst, args.sbc))
    for text in args.fix or ():
        try:
            problem = restrict_to_internal(problem, _symmetry(inst, text))
        except ValueError as exc:
            raise UsageError(f"--fix {text}: {exc}") from None
    return inst, problem


def _search(args, solution_limit):
    inst, problem = _build(args)
    cfg = SearchConfig(
        var_order=args.var_order,
        solution_limit=solution_limit,
        node_limit=args.nodes,
    )
    return inst, enumerate_solutions(problem, cfg)


def _print_solutions(inst, res, args, out):
    for i, a in enumerate(res.solutions):
        if i and args.quiet:
            out.write("\n")
        if not args.quiet:
            out.write(f"solution {i + 1}:\n")
        out.write(inst.format(a.values()))


def cmd_solve(args, out) -> int:
    inst, res = _search(args, 1)
    _print_solutions(inst, res, args, out)
    if not args.quiet and not res.solutions:
        if res.stopped == "node_limit":
            out.write("node limit reached; no verdict\n")
        else:
            out.write("no solution (search exhausted)\n")
    if args.stats:
        out.write(res.stats.line() + "\n")
    if res.solutions:
        return EXIT_OK
    return EXIT_LIMIT if res.stopped == "node_limit" else EXIT_NO


def cmd_enumerate(args, out) -> int:
    inst, res = _search(args, args.limit)
    _print_solutions(inst, res, args, out)
    if not args.quiet:
        note = {None: "", "solution_limit": " (solution limit reached)",
                "node_limit": " (node limit reached; list incomplete)"}[res.stopped]
        out.write(f"{len(res.solutions)} solutions{note}\n")
    if args.stats:
        out.write(res.stats.line() + "\n")
    if res.stopped == "node_limit":
        return EXIT_LIMIT
    return EXIT_OK if res.solutions else EXIT_NO


def _certificate(path):
    try:
        return read_certificate(path)
    except OSError as exc:
        raise UsageError(f"cannot read certificate {path}: {exc.strerror}") from None
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def cmd_verify(args, out) -> int:
    inst = parse_problem_spec(args.problem)
    verdict = inst.check_certificate(_certificate(args.certificate))
    if not args.quiet:
        out.write("valid\n" if verdict else f"invalid: {verdict.detail}\n")
    return EXIT_OK if verdict else EXIT_NO


def cmd_find_syms(args, out) -> int:
    inst = parse_problem_spec(args.problem)
    cert = _certificate(args.certificate)
    if cert.kind != inst.kind or len(cert.values) != inst.problem.arity:
        raise UsageError("certificate does not match the problem")
    names = [t.strip() for t in args.candidates.split(",") if t.strip()]
    cands: list[Symmetry] = []
    for name in names:
        if name == "group":
            cands.extend(inst.full_group)
        elif name == "all":
            cands.extend(inst.catalog.values())
        else:
            cands.append(_symmetry(inst, name))
    a = Assignment.from_values(cert.values)
    try:
        found = find_internal_symmetries(a, cands)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for s in found:
        out.write((s.name or "var: " + " ".join(map(str, s.var_perm))
                   + " | val: " + " ".join(map(str, s.val_perm))) + "\n")
    if not args.quiet:
        out.write(f"{len(found)} of {len(cands)} candidates are internal symmetries\n")
    return EXIT_OK if found else EXIT_NO


def cmd_validate_sbc(args, out) -> int:
    inst = parse_problem_spec(args.problem)
    sbc = _sbc(inst, args.sbc)
    if args.transform:
        sym = _symmetry(inst, args.transform)
        try:
            sbc = transform_sbc_set(sbc, sym, inst.sbc_group)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    report = validate_sbc(inst.problem, sbc, inst.sbc_group, node_limit=args.nodes)
    out.write(report.summary() + "\n")
    if not report.complete:
        return EXIT_LIMIT
    return EXIT_OK if report.at_least_one and report.at_most_one else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symsearch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def search_flags(p):
        p.add_argument("--problem", required=True)
        p.add_argument("--sbc", default="none", choices=["none", "corner", "lexleader"])
        p.add_argument("--fix", action="append", metavar="SYMMETRY",
                       help="restrict to solutions fixed by SYMMETRY (repeatable)")
        p.add_argument("--limit", type=int, help="stop after this many solutions")
        p.add_argument("--nodes", type=int, help="node budget")
        p.add_argument("--var-order", default="minDomain", choices=["minDomain", "inputOrder"])
        p.add_argument("--stats", action="store_true")
        p.add_argument("--quiet", action="store_true")

    search_flags(sub.add_parser("solve", help="find one solution"))
    search_flags(sub.add_parser("enumerate", help="list all solutions"))

    p = sub.add_parser("verify", help="check a certificate file")
    p.add_argument("--problem", required=True)
    p.add_argument("--certificate", required=True)
    p.add_argument("--quiet", action="store_true")

    p = sub.add_parser("find-syms", help="internal symmetries of a certificate")
    p.add_argument("--problem", required=True)
    p.add_argument("--certificate", required=True)
    p.add_argument("--candidates", default="group",
                   help="comma-separated names; 'group' or 'all' for the family sets")
    p.add_argument("--quiet", action="store_true")

    p = sub.add_parser("validate-sbc", help="measure how a breaking set splits orbits")
    p.add_argument("--problem", required=True)
    p.add_argument("--sbc", default="none", choices=["none", "corner", "lexleader"])
    p.add_argument("--transform", metavar="SYMMETRY")
    p.add_argument("--nodes", type=int, default=5_000_000)
    return parser


COMMANDS = {
    "solve": cmd_solve,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "find-syms": cmd_find_syms,
    "validate-sbc": cmd_validate_sbc,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    for flag in ("limit", "nodes"):
        val = getattr(args, flag, None)
        if val is not None and val <= 0:
            err.write(f"symsearch: --{flag} must be positive\n")
            return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (SpecError, UsageError) as exc:
        err.write(f"symsearch: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
