"""Graceful labellings of cycles, wheels and double wheels."""

from __future__ import annotations

import sys
from pathlib import Path

from symsearch import SearchConfig, enumerate_solutions, solve
from symsearch.problems import (
    build_graceful,
    cycle,
    double_wheel,
    format_graceful,
    parse_certificate,
    verify_graceful,
    wheel,
)


def main():
    for n in range(3, 9):
        res = enumerate_solutions(build_graceful(cycle(n)))
        print(f"cycle({n}) n%4={n % 4}: {len(res.solutions)} labellings")

    w = wheel(5)
    print("\n" + format_graceful(w, solve(build_graceful(w)).values()), end="")

    # DW(3) has no graceful labelling; the exhaustive run says so quickly
    res = enumerate_solutions(build_graceful(double_wheel(3)), SearchConfig(solution_limit=1))
    print(f"\ndouble_wheel(3): {len(res.solutions)} labellings ({res.stats.line()})")

    dw4 = double_wheel(4)
    lab = solve(build_graceful(dw4))
    print(format_graceful(dw4, lab.values()), end="")
    print("verified:", bool(verify_graceful(dw4, lab.values())))

    # size 24 is out of reach for plain search, but certificates can be checked
    path = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent.parent / "tests/data/dwheel24.txt"
    if path.exists():
        cert = parse_certificate(path.read_text())
        verdict = verify_graceful(cert.graph, cert.values)
        print(f"\n{path.name}: {'valid' if verdict else 'invalid: ' + verdict.detail}")


if __name__ == "__main__":
    main()
