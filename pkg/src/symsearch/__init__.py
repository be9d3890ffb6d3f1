"""Symmetry within and between solutions of finite-domain search problems.

* :mod:`symsearch.symmetry` -- variable x value permutations, groups, orbits
* :mod:`symsearch.engine` -- problems and a deterministic backtracking search
* :mod:`symsearch.symbreak` -- lex-leader and transformed breaking constraints
* :mod:`symsearch.internal` -- search restricted to symmetric (fixed) solutions
* :mod:`symsearch.problems` -- magic squares, Van der Waerden, graceful graphs
"""

from .constraints import (
    AllDifferent,
    BinaryLess,
    Constraint,
    FunctionalBind,
    GracefulEdges,
    LexLeqUnder,
    LinearSumEq,
    NoMonoAP,
    Status,
    check,
    satisfies,
)
from .engine import (
    NodeLimitReached,
    Problem,
    SearchConfig,
    SearchResult,
    SearchStats,
    enumerate_solutions,
    solve,
)
from .internal import (
    consistency_precheck,
    pipeline_find_then_restrict,
    restrict_to_internal,
)
from .symbreak import (
    corner_constraint,
    lex_leader,
    transform_constraint,
    transform_sbc_set,
    validate_sbc,
)
from .symmetry import (
    Assignment,
    GroupTooLargeError,
    Symmetry,
    apply,
    apply_to_set,
    close_group,
    compose,
    find_internal_symmetries,
    identity,
    inverse,
    is_internal_symmetry,
    orbit,
)

__version__ = "0.1.0"
