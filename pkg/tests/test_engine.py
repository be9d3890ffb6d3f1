import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symsearch import (
    AllDifferent,
    Assignment,
    BinaryLess,
    NodeLimitReached,
    Problem,
    SearchConfig,
    enumerate_solutions,
    solve,
)
from symsearch.problems import VdwSpec, build_magic, build_vdw, verify_vdw

from oracles import generate_and_test, holds, magic_squares, vdw_colorings
from randprob import random_problem


def test_magic3_has_eight_solutions():
    res = enumerate_solutions(build_magic(3))
    assert res.complete
    assert {a.values() for a in res.solutions} == magic_squares(3)
    assert res.stats.solutions == 8 <= res.stats.nodes


def test_single_variable_no_constraints():
    p = Problem(1, ((7,),))
    assert enumerate_solutions(p).solutions == [Assignment.from_values([7])]


def test_vdw9_is_unsatisfiable():
    assert vdw_colorings(9, 2, 3) == frozenset()
    assert enumerate_solutions(build_vdw(VdwSpec(9))).solutions == []


def test_solve_unsat_and_vdw8():
    assert solve(Problem(1, ((1,),), (BinaryLess(0, 0),))) is None
    a = solve(build_vdw(VdwSpec(8)))
    assert a is not None and verify_vdw(VdwSpec(8), a.values())
    assert a.values() in vdw_colorings(8, 2, 3)


def test_solution_order_is_deterministic_and_lex_under_input_order():
    p = Problem.uniform(3, range(3), [AllDifferent((0, 1, 2))])
    res = enumerate_solutions(p, SearchConfig(var_order="inputOrder"))
    vals = [a.values() for a in res.solutions]
    assert vals == sorted(vals) and len(vals) == 6


def test_limits():
    p = build_magic(3)
    res = enumerate_solutions(p, SearchConfig(solution_limit=3))
    assert len(res.solutions) == 3 and res.stopped == "solution_limit"
    res = enumerate_solutions(p, SearchConfig(node_limit=50))
    assert res.stopped == "node_limit" and not res.complete and res.stats.nodes == 50
    with pytest.raises(NodeLimitReached):
        solve(p, SearchConfig(node_limit=5))
    with pytest.raises(ValueError):
        SearchConfig(node_limit=0)
    with pytest.raises(ValueError):
        SearchConfig(var_order="random")


def test_result_unpacks():
    solutions, stats = enumerate_solutions(build_magic(1))
    assert [a.values() for a in solutions] == [(1,)]
    assert stats.nodes >= stats.solutions == 1


def test_problem_validation():
    with pytest.raises(ValueError):
        Problem(2, ((1,), ()))
    with pytest.raises(ValueError):
        Problem(2, ((1,), (2,)), (BinaryLess(0, 5),))
    with pytest.raises(ValueError):
        Problem(1, ((1,),), universe=(2, 3))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000))
def test_matches_generate_and_test(seed):
    p = random_problem(seed, max_vars=7, max_vals=4)
    expected = sorted(generate_and_test(p))
    for order in ("minDomain", "inputOrder"):
        res = enumerate_solutions(p, SearchConfig(var_order=order))
        got = sorted(a.values() for a in res.solutions)
        assert got == expected
        assert all(p.is_solution(a) for a in res.solutions)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000))
def test_soundness_against_direct_evaluation(seed):
    p = random_problem(seed)
    for a in enumerate_solutions(p).solutions:
        assert all(holds(c, a.values()) for c in p.constraints)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 100_000))
def test_determinism(seed):
    p = random_problem(seed)
    r1, r2 = enumerate_solutions(p), enumerate_solutions(p)
    assert r1.solutions == r2.solutions and r1.stats.nodes == r2.stats.nodes


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000), st.integers(0, 100_000))
def test_adding_a_constraint_never_adds_nodes_in_input_order(seed, seed2):
    p = random_problem(seed)
    extra = random_problem(seed2, n_constraints=1)
    (c,) = extra.constraints
    if any(x >= p.arity for x in c.scope) or c.literals() - set(p.universe):
        return
    if hasattr(c, "sym") and (c.sym.universe != p.universe or c.sym.arity != p.arity):
        return
    cfg = SearchConfig(var_order="inputOrder")
    before = enumerate_solutions(p, cfg).stats.nodes
    after = enumerate_solutions(p.with_constraints(c), cfg).stats.nodes
    assert after <= before


def test_adding_constraints_shrinks_fixed_instances():
    # min-domain ordering on the fixed acceptance-style instances
    from symsearch import compose, lex_leader, restrict_to_internal
    from symsearch.problems import magic_group, magic_symmetries, vdw_symmetries

    m = build_magic(3)
    base = enumerate_solutions(m).stats.nodes
    assert enumerate_solutions(m.with_constraints(*lex_leader(magic_group(3)))).stats.nodes <= base
    cat = magic_symmetries(3)
    assert enumerate_solutions(restrict_to_internal(m, compose(cat["inv"], cat["rot180"]))).stats.nodes <= base
    v = build_vdw(VdwSpec(8))
    fixed = restrict_to_internal(v, vdw_symmetries(VdwSpec(8))["reflect+colorswap"])
    assert enumerate_solutions(fixed).stats.nodes <= enumerate_solutions(v).stats.nodes
