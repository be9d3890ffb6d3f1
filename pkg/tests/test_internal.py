import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symsearch import (
    Assignment,
    apply_to_set,
    compose,
    enumerate_solutions,
    is_internal_symmetry,
    restrict_to_internal,
)
from symsearch.internal import consistency_precheck, cycles, pipeline_find_then_restrict
from symsearch.problems import (
    VdwSpec,
    build_magic,
    build_vdw,
    lift_by_name,
    magic_group,
    parse_coloring,
    vdw_symmetries,
)

from oracles import image, magic_squares, vdw_colorings
from randprob import random_problem, random_symmetry

MAGIC = build_magic(3)


@pytest.fixture
def inv180(sq):
    return compose(sq["inv"], sq["rot180"])


def test_cycles():
    assert cycles((1, 2, 0, 3)) == [(0, 1, 2), (3,)]
    assert cycles(()) == []


def test_precheck_forces_centre(inv180):
    res = consistency_precheck(inv180, MAGIC.domains)
    assert res.feasible
    assert res.domains[4] == (5,)
    assert res.pruned[4] == (1, 2, 3, 4, 6, 7, 8, 9)
    assert set(res.pruned) == {4}


def test_precheck_identity(sq):
    res = consistency_precheck(sq["id"], MAGIC.domains)
    assert res.feasible and res.pruned == {}


def test_precheck_odd_vdw_infeasible():
    spec = VdwSpec(7)
    s = vdw_symmetries(spec)["reflect+colorswap"]
    res = consistency_precheck(s, build_vdw(spec).domains)
    assert not res.feasible and res.domains[3] == ()
    # exhaustive confirmation: no 2-colouring of 1..7 is fixed by it
    fixed = [c for c in itertools.product(range(2), repeat=7) if image(s, c) == list(c)]
    assert fixed == []


def test_restricted_magic_keeps_all_eight(inv180):
    # oracle: every brute-force square is fixed by inv o rot180
    assert all(image(inv180, s) == list(s) for s in magic_squares(3))
    res = enumerate_solutions(restrict_to_internal(MAGIC, inv180))
    assert {a.values() for a in res.solutions} == magic_squares(3)


def test_restricted_vdw_admits_rrbbrrbb():
    spec = VdwSpec(8)
    p = restrict_to_internal(build_vdw(spec), vdw_symmetries(spec)["reflect+colorswap"])
    cert = Assignment.from_values(parse_coloring("rrbbrrbb", "rb"))
    assert p.is_solution(cert)
    assert cert in enumerate_solutions(p).solutions


def test_restrict_rejects_incompatible(sq):
    with pytest.raises(ValueError):
        restrict_to_internal(build_vdw(VdwSpec(9)), sq["rot90"])


def test_pipeline_magic(inv180):
    seeds = enumerate_solutions(MAGIC).solutions
    res = pipeline_find_then_restrict(MAGIC, seeds, magic_group(3, with_inversion=True))
    assert res.seed_symmetries == [inv180]
    assert len(res.problems) == 1
    assert len(enumerate_solutions(res.problems[0]).solutions) == 8


def test_pipeline_vdw_lift_to_10_reports_exhaustion():
    small, big = VdwSpec(8), VdwSpec(10)
    seeds = enumerate_solutions(build_vdw(small)).solutions
    cat = vdw_symmetries(small)
    cands = [cat["id"], cat["reflect+colorswap"]]
    # not every n=8 certificate is fixed by it, so "all" finds nothing
    assert not pipeline_find_then_restrict(build_vdw(big), seeds, cands, require="all")
    res = pipeline_find_then_restrict(
        build_vdw(big), seeds, cands,
        lift=lambda s: lift_by_name(s, vdw_symmetries(big)), require="any",
    )
    assert [s.name for s in res.lifted] == ["reflect+colorswap"]
    assert res.lifted[0].var_perm == tuple(range(9, -1, -1))
    out = enumerate_solutions(res.problems[0])
    assert vdw_colorings(10, 2, 3) == frozenset()
    assert out.complete and out.solutions == []


def test_pipeline_requires_seeds(sq):
    with pytest.raises(ValueError):
        pipeline_find_then_restrict(MAGIC, [], [sq["id"]])


def test_common_internal_symmetry_is_solution_symmetry(inv180):
    sols = enumerate_solutions(MAGIC).solutions
    assert all(is_internal_symmetry(inv180, a) for a in sols)
    assert apply_to_set(inv180, sols) == set(sols)


@pytest.mark.parametrize("name", ["reflect", "colorswap", "reflect+colorswap"])
def test_quotient_matches_filter_vdw(name):
    spec = VdwSpec(8)
    p = build_vdw(spec)
    s = vdw_symmetries(spec)[name]
    full = enumerate_solutions(p).solutions
    want = sorted(a for a in full if is_internal_symmetry(s, a))
    assert sorted(enumerate_solutions(restrict_to_internal(p, s)).solutions) == want


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 100_000), st.integers(0, 100_000), st.booleans())
def test_quotient_correctness_random(seed, sseed, involution):
    p = random_problem(seed, max_vars=7, max_vals=4)
    s = random_symmetry(random.Random(sseed), p.arity, p.universe, involution=involution)
    want = sorted(a for a in enumerate_solutions(p).solutions if is_internal_symmetry(s, a))
    got = sorted(enumerate_solutions(restrict_to_internal(p, s)).solutions)
    assert got == want
