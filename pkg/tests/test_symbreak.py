import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symsearch import (
    Assignment,
    BinaryLess,
    LinearSumEq,
    apply,
    apply_to_set,
    corner_constraint,
    enumerate_solutions,
    inverse,
    lex_leader,
    orbit,
    transform_constraint,
    transform_sbc_set,
    validate_sbc,
)
from symsearch.problems import (
    VdwSpec,
    build_graceful,
    build_magic,
    build_vdw,
    cycle,
    graceful_group,
    magic_group,
    vdw_group,
)

from conftest import LO_SHU, LO_SHU_DIAG, flat
from oracles import holds, magic_squares, square_image, square_moves
from randprob import KINDS, random_problem, random_symmetry

MAGIC = build_magic(3)
SQUARE = magic_group(3)


def survivors(problem, constraints):
    return {a.values() for a in enumerate_solutions(problem.with_constraints(*constraints)).solutions}


def test_lex_leader_keeps_single_square():
    # oracle: the brute-force square that is row-major smallest among its 8 images
    moves = square_moves(3).values()
    leaders = {s for s in magic_squares(3) if all(s <= square_image(s, 3, m) for m in moves)}
    assert len(leaders) == 1
    assert survivors(MAGIC, lex_leader(SQUARE)) == leaders


def test_lex_leader_identity_only(sq):
    assert lex_leader([sq["id"]]) == []


def test_lex_leader_diag_pair(sq):
    # Lo Shu precedes its diag image at the first cell
    assert flat(LO_SHU) < flat(LO_SHU_DIAG)
    (c,) = lex_leader([sq["id"], sq["diag"]])
    assert holds(c, flat(LO_SHU))
    assert not holds(c, flat(LO_SHU_DIAG))


def test_lex_leader_rejects_unclosed(sq):
    with pytest.raises(ValueError, match="closed"):
        lex_leader([sq["id"], sq["rot90"]])


def test_corner_constraint_selects_eq1():
    c = corner_constraint(MAGIC)
    assert c == BinaryLess(0, 8)
    assert holds(c, flat(LO_SHU)) and not holds(c, flat(LO_SHU_DIAG))
    # brute-force filter: four squares have top-left < bottom-right
    expected = {s for s in magic_squares(3) if s[0] < s[8]}
    assert len(expected) == 4
    assert survivors(MAGIC, [c]) == expected


def test_corner_constraint_rejects_degenerate():
    with pytest.raises(ValueError):
        corner_constraint(build_magic(1))
    with pytest.raises(ValueError):
        corner_constraint(build_vdw(VdwSpec(5)))


def test_transform_corner_by_diag(sq):
    c = corner_constraint(MAGIC)
    t = transform_constraint(c, sq["diag"])
    assert t == BinaryLess(8, 0)
    assert holds(t, flat(LO_SHU_DIAG)) and not holds(t, flat(LO_SHU))
    assert transform_constraint(c, sq["id"]) == c


def test_transform_row_sum_by_rot90(sq):
    row0 = LinearSumEq((0, 1, 2), 15)
    t = transform_constraint(row0, sq["rot90"])
    assert t == LinearSumEq((2, 5, 8), 15)
    # both select the full brute-force census
    assert {s for s in magic_squares(3) if holds(row0, s)} == {s for s in magic_squares(3) if holds(t, s)}


def test_transform_sum_by_inversion_adjusts_target(sq):
    t = transform_constraint(LinearSumEq((0, 1), 7), sq["inv"])
    assert t == LinearSumEq((0, 1), 13)        # (10-a) + (10-b) = 7


def test_transform_sbc_set_corner_by_diag(sq):
    c = [corner_constraint(MAGIC)]
    t = transform_sbc_set(c, sq["diag"], SQUARE)
    kept, kept_t = survivors(MAGIC, c), survivors(MAGIC, t)
    assert len(kept) == len(kept_t) == 4
    images = apply_to_set(sq["diag"], [Assignment.from_values(s) for s in kept])
    assert {a.values() for a in images} == kept_t
    assert transform_sbc_set(c, sq["id"], SQUARE) == c


def test_transform_lex_leader_by_each_element():
    base = lex_leader(SQUARE)
    for g in SQUARE:
        assert len(survivors(MAGIC, transform_sbc_set(base, g, SQUARE))) == 1


def test_transform_sbc_set_rejects_non_member(sq):
    with pytest.raises(ValueError, match="not an element"):
        transform_sbc_set([], sq["inv"], SQUARE)


def test_transform_unrepresentable(sq):
    from symsearch import Symmetry

    scramble = Symmetry(tuple(range(9)), tuple(range(1, 10)), (2, 1, 3, 4, 5, 6, 7, 8, 9))
    with pytest.raises(ValueError):
        transform_constraint(LinearSumEq((0, 1), 5), scramble)
    with pytest.raises(ValueError):
        transform_constraint(BinaryLess(0, 1), scramble)
    with pytest.raises(ValueError):
        transform_constraint(lex_leader(SQUARE)[0], sq["inv"])


def test_validate_sbc_reports():
    full = validate_sbc(MAGIC, lex_leader(SQUARE), SQUARE)
    assert full.orbits == 1 and len(full.survivors) == 1
    assert full.at_least_one and full.at_most_one and full.breaks_fully
    part = validate_sbc(MAGIC, [corner_constraint(MAGIC)], SQUARE)
    assert len(part.survivors) == 4 and part.at_least_one and not part.at_most_one
    p = build_vdw(VdwSpec(5))
    ident = [vdw_group(VdwSpec(5))[0]]
    trivial = validate_sbc(p, [], ident)
    assert trivial.at_least_one and trivial.at_most_one
    assert trivial.orbits == len(trivial.solutions)


def test_validate_sbc_partial_marker():
    rep = validate_sbc(MAGIC, [], SQUARE, node_limit=10)
    assert not rep.complete and not rep.breaks_fully
    assert "PARTIAL" in rep.summary()


@pytest.mark.parametrize(
    "problem,group",
    [
        (MAGIC, SQUARE),
        (MAGIC, magic_group(3, with_inversion=True)),
        (build_vdw(VdwSpec(8)), vdw_group(VdwSpec(8))),
        (build_vdw(VdwSpec(7, 3, 3)), vdw_group(VdwSpec(7, 3, 3))),
        (build_graceful(cycle(7)), graceful_group(cycle(7))),
    ],
    ids=["magic-8", "magic-16", "vdw8", "vdw7k3", "cycle7"],
)
def test_lex_leader_canonicity(problem, group):
    sols = enumerate_solutions(problem).solutions
    kept = set(enumerate_solutions(problem.with_constraints(*lex_leader(group))).solutions)
    for a in sols:
        members = orbit(a, group)
        assert len(members & kept) == 1
        assert min(members) in kept


@pytest.mark.parametrize(
    "problem,group",
    [
        (MAGIC, SQUARE),
        (build_vdw(VdwSpec(8)), vdw_group(VdwSpec(8))),
        (build_graceful(cycle(4)), graceful_group(cycle(4))),
    ],
    ids=["magic", "vdw8", "cycle4"],
)
def test_transformed_set_preserves_survivor_count(problem, group):
    base = lex_leader(group)
    n = len(survivors(problem, base))
    for g in group:
        try:
            t = transform_sbc_set(base, g, group)
        except ValueError:
            continue            # decreasing value maps do not keep lex form
        assert len(survivors(problem, t)) == n


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 100_000), st.sampled_from(KINDS), st.integers(0, 100_000))
def test_transform_semantics(seed, kind, sseed):
    p = random_problem(seed, max_vars=6, max_vals=4, kinds=(kind,), n_constraints=1)
    (c,) = p.constraints
    rng = random.Random(sseed)
    sym = random_symmetry(rng, p.arity, p.universe)
    try:
        t = transform_constraint(c, sym)
    except ValueError:
        return
    inv = inverse(sym)
    for _ in range(30):
        vals = [rng.choice(p.universe) for _ in range(p.arity)]
        back = apply(inv, Assignment.from_values(vals)).values()
        assert holds(t, vals) == holds(c, back)
