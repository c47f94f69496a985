"""Cascade simulator: moves, the gain bound, decomposition, scenario replay."""

import random
from fractions import Fraction

import pytest

from b2weyl.algebra import MassVector, Weights, ZERO, apply_word, eval_at
from b2weyl.cascade import (
    COLLAPSE_VARIANTS,
    Collapse,
    InvalidSatellite,
    NonPhysicalMove,
    SatelliteMerge,
    decompose,
    initial_state,
    parse_scenario,
    replay,
    step,
)
from b2weyl.orbit import is_member_gamma_N

F = Fraction


def mv(rows):
    return MassVector.from_rows(rows)


class TestMoves:
    def test_collapse_subset_validation(self):
        with pytest.raises(ValueError):
            Collapse(())
        with pytest.raises(ValueError):
            Collapse((1, 2, 3))
        with pytest.raises(ValueError):
            Collapse((4,))

    def test_pair_with_third_needs_variant(self):
        with pytest.raises(ValueError, match="variant"):
            Collapse((1, 3))
        with pytest.raises(ValueError, match="variant"):
            Collapse((2, 3), "bogus")

    def test_singletons_take_no_variant(self):
        with pytest.raises(ValueError, match="variant"):
            Collapse((1,), "i3")

    def test_variant_words(self):
        assert Collapse((1, 3), "e").word() == ()
        assert Collapse((1, 3), "i3").word() == (3, 1)
        assert Collapse((2, 3), "3i").word() == (2, 3)
        assert Collapse((1, 3), "i3i3").word() == (3, 1, 3, 1)
        assert Collapse((1, 2)).word() == (1, 2)
        assert Collapse((3,)).word() == (3,)


class TestStep:
    def test_single_collapse_from_origin(self):
        state = step(initial_state(), Collapse((1,)))
        assert state.gamma == mv([[4, 0, 0], [0, 0, 0], [0, 0, 0]])
        assert state.lattice == (0, 0, 0)

    def test_satellite_merge_is_pure_lattice_shift(self):
        state = step(initial_state(), SatelliteMerge((4, 4, 0)))
        assert state.gamma == ZERO
        assert state.lattice == (1, 1, 0)
        assert state.total() == (4, 4, 0)

    def test_braid_collapse_from_origin(self):
        state = step(initial_state(), Collapse((1, 3), "i3i3"))
        assert state.gamma == mv([[8, 0, 8], [0, 0, 0], [4, 0, 8]])
        assert state.total() == (16, 0, 12)

    def test_identity_variant_is_a_legal_noop(self):
        state = step(initial_state(), Collapse((1, 3), "e"))
        assert state.gamma == ZERO
        assert len(state.history) == 1

    def test_invalid_satellite_rejected(self):
        with pytest.raises(InvalidSatellite):
            step(initial_state(), SatelliteMerge((4, 2, 0)))
        with pytest.raises(InvalidSatellite):
            step(initial_state(), SatelliteMerge((-4, 0, 0)))

    def test_reversing_collapse_is_non_physical(self):
        state = step(initial_state(), Collapse((1,)))
        with pytest.raises(NonPhysicalMove, match="non-physical"):
            step(state, Collapse((1,)))

    def test_zero_gain_swap_is_non_physical(self):
        # From (4mu1, 0, 0) the pair collapse {1,2} lands on (0, 4mu2, 0):
        # the orbit part changes but the total mass stalls, below the
        # physical lower bound.
        state = step(initial_state(), Collapse((1,)))
        with pytest.raises(NonPhysicalMove):
            step(state, Collapse((1, 2)))

    def test_gain_bound_at_probe(self):
        state = initial_state(Weights.numeric(F(3, 2), F(1, 2), 1))
        state = step(state, Collapse((2,)))
        # gain was 4*mu2 = 2 at the probe, exactly the minimal bound
        assert state.total() == (0, 2, 0)

    def test_history_accumulates(self):
        state = initial_state()
        state = step(state, Collapse((3,)))
        state = step(state, Collapse((1,)))
        assert [m.describe() for m in state.history] == ["collapse 3", "collapse 1"]


class TestDecompose:
    def test_origin_state(self):
        dec = decompose(initial_state())
        assert dec.gamma == ZERO
        assert dec.lattice == (0, 0, 0)
        assert dec.descent_word == ()

    def test_collapse_then_merge(self):
        state = step(initial_state(), Collapse((1,)))
        state = step(state, SatelliteMerge((0, 0, 8)))
        dec = decompose(state)
        assert dec.gamma == mv([[4, 0, 0], [0, 0, 0], [0, 0, 0]])
        assert dec.lattice == (0, 0, 2)
        assert apply_word(dec.gamma, dec.descent_word) == ZERO

    def test_two_collapses(self):
        state = step(initial_state(), Collapse((3,)))
        state = step(state, Collapse((1,)))
        dec = decompose(state)
        assert dec.gamma == mv([[4, 0, 8], [0, 0, 0], [0, 0, 4]])
        assert dec.lattice == (0, 0, 0)


def random_move(rng: random.Random):
    if rng.random() < 0.4:
        return SatelliteMerge(tuple(4 * rng.randint(0, 3) for _ in range(3)))
    subset = rng.choice([(1,), (2,), (3,), (1, 2), (1, 3), (2, 3)])
    if len(subset) == 2 and 3 in subset:
        return Collapse(subset, rng.choice(sorted(COLLAPSE_VARIANTS)))
    return Collapse(subset)


class TestRandomSequences:
    def test_invariants_hold_along_legal_sequences(self):
        rng = random.Random(99)
        for _ in range(40):
            state = initial_state()
            accepted = 0
            attempts = 0
            while accepted < 8 and attempts < 200:
                attempts += 1
                move = random_move(rng)
                before = state.total_sum()
                try:
                    nxt = step(state, move)
                except NonPhysicalMove:
                    continue
                accepted += 1
                # decomposition invariant: total = gamma + 4n at the probe
                gamma_vals = eval_at(nxt.gamma, nxt.probe)
                assert nxt.total() == tuple(
                    g + 4 * n for g, n in zip(gamma_vals, nxt.lattice))
                # orbit part stays a certified member
                assert is_member_gamma_N(nxt.gamma)
                # accepted collapses that move the orbit part gain >= 4
                if isinstance(move, Collapse) and nxt.gamma != state.gamma:
                    assert nxt.total_sum() - before >= 4
                state = nxt


class TestScenario:
    def test_parse_and_replay(self):
        text = """
        # grow then absorb
        collapse 3
        collapse 1
        merge 4 0 8
        collapse 13 i3
        """
        moves = parse_scenario(text)
        assert [m.describe() for m in moves] == [
            "collapse 3", "collapse 1", "merge 4 0 8", "collapse 13 i3"]
        trace = replay(moves)
        assert len(trace) == 4
        assert trace[1]["gamma_coeff"] == [[4, 0, 8], [0, 0, 0], [0, 0, 4]]
        assert trace[2]["lattice"] == [1, 0, 2]
        totals = [sum(F(v) for v in rec["total"]) for rec in trace]
        assert totals == sorted(totals)

    def test_parse_errors_carry_line_numbers(self):
        with pytest.raises(ValueError, match="line 1"):
            parse_scenario("merge 4 4")
        with pytest.raises(ValueError, match="unknown move"):
            parse_scenario("explode 1 2 3")
        with pytest.raises(ValueError, match="variant"):
            parse_scenario("collapse 13")

    def test_replay_rejects_non_physical_scenario(self):
        moves = parse_scenario("collapse 1\ncollapse 1")
        with pytest.raises(NonPhysicalMove):
            replay(moves)
