"""Rank-one reduction: chain closed form, orbit, quadric, unit-weight values."""

from fractions import Fraction

import pytest

from b2weyl.sinh import (
    MassVector2,
    ZERO2,
    sinh_closed_form,
    sinh_eval,
    sinh_invert,
    sinh_orbit,
    sinh_reflect,
    sinh_residual,
)
from conftest import REF_CARTAN_SINH, SAMPLE_WEIGHTS, reflect_reference

F = Fraction


def mv2(rows):
    return MassVector2.from_rows(rows)


class TestReflect:
    def test_reflections_of_origin(self):
        assert sinh_reflect(ZERO2, 1) == mv2([[4, 0], [0, 0]])
        assert sinh_reflect(ZERO2, 2) == mv2([[0, 0], [0, 4]])

    def test_second_step_matches_even_branch(self):
        first = mv2([[4, 0], [0, 0]])
        assert sinh_reflect(first, 2) == mv2([[4, 0], [8, 4]])
        assert sinh_reflect(first, 2) == sinh_closed_form(2)

    def test_involution(self):
        sigma = mv2([[16, 8], [8, 4]])
        for i in (1, 2):
            assert sinh_reflect(sinh_reflect(sigma, i), i) == sigma

    def test_bad_index(self):
        with pytest.raises(ValueError):
            sinh_reflect(ZERO2, 3)

    def test_agrees_with_numeric_reference(self):
        sigma = sinh_closed_form(3)
        for mu3 in SAMPLE_WEIGHTS:
            mu = mu3[:2]
            for i in (1, 2):
                got = sinh_eval(sinh_reflect(sigma, i), mu)
                want = reflect_reference(sinh_eval(sigma, mu), i, mu, REF_CARTAN_SINH)
                assert got == want


class TestClosedForm:
    def test_zero_parameter(self):
        assert sinh_closed_form(0) == ZERO2

    def test_unit_parameters(self):
        assert sinh_closed_form(1) == mv2([[4, 0], [0, 0]])
        assert sinh_closed_form(-1) == mv2([[0, 0], [0, 4]])

    def test_entries_nonnegative_multiples_of_four(self):
        for m in range(-50, 51):
            sigma = sinh_closed_form(m)
            for row in sigma.coeff:
                for v in row:
                    assert v >= 0 and v % 4 == 0

    def test_quadric_holds_identically(self):
        for m in range(-50, 51):
            assert sinh_residual(sinh_closed_form(m)).is_zero

    def test_invert_round_trip(self):
        for m in range(-50, 51):
            assert sinh_invert(sinh_closed_form(m)) == m

    def test_invert_rejects_off_chain_vector(self):
        with pytest.raises(ValueError):
            sinh_invert(mv2([[4, 0], [0, 4]]))


class TestOrbit:
    def test_level_one(self):
        assert set(sinh_orbit(1)) == {ZERO2, mv2([[4, 0], [0, 0]]), mv2([[0, 0], [0, 4]])}

    def test_orbit_equals_chain(self):
        level = 20
        orbit = set(sinh_orbit(level))
        chain = {sinh_closed_form(m) for m in range(-level, level + 1)}
        assert orbit == chain

    def test_alternating_reflections_walk_the_chain(self):
        # From the origin, 1 then 2 then 1 ... visits m = 1, 2, 3, ...;
        # starting with 2 visits m = -1, -2, -3, ...
        sigma, expected = ZERO2, 0
        for step in range(1, 12):
            sigma = sinh_reflect(sigma, 1 if step % 2 else 2)
            expected += 1
            assert sigma == sinh_closed_form(expected)
        sigma, expected = ZERO2, 0
        for step in range(1, 12):
            sigma = sinh_reflect(sigma, 2 if step % 2 else 1)
            expected -= 1
            assert sigma == sinh_closed_form(expected)

    def test_parity_alternates_along_the_chain(self):
        for m in range(-10, 11):
            sigma = sinh_closed_form(m)
            even_image = sinh_reflect(sigma, 1)
            assert sinh_invert(even_image) == (m + 1 if m % 2 == 0 else m - 1)


class TestUnitWeights:
    def test_pair_family(self):
        for m in range(-30, 31):
            values = sinh_eval(sinh_closed_form(m), (1, 1))
            if m % 2:
                assert values == (2 * m * (m + 1), 2 * m * (m - 1))
            else:
                assert values == (2 * m * (m - 1), 2 * m * (m + 1))

    def test_rational_weights(self):
        values = sinh_eval(sinh_closed_form(2), (F(3, 2), F(1, 2)))
        assert values == (6, 14)
