from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from scribal.rational import (
    UnitFractionSum,
    add,
    div,
    from_unit_fractions,
    mul,
    parse_rational,
    parse_unit_fraction_sum,
    render_rational,
    sub,
)

F = Fraction


class TestOps:
    def test_add_unit_fractions(self):
        assert add(F(1, 3), F(1, 6)) == F(1, 2)

    def test_mul_inverse_pair(self):
        assert mul(F(2, 3), F(3, 2)) == 1

    def test_div_by_four(self):
        # hand check: 256/81 / 4 = 256/324 = 64/81
        assert div(F(256, 81), 4) == F(64, 81)

    def test_sub(self):
        assert sub(F(1), F(7, 10)) == F(3, 10)

    def test_div_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            div(F(1, 2), F(0))

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            add(0.5, F(1, 2))

    @given(st.fractions(), st.fractions(), st.fractions())
    def test_field_axioms_spot_check(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c

    @given(st.fractions(), st.fractions())
    def test_results_canonical(self, a, b):
        for value in (add(a, b), sub(a, b), mul(a, b)):
            assert value.denominator > 0
            from math import gcd

            assert gcd(abs(value.numerator), value.denominator) == 1


class TestUnitFractionSum:
    def test_half_plus_sixth(self):
        assert from_unit_fractions(UnitFractionSum(0, False, (2, 6))) == F(2, 3)

    def test_with_integer_part(self):
        # 16 + 1/2 + 1/8 summed directly: 16 + 5/8
        assert from_unit_fractions(UnitFractionSum(16, False, (2, 8))) == F(133, 8)

    def test_with_two_thirds_marker(self):
        # 2/3 + 1/30 summed directly: 21/30
        assert from_unit_fractions(UnitFractionSum(0, True, (30,))) == F(7, 10)

    def test_term_count_counts_marker_once(self):
        assert UnitFractionSum(3, True, (4, 12)).term_count == 3
        assert UnitFractionSum(5).term_count == 0

    def test_rejects_denominator_one(self):
        with pytest.raises(ValueError):
            UnitFractionSum(0, False, (1, 2))

    def test_rejects_unsorted_denominators(self):
        with pytest.raises(ValueError):
            UnitFractionSum(0, False, (6, 2))

    def test_rejects_duplicate_denominators(self):
        with pytest.raises(ValueError):
            UnitFractionSum(0, False, (4, 4))

    def test_rejects_negative_integer_part(self):
        with pytest.raises(ValueError):
            UnitFractionSum(-1)


unit_sums = st.builds(
    UnitFractionSum,
    st.integers(min_value=0, max_value=10**6),
    st.booleans(),
    st.lists(st.integers(min_value=2, max_value=10**5), unique=True, max_size=8).map(
        lambda ds: tuple(sorted(ds))
    ),
)


class TestTextForms:
    def test_render_examples(self):
        assert UnitFractionSum(16, False, (2, 8)).render() == "16 + 1/2 + 1/8"
        assert UnitFractionSum(0, True, (30,)).render() == "2/3 + 1/30"
        assert UnitFractionSum(5).render() == "5"
        assert UnitFractionSum(0).render() == "0"

    def test_render_rational(self):
        assert render_rational(F(133, 8)) == "133/8"
        assert render_rational(F(-3, 4)) == "-3/4"
        assert render_rational(F(10, 2)) == "5"

    def test_parse_rational_both_forms(self):
        assert parse_rational("133/8") == F(133, 8)
        assert parse_rational("16 + 1/2 + 1/8") == F(133, 8)
        assert parse_rational("2/3 + 1/30") == F(7, 10)
        assert parse_rational("-3/4") == F(-3, 4)

    @pytest.mark.parametrize("bad", ["", "one", "1/2 +", "3 4", "2/3x", "1/0"])
    def test_parse_rational_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)

    def test_parse_unit_sum(self):
        u = parse_unit_fraction_sum("16 + 1/2 + 1/8")
        assert u == UnitFractionSum(16, False, (2, 8))
        assert parse_unit_fraction_sum("2/3") == UnitFractionSum(0, True, ())
        assert parse_unit_fraction_sum("0") == UnitFractionSum(0)

    @pytest.mark.parametrize("bad", ["3/4", "1/2 + 2/3", "1/2 + 1/2", "1/6 + 1/2", "-1"])
    def test_parse_unit_sum_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_unit_fraction_sum(bad)

    @given(unit_sums)
    def test_round_trip_exact(self, u):
        assert parse_unit_fraction_sum(u.render()) == u

    @given(st.fractions())
    def test_rational_round_trip(self, x):
        assert parse_rational(render_rational(x)) == x
