from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from seqfit import build_table, detect_degree, diagonal_direct
from seqfit.errors import DomainError, NotPolynomialError

from conftest import DIAG_START_ONE, DIAG_START_ZERO

rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=10
)


class TestBuildTable:
    def test_main_diagonal_start_zero_example(self, seq_start_zero):
        table = build_table(seq_start_zero)
        assert list(table.main_diagonal) == DIAG_START_ZERO

    def test_main_diagonal_start_one_example(self, seq_start_one):
        table = build_table(seq_start_one)
        assert list(table.main_diagonal) == DIAG_START_ONE

    def test_single_value(self):
        table = build_table([Fraction(5)])
        assert table.rows == ((Fraction(5),),)
        assert table.main_diagonal == (Fraction(5),)

    def test_row_lengths_shrink_by_one(self, seq_start_zero):
        table = build_table(seq_start_zero)
        for r, row in enumerate(table.rows):
            assert len(row) == len(seq_start_zero) - r

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            build_table([])


class TestDetectDegree:
    def test_degree_six_example(self, seq_start_zero):
        report = detect_degree(build_table(seq_start_zero))
        assert report.degree == 6
        assert report.constant_row_value == 2880
        assert report.witnesses == 2

    def test_degree_five_decimal_example(self, seq_decimal):
        report = detect_degree(build_table(seq_decimal))
        assert report.degree == 5
        assert report.constant_row_value == Fraction(9, 2500)
        assert report.witnesses == 2

    def test_constant_sequence(self):
        report = detect_degree(build_table([Fraction(7)] * 3))
        assert report.degree == 0
        assert report.constant_row_value == 7
        assert report.witnesses == 3

    def test_not_polynomial_within_window(self):
        # 2^x grows too fast for any constant row to appear
        with pytest.raises(NotPolynomialError) as err:
            detect_degree(build_table([Fraction(2**i) for i in range(6)]))
        assert err.value.deepest_row == 4

    def test_length_one_rejected(self):
        with pytest.raises(DomainError):
            detect_degree(build_table([Fraction(1)]))

    def test_min_witnesses_raises_the_bar(self, seq_start_zero):
        # row 6 has only two entries, so demanding three pushes past the window
        with pytest.raises(NotPolynomialError):
            detect_degree(build_table(seq_start_zero), min_witnesses=3)

    def test_constant_shift_invariance(self, seq_start_zero):
        shifted = [v + Fraction(123, 7) for v in seq_start_zero]
        assert detect_degree(build_table(shifted)).degree == 6


class TestDiagonalDirect:
    def test_start_zero_example_entry(self, seq_start_zero):
        assert diagonal_direct(seq_start_zero, 3) == 3168

    def test_index_zero_is_first_value(self, seq_start_zero):
        assert diagonal_direct(seq_start_zero, 0) == seq_start_zero[0]

    def test_start_one_example_entry(self, seq_start_one):
        assert diagonal_direct(seq_start_one, 6) == 1440

    def test_out_of_range(self, seq_start_zero):
        with pytest.raises(DomainError):
            diagonal_direct(seq_start_zero, 8)

    @given(st.lists(rationals, min_size=1, max_size=12))
    def test_matches_table_construction(self, values):
        table = build_table(values)
        for k in range(len(values)):
            assert diagonal_direct(values, k) == table.main_diagonal[k]


@given(
    st.lists(rationals, min_size=1, max_size=6),
    st.integers(min_value=0, max_value=4),
)
def test_polynomial_rows_go_constant_then_zero(coeffs, extra):
    # sample a polynomial at d+2+extra consecutive integers
    d = len(coeffs) - 1
    values = [
        sum(c * Fraction(x) ** j if j else c for j, c in enumerate(coeffs))
        for x in range(d + 2 + extra)
    ]
    table = build_table(values)
    row_d = table.rows[d]
    assert all(v == row_d[0] for v in row_d)
    for deeper in table.rows[d + 1 :]:
        assert all(v == 0 for v in deeper)
