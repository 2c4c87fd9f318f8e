import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from exactdet.matrix import (
    IndexOutOfRange,
    Matrix,
    ParseError,
    TooSmall,
    adjugate,
    format_matrix,
    int_matrix,
    parse_matrix,
)
from exactdet.oracle import cofactor_det
from exactdet.ring import ApproxReal, ExactInteger, ExactRational

# 4x4 with a zero-free interior; its condensation path is fully clean.
CLEAN4 = [[4, 2, 0, -3], [1, 1, 2, 2], [0, -1, 3, -1], [1, 2, 5, 1]]
# 4x4 whose first condensation attempt hits a zero divisor mid-run.
RESTART4 = [[0, 1, 0, 4], [-1, 3, 6, -3], [5, 1, 2, 0], [-2, 1, -1, 1]]


def identity(n):
    return int_matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


class TestConstruction:
    def test_shape_and_indexing(self):
        m = int_matrix(CLEAN4)
        assert (m.n_rows, m.n_cols) == (4, 4)
        assert m[2, 1] == ExactInteger(-1)

    def test_rejects_ragged(self):
        with pytest.raises(ValueError):
            int_matrix([[1, 2], [3]])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            Matrix([])

    def test_rejects_mixed_rings(self):
        with pytest.raises(TypeError):
            Matrix([[ExactInteger(1), ExactRational(1, 2)]])


class TestConnectedMinor:
    def test_upper_left_2x2(self):
        m = int_matrix(CLEAN4)
        assert m.connected_minor(0, 0, 2) == int_matrix([[4, 2], [1, 1]])

    def test_full_size_is_identity_case(self):
        m = int_matrix(CLEAN4)
        assert m.connected_minor(0, 0, 4) == m

    def test_anchored_block(self):
        m = int_matrix([[2, 1, -1, -3], [1, -2, 3, 0], [3, 1, 2, -1], [0, -2, 3, 1]])
        assert m.connected_minor(0, 0, 2) == int_matrix([[2, 1], [1, -2]])

    def test_out_of_range(self):
        m = int_matrix(CLEAN4)
        with pytest.raises(IndexOutOfRange):
            m.connected_minor(2, 2, 3)

    def test_composition(self):
        rng = random.Random(7)
        m = int_matrix([[rng.randint(-9, 9) for _ in range(6)] for _ in range(6)])
        outer = m.connected_minor(1, 2, 4)
        assert outer.connected_minor(1, 1, 2) == m.connected_minor(2, 3, 2)


class TestInterior:
    def test_clean4(self):
        assert int_matrix(CLEAN4).interior() == int_matrix([[1, 2], [-1, 3]])

    def test_3x3_stage(self):
        m = int_matrix([[2, 4, 6], [-1, 5, -8], [1, -11, 8]])
        assert m.interior() == int_matrix([[5]])

    def test_identity(self):
        assert identity(3).interior() == int_matrix([[1]])

    def test_too_small(self):
        with pytest.raises(TooSmall):
            int_matrix([[1, 2], [3, 4]]).interior()

    def test_interior_of_full_minor(self):
        m = int_matrix(CLEAN4)
        assert m.connected_minor(0, 0, 4).interior() == m.interior()


class TestDeleteRowCol:
    def test_2x2(self):
        m = int_matrix([[1, 2], [3, 4]])
        assert m.delete_row_col(0, 0) == int_matrix([[4]])

    def test_clean4_corner(self):
        # read off by hand from CLEAN4, checked against a slicing oracle
        rows = [r[1:] for k, r in enumerate(CLEAN4) if k != 0]
        assert rows == [[1, 2, 2], [-1, 3, -1], [2, 5, 1]]
        assert int_matrix(CLEAN4).delete_row_col(0, 0) == int_matrix(rows)

    def test_identity(self):
        assert identity(3).delete_row_col(1, 1) == identity(2)


class TestAdjugate:
    def test_2x2_formula(self):
        m = int_matrix([[1, 2], [3, 4]])
        assert adjugate(m, cofactor_det) == int_matrix([[4, -3], [-2, 1]])

    def test_identity(self):
        assert adjugate(identity(3), cofactor_det) == identity(3)

    def test_corner_identity_value(self):
        adj = adjugate(int_matrix(CLEAN4), cofactor_det)
        corner = adj[0, 0] * adj[3, 3] - adj[0, 3] * adj[3, 0]
        assert corner == ExactInteger(-410)


class TestRowColOps:
    def test_rotation_moves_first_row_to_bottom(self):
        m = int_matrix(RESTART4)
        b = m.swap_rows(0, 1).swap_rows(1, 2).swap_rows(2, 3)
        assert b == int_matrix(
            [[-1, 3, 6, -3], [5, 1, 2, 0], [-2, 1, -1, 1], [0, 1, 0, 4]]
        )

    def test_swap_is_involution(self):
        m = int_matrix(CLEAN4)
        assert m.swap_rows(1, 3).swap_rows(1, 3) == m
        assert m.swap_cols(0, 2).swap_cols(0, 2) == m

    def test_single_row_matrix_rejects_swap(self):
        with pytest.raises(IndexOutOfRange):
            int_matrix([[1, 2]]).swap_rows(0, 1)
        with pytest.raises(IndexOutOfRange):
            int_matrix(CLEAN4).swap_rows(2, 2)

    def test_add_zero_row_is_identity(self):
        m = int_matrix(CLEAN4)
        assert m.add_scaled_row(0, 1, ExactInteger(0)) == m

    def test_add_row_example(self):
        m = int_matrix([[1, 0], [0, 1]])
        out = m.add_scaled_row(0, 1, ExactInteger(1))
        assert out == int_matrix([[1, 0], [1, 1]])
        assert cofactor_det(out) == ExactInteger(1)


entry = st.integers(min_value=-9, max_value=9)


def square(n):
    return st.lists(
        st.lists(entry, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(int_matrix)


@given(m=square(4), src=st.integers(0, 3), dst=st.integers(0, 3), c=entry)
def test_det_invariant_under_add_scaled_row(m, src, dst, c):
    if src == dst:
        dst = (dst + 1) % 4
    out = m.add_scaled_row(src, dst, ExactInteger(c))
    assert cofactor_det(out) == cofactor_det(m)


@given(m=square(4), i=st.integers(0, 3), j=st.integers(0, 3))
def test_det_negated_under_swap(m, i, j):
    if i == j:
        j = (j + 1) % 4
    assert cofactor_det(m.swap_rows(i, j)) == -cofactor_det(m)
    assert cofactor_det(m.swap_cols(i, j)) == -cofactor_det(m)


@pytest.mark.parametrize("n", [3, 5, 6])
def test_det_invariance_seeded(n):
    rng = random.Random(n * 31)
    for _ in range(5):
        m = int_matrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        d = cofactor_det(m)
        i, j = 0, n - 1
        assert cofactor_det(m.swap_rows(i, j)) == -d
        assert cofactor_det(m.add_scaled_row(i, j, ExactInteger(rng.randint(-3, 3)))) == d


class TestTextFormat:
    def test_headerless(self):
        m = parse_matrix("1 2\n3 4\n5 6\n")
        assert m == int_matrix([[1, 2], [3, 4], [5, 6]])

    def test_header_and_comments(self):
        text = "# comment\n2 3\n1 2 3\n4 5 6  # trailing\n"
        m = parse_matrix(text)
        assert (m.n_rows, m.n_cols) == (2, 3)

    def test_header_reflows_tokens(self):
        m = parse_matrix("2 2\n1 2 3 4\n")
        assert m == int_matrix([[1, 2], [3, 4]])

    def test_rational_promotion(self):
        m = parse_matrix("1/2 3\n4 5\n")
        assert all(isinstance(e, ExactRational) for r in m.rows() for e in r)
        assert m[0, 1] == ExactRational(3)

    def test_real_inference(self):
        m = parse_matrix("1.5 0\n2 -3e0\n")
        assert all(isinstance(e, ApproxReal) for r in m.rows() for e in r)

    def test_mixing_rational_and_real_rejected(self):
        with pytest.raises(ParseError):
            parse_matrix("1/2 2.5\n1 1\n")

    def test_ragged_rejected(self):
        with pytest.raises(ParseError):
            parse_matrix("1 2\n3\n")

    def test_bad_token_names_line(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_matrix("1 2\n3 oops\n")

    def test_empty_rejected(self):
        with pytest.raises(ParseError):
            parse_matrix("# nothing here\n")

    @pytest.mark.parametrize(
        "rows",
        [
            [[1, 2], [3, 4]],
            [[7]],
            CLEAN4,
        ],
    )
    def test_round_trip_integers(self, rows):
        m = int_matrix(rows)
        assert parse_matrix(format_matrix(m)) == m

    def test_round_trip_rationals(self):
        m = Matrix([[ExactRational(1, 3), ExactRational(2)],
                    [ExactRational(-5, 7), ExactRational(0)]])
        assert parse_matrix(format_matrix(m)) == m

    def test_round_trip_reals(self):
        m = Matrix([[ApproxReal(1.25), ApproxReal(-3.5e-3)],
                    [ApproxReal(0.0), ApproxReal(7.0)]])
        assert parse_matrix(format_matrix(m)) == m
