import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilcert.matcore import (
    ComplexMatrix,
    OrderMismatchError,
    adjoint,
    cartesian_decompose,
    frobenius_norm,
    identity,
    is_zero,
    matrix_power,
    multiply,
    trace,
    zero,
)
from nilcert import gallery

EPS = 2.0**-52


def mat(rows):
    return ComplexMatrix(rows)


finite = st.floats(
    min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False
)


@st.composite
def matrices(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    data = draw(
        st.lists(
            st.lists(st.tuples(finite, finite), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
    return ComplexMatrix([[complex(re, im) for re, im in row] for row in data])


class TestConstruction:
    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            ComplexMatrix([[1, 2, 3], [4, 5, 6]])

    def test_rejects_nan(self):
        with pytest.raises(ValueError, match="finite"):
            ComplexMatrix([[float("nan")]])

    def test_rejects_inf_imag(self):
        with pytest.raises(ValueError, match="finite"):
            ComplexMatrix([[complex(0, float("inf"))]])

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            ComplexMatrix(np.zeros((0, 0)))

    def test_entries_are_frozen(self):
        m = mat([[1, 2], [3, 4]])
        with pytest.raises(ValueError):
            m.array[0, 0] = 9


class TestAdjoint:
    def test_real_transpose(self):
        assert np.array_equal(
            adjoint(mat([[0, 1], [0, 0]])).array, np.array([[0, 0], [1, 0]])
        )

    def test_conjugates(self):
        assert adjoint(mat([[1j]]))[0, 0] == -1j

    def test_involution_on_gallery(self):
        t = gallery.get("example_pp").matrix
        assert np.array_equal(adjoint(adjoint(t)).array, t.array)

    @given(matrices())
    @settings(max_examples=50, deadline=None)
    def test_involution(self, m):
        assert np.array_equal(adjoint(adjoint(m)).array, m.array)


class TestMultiplyTracePower:
    def test_identity_neutral(self):
        t = gallery.get("strict_upper4").matrix
        assert np.array_equal(multiply(identity(4), t).array, t.array)

    def test_jordan_block_squares_to_zero(self):
        j = mat([[0, 1], [0, 0]])
        assert np.array_equal(multiply(j, j).array, np.zeros((2, 2)))

    def test_example_pp_cubes_to_zero(self):
        t = gallery.get("example_pp").matrix
        cubed = matrix_power(t, 3)
        assert frobenius_norm(cubed) == 0.0
        assert frobenius_norm(matrix_power(t, 2)) > 0

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatchError):
            multiply(identity(2), identity(3))

    def test_trace_example_pp(self):
        assert trace(gallery.get("example_pp").matrix) == 0

    def test_trace_diag(self):
        assert trace(mat(np.diag([0, 3, -2, -1.0]))) == 0
        assert trace(identity(3)) == 3

    def test_power_zero_gives_identity(self):
        t = gallery.get("example_pp").matrix
        assert np.array_equal(matrix_power(t, 0).array, np.eye(4))

    def test_strict_upper4_powers(self):
        t = gallery.get("strict_upper4").matrix
        assert frobenius_norm(matrix_power(t, 4)) == 0.0
        assert matrix_power(t, 3)[0, 3] == 10  # superdiagonal product 1*2*5

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            matrix_power(identity(2), -1)

    @given(matrices(max_n=4), matrices(max_n=4))
    @settings(max_examples=50, deadline=None)
    def test_trace_cyclic(self, x, y):
        if x.n != y.n:
            return
        lhs = trace(multiply(x, y))
        rhs = trace(multiply(y, x))
        bound = 8 * EPS * frobenius_norm(x) * frobenius_norm(y)
        assert abs(lhs - rhs) <= bound


class TestFrobeniusNorm:
    def test_zero_matrix(self):
        assert frobenius_norm(zero(3)) == 0.0

    def test_single_entry(self):
        assert frobenius_norm(mat([[0, 1], [0, 0]])) == 1.0

    def test_identity4(self):
        assert frobenius_norm(identity(4)) == 2.0

    def test_no_underflow_for_tiny_entries(self):
        # sum-of-squares would underflow to zero here
        m = mat(np.full((4, 4), 1e-200))
        assert frobenius_norm(m) == pytest.approx(4e-200, rel=1e-12)

    def test_no_overflow_for_huge_entries(self):
        m = mat(np.full((2, 2), 1e200))
        assert frobenius_norm(m) == pytest.approx(2e200, rel=1e-12)

    def test_zero_iff_all_entries_zero(self):
        m = mat([[0, 0], [0, 5e-324]])
        assert frobenius_norm(m) > 0


class TestCartesianDecomposition:
    def test_jordan2_real_part(self):
        dec = cartesian_decompose(mat([[0, 1], [0, 0]]))
        assert np.array_equal(dec.re_part.array, np.array([[0, 0.5], [0.5, 0]]))
        assert np.array_equal(dec.im_part.array, np.array([[0, -0.5j], [0.5j, 0]]))

    def test_hermitian_input_is_its_own_real_part(self):
        h = mat([[2, 1 + 1j], [1 - 1j, -3]])
        dec = cartesian_decompose(h)
        assert np.allclose(dec.re_part.array, h.array, atol=0)
        assert frobenius_norm(dec.im_part) == 0.0

    def test_skew_input(self):
        h = np.array([[2, 1 + 1j], [1 - 1j, -3]])
        dec = cartesian_decompose(ComplexMatrix(1j * h))
        assert frobenius_norm(dec.re_part) == 0.0
        assert np.allclose(dec.im_part.array, h, atol=0)

    @given(matrices())
    @settings(max_examples=75, deadline=None)
    def test_parts_exactly_hermitian_and_reconstruct(self, m):
        dec = cartesian_decompose(m)
        a, b = dec.re_part, dec.im_part
        assert frobenius_norm(ComplexMatrix(a.array - a.array.conj().T)) == 0.0
        assert frobenius_norm(ComplexMatrix(b.array - b.array.conj().T)) == 0.0
        resid = (a.array + 1j * b.array) - m.array
        assert frobenius_norm(ComplexMatrix(resid)) <= 4 * EPS * max(
            1.0, frobenius_norm(m)
        )

    @given(matrices())
    @settings(max_examples=50, deadline=None)
    def test_hermitian_parts_have_real_trace(self, m):
        dec = cartesian_decompose(m)
        assert trace(dec.re_part).imag == 0.0
        assert trace(dec.im_part).imag == 0.0


class TestIsZero:
    def test_exact_zero(self):
        assert is_zero(zero(2), 0.0)

    def test_jordan2_not_zero(self):
        assert not is_zero(mat([[0, 1], [0, 0]]), 1e-12)

    def test_reconstruction_residual_is_zero(self):
        t = gallery.get("example_pp").matrix
        dec = cartesian_decompose(t)
        resid = ComplexMatrix(dec.re_part.array + 1j * dec.im_part.array - t.array)
        assert is_zero(resid, 1e-12 * (1 + frobenius_norm(t)))

    def test_rejects_negative_tol(self):
        with pytest.raises(ValueError):
            is_zero(zero(2), -1.0)
