import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from cobtqft.exact import (RationalMatrix, kron, mat_mul, perm_matrix,
                           swap_matrix)
from cobtqft.frobenius import qz5, zqs3


def assert_reduced(m):
    for v in m.entries.values():
        assert v != 0
        assert v.denominator > 0
        assert math.gcd(abs(v.numerator), v.denominator) == 1


small_fraction = st.fractions(min_value=-4, max_value=4, max_denominator=4)


@st.composite
def matrices(draw, rows=None, cols=None):
    r = rows if rows is not None else draw(st.integers(1, 4))
    c = cols if cols is not None else draw(st.integers(1, 4))
    data = draw(st.dictionaries(
        st.tuples(st.integers(0, r - 1), st.integers(0, c - 1)),
        small_fraction, max_size=r * c))
    return RationalMatrix(r, c, data)


def test_construction_drops_zeros_and_validates():
    m = RationalMatrix(2, 2, {(0, 0): F(0), (1, 1): F(2, 4)})
    assert (0, 0) not in m.entries
    assert m.get(1, 1) == F(1, 2)
    assert m.get(0, 1) == 0
    with pytest.raises(ValueError):
        RationalMatrix(2, 2, {(2, 0): F(1)})


def test_mat_mul_identity():
    m = qz5().mul
    assert mat_mul(RationalMatrix.identity(5), m) == m
    assert mat_mul(m, RationalMatrix.identity(25)) == m


def test_mat_mul_counit_unit_gives_group_order():
    q = qz5()
    assert mat_mul(q.counit, q.unit) == RationalMatrix.from_rows([[5]])


def test_mat_mul_handle_squared_closed_form():
    handle = RationalMatrix.from_rows([[3, 0, 3], [0, 6, 0], [F(3, 2), 0, F(9, 2)]])
    squared = RationalMatrix.from_rows(
        [[9, 0, 15], [0, 24, 0], [F(15, 2), 0, F(33, 2)]]).scale(F(3, 2))
    assert mat_mul(handle, handle) == squared


def test_mat_mul_shape_error_names_both_shapes():
    a = RationalMatrix(3, 9)
    b = RationalMatrix(5, 25)
    with pytest.raises(ValueError, match="3x9 by 5x25"):
        mat_mul(a, b)


def test_kron_unit_scalar():
    x = zqs3().mul
    one = RationalMatrix.from_rows([[1]])
    assert kron(one, x) == x
    assert kron(x, one) == x


def test_kron_identities():
    assert kron(RationalMatrix.identity(2), RationalMatrix.identity(3)) \
        == RationalMatrix.identity(6)


def test_kron_units_column():
    col = kron(qz5().unit, zqs3().unit)
    assert col.shape == (15, 1)
    assert col.entries == {(0, 0): F(1)}


def test_perm_matrix_identity_and_swap():
    assert perm_matrix((0, 1, 2), 2) == RationalMatrix.identity(8)
    flip = perm_matrix((1, 0), 2)
    assert flip == RationalMatrix.from_rows(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    assert flip == swap_matrix(2, 2)


def test_perm_matrix_involution():
    for d in (2, 3, 5):
        flip = perm_matrix((1, 0), d)
        assert mat_mul(flip, flip) == RationalMatrix.identity(d * d)


def test_perm_matrix_rejects_non_bijection():
    with pytest.raises(ValueError):
        perm_matrix((0, 0, 1), 2)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_mat_mul_associative(data):
    a = data.draw(matrices())
    b = data.draw(matrices(rows=a.cols))
    c = data.draw(matrices(rows=b.cols))
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_kron_mixed_product(data):
    a = data.draw(matrices())
    b = data.draw(matrices())
    c = data.draw(matrices(rows=a.cols))
    d = data.draw(matrices(rows=b.cols))
    assert mat_mul(kron(a, b), kron(c, d)) == kron(mat_mul(a, c), mat_mul(b, d))


@settings(max_examples=40, deadline=None)
@given(st.permutations(list(range(4))), st.permutations(list(range(4))),
       st.integers(1, 3))
def test_perm_matrix_composition(p, q, d):
    composed = tuple(p[q[i]] for i in range(4))
    assert mat_mul(perm_matrix(p, d), perm_matrix(q, d)) \
        == perm_matrix(composed, d)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_results_stay_reduced(data):
    a = data.draw(matrices())
    b = data.draw(matrices(rows=a.cols))
    for result in (mat_mul(a, b), kron(a, b), a.transpose(), a.scale(F(6, 4))):
        assert_reduced(result)


def test_json_round_trip_and_format():
    m = RationalMatrix(2, 3, {(0, 0): F(3, 2), (1, 2): F(-4, 2)})
    text = m.to_json()
    assert '"3/2"' in text and '"-2"' in text  # denominator 1 omitted
    assert RationalMatrix.from_json(text) == m
