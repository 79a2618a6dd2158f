import pytest
from hypothesis import given
from hypothesis import strategies as st

from kbskein.chebyshev import (
    UNI_ONE,
    UniPoly,
    X,
    alternating_even_sum_identity,
    alternating_sum_quotient_identity,
    cheb_S,
    cheb_T,
    from_s_basis,
    power_to_s,
    s_basis_expand,
    s_index,
    s_product,
    x_times_even_T_identity,
)
from kbskein.laurent import t_pow


def up(*coeffs):
    return UniPoly(dict(enumerate(coeffs)))


def test_T_values():
    assert cheb_T(0) == up(2)
    assert cheb_T(1) == X
    assert cheb_T(2) == up(-2, 0, 1)
    assert cheb_T(-3) == up(0, -3, 0, 1)


def test_S_values():
    assert cheb_S(0) == UNI_ONE
    assert cheb_S(2) == up(-1, 0, 1)
    assert cheb_S(-1) == UniPoly()
    assert cheb_S(-4) == -up(-1, 0, 1)
    assert cheb_S(3) == up(0, -2, 0, 1)


def test_s_basis_examples():
    assert s_basis_expand(up(0, 0, 1)) == {0: 1, 2: 1}
    assert s_basis_expand(up(0, -2, 0, 1)) == {3: 1}
    assert s_basis_expand(up(2)) == {0: 2}
    assert power_to_s(3) == ((1, 2), (3, 1))


def test_s_index():
    assert s_index(-1) is None
    assert s_index(4) == (1, 4)
    assert s_index(-4) == (-1, 2)
    assert s_index(-2) == (-1, 0)


@pytest.mark.parametrize("n", range(-10, 31))
def test_recurrences(n):
    assert cheb_S(n).mul_x() == cheb_S(n + 1) + cheb_S(n - 1)
    assert cheb_T(n).mul_x() == cheb_T(n + 1) + cheb_T(n - 1)
    assert cheb_T(n) == cheb_S(n) - cheb_S(n - 2)


@pytest.mark.parametrize("m", range(21))
def test_alternating_even_sum(m):
    lhs, rhs = alternating_even_sum_identity(m)
    assert lhs == rhs


@pytest.mark.parametrize("p", range(2, 21))
def test_alternating_sum_quotient(p):
    lhs, rhs = alternating_sum_quotient_identity(p)
    assert lhs == rhs


@pytest.mark.parametrize("p", range(1, 21))
def test_x_times_even_T(p):
    a, b, c = x_times_even_T_identity(p)
    assert a == b == c


@given(st.integers(0, 15), st.integers(0, 15))
def test_clebsch_gordan_product(a, b):
    total = UniPoly()
    for c in s_product(a, b):
        total = total + cheb_S(c)
    assert total == cheb_S(a) * cheb_S(b)


@given(st.dictionaries(st.integers(0, 30), st.integers(-9, 9).map(lambda e: t_pow(e, 3)), max_size=6))
def test_s_basis_round_trip(coeffs):
    p = UniPoly(coeffs)
    assert from_s_basis(s_basis_expand(p)) == p
