import pytest

from kbskein.aideal import (
    AIdealGenerator,
    aideal_expanded_display,
    aideal_factored_expand,
    aideal_factors,
    aideal_poly,
    check_degree2_condition,
    degree2_coefficients,
    degree2_expression,
    embedded_peripheral,
    embedded_peripheral_display,
    peripheral_element,
)
from kbskein.knot_module import pi_element
from kbskein.laurent import ONE, t_pow
from kbskein.quantum_torus import QTElement, qt_is_polynomial, qt_left_mul_monomial
from kbskein.torus_skein import TorusSkein, ts_embed

P_RANGE = range(1, 6)


def test_peripheral_element_examples():
    assert peripheral_element(1) == TorusSkein({(1, -5): ONE, (1, -1): t_pow(-8, -1),
                                                (0, 5): t_pow(-3), (0, 1): t_pow(1, -1)})
    assert peripheral_element(2) == TorusSkein({(1, -7): ONE, (1, -3): t_pow(-8, -1),
                                                (0, 7): t_pow(-1), (0, 3): t_pow(3, -1)})


def test_p1_expansion_written_out():
    expect = QTElement({
        (2, 0): 1, (0, 10): t_pow(20), (2, 4): t_pow(-12, -1), (0, 6): t_pow(8, -1),
        (1, 10): t_pow(2), (1, 0): t_pow(2), (1, 6): t_pow(6, -1), (1, 4): t_pow(6, -1),
    })
    assert aideal_poly(1) == expect


def test_p1_factors():
    first, second = aideal_factors(1)
    assert first == QTElement({(1, 0): 1, (1, 4): t_pow(-4, -1), (0, 0): t_pow(2), (0, 4): t_pow(14, -1)})
    assert second == QTElement({(1, 0): 1, (0, 6): t_pow(6, -1)})


@pytest.mark.parametrize("p", P_RANGE)
def test_peripheral_element_is_killed(p):
    assert not pi_element(peripheral_element(p), p)


@pytest.mark.parametrize("p", P_RANGE)
def test_contraction(p):
    poly = aideal_poly(p)
    assert qt_is_polynomial(poly)
    assert poly == aideal_expanded_display(p) == aideal_factored_expand(p)
    assert {a for a, _ in poly.terms} == {0, 1, 2}
    assert qt_left_mul_monomial(1, 2 * p + 3, embedded_peripheral(p)).scale(t_pow(2 * p + 3)) == poly


@pytest.mark.parametrize("p", P_RANGE)
def test_pre_contraction_display(p):
    assert embedded_peripheral(p) == ts_embed(peripheral_element(p)) == embedded_peripheral_display(p)


@pytest.mark.parametrize("p", P_RANGE)
def test_intermediate_unscaled_display_exponent(p):
    # before the overall t^{2p+3}, the l^2 m^4 coefficient is -t^{-2p-15}
    unscaled = qt_left_mul_monomial(1, 2 * p + 3, embedded_peripheral(p))
    assert unscaled.coeff(2, 4) == t_pow(-2 * p - 15, -1)
    assert unscaled.coeff(2, 4) != t_pow(-2 * p - 14, -1)


@pytest.mark.parametrize("p", P_RANGE)
def test_degree2(p):
    poly = aideal_poly(p)
    assert degree2_coefficients(poly) == {0: ONE, 4: t_pow(-12, -1)}
    assert degree2_expression(poly, 0) == ONE - t_pow(-4)
    assert degree2_expression(poly, 1) == ONE - t_pow(4)
    for n in range(51):
        assert degree2_expression(poly, n) == ONE - t_pow(8 * n - 4)
    assert check_degree2_condition(p, 50)


def test_degree2_bad_input():
    with pytest.raises(ValueError):
        check_degree2_condition(1, -1)


@pytest.mark.parametrize("p", P_RANGE)
def test_generator_bundle(p):
    gen = AIdealGenerator.build(p)
    assert gen.p.p == p
    assert gen.polynomial == aideal_poly(p)
