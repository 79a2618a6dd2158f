"""A peripheral-ideal element of the (2, 2p+1)-torus knot and its A-ideal polynomial."""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPolynomial
from .knot_module import TorusKnotParam, _as_p
from .laurent import ONE, ZERO, LaurentPoly, t_pow
from .quantum_torus import QTElement, qt_is_polynomial, qt_left_mul_monomial
from .torus_skein import TorusSkein, ts_embed


def peripheral_element(p) -> TorusSkein:
    """``(1,-2p-3) - t^-8 (1,-2p+1) + t^{2p-5} (0,2p+3) - t^{2p-1} (0,2p-1)``."""
    p = _as_p(p)
    return TorusSkein({
        (1, -2 * p - 3): ONE,
        (1, -2 * p + 1): t_pow(-8, -1),
        (0, 2 * p + 3): t_pow(2 * p - 5),
        (0, 2 * p - 1): t_pow(2 * p - 1, -1),
    })


def embedded_peripheral(p) -> QTElement:
    """Image of :func:`peripheral_element` in the quantum torus (before contraction)."""
    return ts_embed(peripheral_element(p))


def embedded_peripheral_display(p) -> QTElement:
    """The eight-term quantum-torus element written out monomial by monomial."""
    p = _as_p(p)
    q = 2 * p
    return QTElement({
        (1, -q - 3): t_pow(q + 3),
        (-1, q + 3): t_pow(q + 3),
        (1, -q + 1): t_pow(q - 9, -1),
        (-1, q - 1): t_pow(q - 9, -1),
        (0, q + 3): t_pow(q - 5),
        (0, -q - 3): t_pow(q - 5),
        (0, q - 1): t_pow(q - 1, -1),
        (0, -q + 1): t_pow(q - 1, -1),
    })


def aideal_poly(p) -> QTElement:
    """``t^{2p+3} * l m^{2p+3} * embed(peripheral_element(p))``, checked to lie in ``C_t[l, m]``."""
    p = _as_p(p)
    poly = qt_left_mul_monomial(1, 2 * p + 3, embedded_peripheral(p)).scale(t_pow(2 * p + 3))
    if not qt_is_polynomial(poly):
        raise NotPolynomial(f"contraction left negative exponents: {poly}")
    return poly


def aideal_expanded_display(p) -> QTElement:
    """The eight-term expansion of the A-ideal polynomial, entered term by term."""
    p = _as_p(p)
    return QTElement({
        (2, 0): ONE,
        (0, 4 * p + 6): t_pow(8 * p + 12),
        (2, 4): t_pow(-12, -1),
        (0, 4 * p + 2): t_pow(8 * p, -1),
        (1, 4 * p + 6): t_pow(4 * p - 2),
        (1, 0): t_pow(4 * p - 2),
        (1, 4 * p + 2): t_pow(4 * p + 2, -1),
        (1, 4): t_pow(4 * p + 2, -1),
    })


def aideal_factors(p) -> tuple[QTElement, QTElement]:
    """``(l - t^-4 l m^4 + t^{4p-2} - t^{4p+10} m^4)`` and ``(l - t^{4p+2} m^{4p+2})``."""
    p = _as_p(p)
    first = QTElement({
        (1, 0): ONE,
        (1, 4): t_pow(-4, -1),
        (0, 0): t_pow(4 * p - 2),
        (0, 4): t_pow(4 * p + 10, -1),
    })
    second = QTElement({(1, 0): ONE, (0, 4 * p + 2): t_pow(4 * p + 2, -1)})
    return first, second


def aideal_factored_expand(p) -> QTElement:
    first, second = aideal_factors(p)
    return first * second


def degree2_coefficients(poly: QTElement) -> dict[int, LaurentPoly]:
    """``gamma_{2,q}``: coefficients of ``l^2 m^q``."""
    return {b: c for (a, b), c in poly.terms.items() if a == 2}


def degree2_expression(poly: QTElement, n: int) -> LaurentPoly:
    """``sum_q gamma_{2,q} (-1)^q t^{(2n+2)q}``."""
    total = ZERO
    for q, c in degree2_coefficients(poly).items():
        total = total + c.shift((2 * n + 2) * q) * (-1) ** (q % 2)
    return total


def check_degree2_condition(p, n_max: int) -> bool:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    poly = aideal_poly(p)
    return all(degree2_expression(poly, n) for n in range(n_max + 1))


@dataclass(frozen=True)
class AIdealGenerator:
    p: TorusKnotParam
    peripheral: TorusSkein
    polynomial: QTElement
    factored_parts: tuple[QTElement, QTElement]

    @classmethod
    def build(cls, p) -> "AIdealGenerator":
        p = _as_p(p)
        gen = cls(TorusKnotParam(p), peripheral_element(p), aideal_poly(p), aideal_factors(p))
        first, second = gen.factored_parts
        if first * second != gen.polynomial:
            raise NotPolynomial("factored form does not multiply back to the contracted element")
        return gen
