from hypothesis import given
from hypothesis import strategies as st

from kbskein.laurent import t_pow
from kbskein.quantum_torus import IDENTITY, L, M, QTElement, qt_is_polynomial, qt_left_mul_monomial, qt_mul

elements = st.dictionaries(
    st.tuples(st.integers(-6, 6), st.integers(-6, 6)),
    st.tuples(st.integers(-4, 4), st.integers(-3, 3)).map(lambda ec: t_pow(*ec)),
    max_size=4,
).map(QTElement)


def test_exchange_rule():
    assert qt_mul(M, L) == QTElement.monomial(1, 1, t_pow(-2))
    assert qt_mul(L, M) == qt_mul(M, L).scale(t_pow(2))


def test_monomial_products():
    assert qt_mul(QTElement.monomial(2, 1), QTElement.monomial(1, 1)) == QTElement.monomial(3, 2, t_pow(-2))
    assert qt_left_mul_monomial(1, 3, QTElement.monomial(-1, -3)) == QTElement.monomial(0, 0, t_pow(6))


def test_polynomial_membership():
    assert qt_is_polynomial(QTElement.monomial(2, 4))
    assert not qt_is_polynomial(QTElement.monomial(-1, 1))
    assert qt_is_polynomial(QTElement())


@given(elements)
def test_identity(x):
    assert qt_mul(IDENTITY, x) == x == qt_mul(x, IDENTITY)
    assert qt_left_mul_monomial(0, 0, x) == x


@given(elements, elements, elements)
def test_associativity(a, b, c):
    assert qt_mul(qt_mul(a, b), c) == qt_mul(a, qt_mul(b, c))


@given(st.lists(st.sampled_from([L, M, QTElement.monomial(-1, 0), QTElement.monomial(0, -1)]),
                min_size=2, max_size=4))
def test_association_orders_agree(gens):
    left = gens[0]
    for g in gens[1:]:
        left = qt_mul(left, g)
    right = gens[-1]
    for g in reversed(gens[:-1]):
        right = qt_mul(g, right)
    assert left == right


@given(elements, st.integers(-4, 4), st.integers(-4, 4))
def test_left_mul_monomial_matches_product(x, a, b):
    assert qt_left_mul_monomial(a, b, x) == qt_mul(QTElement.monomial(a, b), x)


@given(elements)
def test_json_round_trip(x):
    assert QTElement.from_json(x.to_json()) == x
