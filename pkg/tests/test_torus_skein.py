import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kbskein.chebyshev import cheb_T
from kbskein.laurent import ONE, t_pow
from kbskein.quantum_torus import QTElement
from kbskein.torus_skein import TorusSkein, det, normalize, ts_embed, ts_mul

B = TorusSkein.basis

coeffs = st.tuples(st.integers(-3, 3), st.sampled_from([1, -1, 2])).map(lambda ec: t_pow(*ec))
skeins = st.builds(
    TorusSkein,
    st.dictionaries(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), coeffs, min_size=1, max_size=3),
    st.sampled_from([0, 1, -2]),
)


def test_normalize():
    assert normalize(-1, 3) == (1, -3)
    assert normalize(0, -2) == (0, 2)
    assert normalize(2, -1) == (2, -1)
    assert det(1, 0, 0, 1) == 1


def test_zero_zero_is_scalar_two():
    s = B(0, 0)
    assert s.terms == {} and s.scalar == 2


def test_product_examples():
    assert ts_mul(B(1, 0), B(0, 1)) == TorusSkein({(1, 1): t_pow(1), (1, -1): t_pow(-1)})
    assert ts_mul(B(1, 1), B(1, 1)) == TorusSkein({(2, 2): ONE}, 2)


@pytest.mark.parametrize("k", range(-5, 6))
def test_meridian_times_longitude_curve(k):
    assert ts_mul(B(0, 1), B(1, k)) == TorusSkein({(1, k + 1): t_pow(-1), (1, k - 1): t_pow(1)})


def test_embed_examples():
    assert ts_embed(B(1, 0)) == QTElement({(1, 0): 1, (-1, 0): 1})
    assert ts_embed(B(1, 1)) == QTElement({(1, 1): t_pow(-1), (-1, -1): t_pow(-1)})
    assert ts_embed(TorusSkein.const(2)) == QTElement({(0, 0): 2})


def test_algebra_is_not_commutative():
    ab = ts_mul(B(1, 0), B(0, 1))
    ba = ts_mul(B(0, 1), B(1, 0))
    assert ab != ba
    assert ab - ba == TorusSkein({(1, 1): t_pow(1) - t_pow(-1), (1, -1): t_pow(-1) - t_pow(1)})


@pytest.mark.parametrize("n", range(13))
def test_T_n_of_the_longitude(n):
    acc = TorusSkein()
    power = TorusSkein.const(1)
    for j in range(cheb_T(n).degree() + 1):
        acc = acc + power.scale(cheb_T(n).coeff(j))
        power = ts_mul(power, B(1, 0))
    assert acc == B(n, 0)


@given(skeins, skeins, skeins)
@settings(max_examples=100)
def test_associative_and_distributive(a, b, c):
    assert ts_mul(ts_mul(a, b), c) == ts_mul(a, ts_mul(b, c))
    assert ts_mul(a, b + c) == ts_mul(a, b) + ts_mul(a, c)


@given(skeins, skeins)
@settings(max_examples=100)
def test_reversed_product_conjugates_structure_constants(a, b):
    assert ts_mul(b, a) == ts_mul(a.invert_t(), b.invert_t()).invert_t()


@given(skeins, skeins)
@settings(max_examples=100)
def test_embedding_is_homomorphism(a, b):
    assert ts_embed(ts_mul(a, b)) == ts_embed(a) * ts_embed(b)


@given(skeins)
def test_json_round_trip(a):
    assert TorusSkein.from_json(a.to_json()) == a
