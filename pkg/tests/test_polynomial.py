import pytest
from hypothesis import given
from hypothesis import strategies as st

from visipoly.polynomial import Polynomial, binomial_expand, poly_add, poly_eval_int, poly_mul

polys = st.lists(st.integers(min_value=0, max_value=10**6), min_size=1, max_size=8).map(Polynomial)


def pascal_row(k):
    row = [1]
    for _ in range(k):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


def test_add_examples():
    assert poly_add(Polynomial([1, 2]), Polynomial([0, 1])) == Polynomial([1, 3])
    p = Polynomial([4, 0, 2])
    assert p + Polynomial([0]) == p
    wheel8 = binomial_expand(7) + Polynomial([0, 1, 7, 14])
    assert wheel8.coeffs == (1, 8, 28, 49, 35, 21, 7, 1)


def test_mul_examples():
    one_x = Polynomial([1, 1])
    assert poly_mul(one_x, one_x) == Polynomial([1, 2, 1])
    p = Polynomial([3, 0, 5])
    assert p * Polynomial([1]) == p
    sq = one_x * one_x
    assert (sq * sq).coeffs == tuple(pascal_row(4))


@pytest.mark.parametrize("k", range(0, 40))
def test_binomial_matches_pascal(k):
    assert binomial_expand(k).coeffs == tuple(pascal_row(k))
    assert binomial_expand(k)(1) == 2**k


def test_binomial_small():
    assert binomial_expand(0).coeffs == (1,)
    assert binomial_expand(2).coeffs == (1, 2, 1)
    assert binomial_expand(7).coeffs == (1, 7, 21, 35, 35, 21, 7, 1)


def test_big_coefficients():
    assert binomial_expand(63)[31] == 916312070471295267


def test_eval():
    assert poly_eval_int(Polynomial([1, 3, 3, 1]), 1) == 8
    assert poly_eval_int(Polynomial([7, 3, 3, 1]), 0) == 7
    assert poly_eval_int(Polynomial([1, 2]), 10) == 21


def test_canonical_form():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).coeffs == (0,)
    assert Polynomial([]).coeffs == (0,)
    assert Polynomial([0]).degree == -1
    with pytest.raises(ValueError):
        Polynomial([1, -1])


def test_renderings():
    p = binomial_expand(7) + Polynomial([0, 1, 7, 14])
    assert p.to_human() == "1 + 8x + 28x^2 + 49x^3 + 35x^4 + 21x^5 + 7x^6 + x^7"
    assert p.to_latex().startswith("1 + 8x + 28x^{2}")
    assert Polynomial([0]).to_human() == "0"
    assert p.to_json_obj()["coeffs"][3] == "49"
    assert Polynomial.from_json(p.to_json()) == p


def test_immutable():
    p = Polynomial([1])
    with pytest.raises(AttributeError):
        p.coeffs = (2,)


@given(polys, polys)
def test_commutative(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(polys, polys, polys)
def test_associative_distributive(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
def test_degree_of_product(a, b):
    if not a.is_zero() and not b.is_zero():
        assert (a * b).degree == a.degree + b.degree


@given(polys, st.integers(0, 5))
def test_eval_homomorphism(a, t):
    b = Polynomial([2, 1])
    assert (a * b)(t) == a(t) * b(t)
    assert (a + b)(t) == a(t) + b(t)
