import pytest
from hypothesis import given, strategies as st

from akfock.exactmath import (
    LaurentPolynomial as LP,
    NonDivisibleError,
    bar,
    eval_at_one,
    exact_divide,
    q_binomial,
    q_factorial,
    q_integer,
)

q = LP.q()
qi = LP.monomial(-1)

polys = st.dictionaries(st.integers(-6, 6), st.integers(-20, 20), max_size=6).map(LP)
nonzero = st.dictionaries(
    st.integers(-6, 6), st.integers(-20, 20).filter(bool), min_size=1, max_size=6
).map(LP)


def test_addition_examples():
    assert q + qi == LP({1: 1, -1: 1})
    assert (q + 1) + (-q - 1) == LP.zero()
    assert (q**2 + 3) + q**2 == LP({2: 2, 0: 3})
    assert (q + 1) + (-q - 1) == 0


def test_multiplication_examples():
    assert (q + qi) * (q - qi) == q**2 - qi**2
    assert (q**3 - 7) * LP.zero() == 0
    assert (q + qi) ** 2 == q**2 + 2 + qi**2


def test_bar_examples():
    assert bar(q**2 + 3) == qi**2 + 3
    assert bar(q + qi) == q + qi
    assert bar(LP.zero()) == 0


def test_q_integers():
    assert q_integer(0) == 0
    assert q_integer(1) == 1
    assert q_integer(2) == q + qi
    with pytest.raises(ValueError):
        q_integer(-2)
    assert q_factorial(0) == 1
    assert q_factorial(2) == q + qi
    # oracle: convolve coefficient lists by hand
    a = [1, 0, 1]  # q^-1 .. q
    b = [1, 0, 1, 0, 1]  # q^-2 .. q^2
    conv = [0] * 7
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            conv[i + j] += x * y
    assert q_factorial(3) == LP({k - 3: c for k, c in enumerate(conv)})


def test_q_binomial():
    assert q_binomial(4, 2) == q**4 + q**2 + 2 + qi**2 + qi**4
    assert q_binomial(5, 0) == 1
    assert q_binomial(3, 4) == 0


def test_exact_divide_examples():
    assert exact_divide(q**2 - qi**2, q + qi) == q - qi
    assert exact_divide(LP.zero(), q) == 0
    with pytest.raises(NonDivisibleError):
        exact_divide(q + 1, q + qi)
    with pytest.raises(ZeroDivisionError):
        exact_divide(q, LP.zero())


def test_eval_examples():
    assert eval_at_one(q + qi) == 2
    assert eval_at_one(LP.zero()) == 0
    assert eval_at_one(q**3 - 2 * q + 5) == 4


def test_text_form():
    assert str(q**2 + 2 + qi**2) == "q^2 + 2 + q^-2"
    assert str(LP.zero()) == "0"
    assert str(-q) == "-q"
    assert str(3 * qi - 1) == "-1 + 3q^-1"


@given(polys)
def test_bar_involution(p):
    assert bar(bar(p)) == p


@given(polys, polys)
def test_bar_is_multiplicative(p, r):
    assert bar(p * r) == bar(p) * bar(r)


@given(st.integers(0, 12))
def test_q_numbers_bar_symmetric(j):
    assert q_integer(j).is_bar_symmetric()
    assert q_factorial(j).is_bar_symmetric()
    assert eval_at_one(q_factorial(j)) == [1, 1, 2, 6, 24, 120, 720, 5040, 40320,
                                           362880, 3628800, 39916800, 479001600][j]


@given(polys, nonzero)
def test_divide_round_trip(p, r):
    assert exact_divide(p * r, r) == p


@given(polys, polys)
def test_eval_multiplicative(p, r):
    assert eval_at_one(p * r) == eval_at_one(p) * eval_at_one(r)


@given(polys)
def test_parse_inverts_str(p):
    assert LP.parse(str(p)) == p


@given(polys)
def test_symmetric_completion(p):
    s = p.symmetric_completion()
    assert s.is_bar_symmetric()
    # p - s keeps nothing at exponents <= 0
    assert all(k > 0 for k in (p - s).coefficients)
