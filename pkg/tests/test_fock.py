import itertools

import pytest

from akfock.combinat import (
    ChargeParams,
    Node,
    add_node,
    addable_nodes,
    enumerate_multipartitions,
    removable_nodes,
)
from akfock.exactmath import LaurentPolynomial as LP, q_integer
from akfock.fock import (
    FockVector,
    InvalidPairError,
    OrderKind,
    apply_divided_f,
    apply_e,
    apply_f,
    e_terms,
    f_terms,
    is_below,
    n_above,
    n_below,
    n_total,
    n_zero_nodes,
    weight_exponents,
)

AM, FLOTW = OrderKind.AM, OrderKind.FLOTW
P2 = ChargeParams(2, (0,))
P340 = ChargeParams(4, (0, 2, 3))
q = LP.q()


def _params(d_max, es):
    for e in es:
        for d in range(1, d_max + 1):
            for v in itertools.combinations_with_replacement(range(e), d):
                yield ChargeParams(e, v)


def _signed_q_integer(k):
    return q_integer(k) if k >= 0 else -q_integer(-k)


def test_statistic_examples():
    for order in OrderKind:
        assert n_above(((),), ((1,),), 0, order, P2) == 0
        assert n_below(((),), ((1,),), 0, order, P2) == 0
    assert n_below(((1,),), ((1, 1),), 1, AM, P2) == 1
    assert n_below(((1,),), ((2,),), 1, AM, P2) == 0
    # (2,1) is an addable 1-node of (1) sitting above (1,2)
    assert n_above(((1,),), ((2,),), 1, AM, P2) == 1
    with pytest.raises(InvalidPairError):
        n_above(((1,),), ((3,),), 1, AM, P2)
    with pytest.raises(InvalidPairError):
        n_above(((1,),), ((2,),), 0, AM, P2)


def test_statistic_against_enumeration():
    lam = ((), (2, 1), (1, 1, 1))
    for g in addable_nodes(lam, 0, P340) + addable_nodes(lam, 3, P340):
        i = P340.residue(g)
        mu = add_node(lam, g)
        above = lambda h: is_below(g, h, FLOTW, P340)  # noqa: E731
        want = sum(map(above, addable_nodes(lam, i, P340))) - sum(
            map(above, (h for h in removable_nodes(mu, i, P340) if h != g))
        )
        assert n_above(lam, mu, i, FLOTW, P340) == want


def test_totals():
    assert n_total(((),), 0, P2) == 1
    assert n_total(((1,),), 1, P2) == 2
    assert n_total(((1,),), 0, P2) == -1
    assert n_zero_nodes(((),), P2) == 0
    assert n_zero_nodes(((1,), (3, 1), (2, 1, 1)), P340) == 3
    assert n_zero_nodes(((2,),), P2) == 1
    assert weight_exponents(((),), P2) == ((1, 0), 0)
    assert weight_exponents(((1,),), P2) == ((-1, 2), 1)
    assert weight_exponents(((1,), (3, 1), (2, 1, 1)), P340)[1] == 3


def test_action_examples():
    empty = FockVector.vacuum(1)
    for order in OrderKind:
        assert apply_f(0, empty, order, P2) == FockVector.basis(((1,),))
        assert apply_f(1, FockVector(), order, P2) == FockVector()
        for i in range(2):
            assert apply_e(i, empty, order, P2) == FockVector()
        assert apply_e(0, FockVector.basis(((1,),)), order, P2) == empty
    assert apply_f(1, FockVector.basis(((1,),)), AM, P2) == FockVector(
        {((2,),): LP.one(), ((1, 1),): q}
    )
    assert apply_e(1, FockVector.basis(((2,),)), AM, P2) == FockVector(
        {((1,),): LP.monomial(-1)}
    )


def test_divided_power_examples():
    x = FockVector.basis(((1,), (1,)))
    p00 = ChargeParams(2, (0, 0))
    assert apply_divided_f(1, 1, x, AM, p00) == apply_f(1, x, AM, p00)
    two = apply_divided_f(1, 2, x, AM, p00)
    assert two.scale(q + LP.monomial(-1)) == apply_f(1, apply_f(1, x, AM, p00), AM, p00)
    assert apply_divided_f(0, 2, FockVector.vacuum(1), AM, P2) == FockVector()


@pytest.mark.parametrize("order", list(OrderKind), ids=lambda o: o.value)
def test_literal_statistics_match_fast_tables(order):
    for params in _params(2, (2, 3)):
        for n in range(5):
            for lam in enumerate_multipartitions(params.d, n):
                for i in range(params.e):
                    for mu, k in f_terms(lam, i, order, params):
                        assert k == n_below(lam, mu, i, order, params)
                    for mu, k in e_terms(lam, i, order, params):
                        assert k == -n_above(mu, lam, i, order, params)


@pytest.mark.parametrize("order", list(OrderKind), ids=lambda o: o.value)
def test_commutator_diagonal(order):
    for params in _params(2, (2, 3)):
        for n in range(5):
            for lam in enumerate_multipartitions(params.d, n):
                x = FockVector.basis(lam)
                for i in range(params.e):
                    ef = apply_e(i, apply_f(i, x, order, params), order, params)
                    fe = apply_f(i, apply_e(i, x, order, params), order, params)
                    got = (ef - fe).coefficient(lam)
                    assert got == _signed_q_integer(n_total(lam, i, params)), (params, lam, i)


@pytest.mark.parametrize("order", list(OrderKind), ids=lambda o: o.value)
def test_divided_powers_divide(order):
    # NonDivisibleError would propagate and fail the test
    for params in _params(2, (2, 3, 4)):
        for n in range(6):
            for lam in enumerate_multipartitions(params.d, n):
                x = FockVector.basis(lam)
                for i in range(params.e):
                    for l in (2, 3):
                        y = apply_divided_f(i, l, x, order, params)
                        assert y.ranks() <= {n + l}


def test_orders_agree_at_one():
    for params in _params(3, (2, 3, 4)):
        for n in range(4):
            for lam in enumerate_multipartitions(params.d, n):
                x = FockVector.basis(lam)
                for i in range(params.e):
                    assert apply_f(i, x, AM, params).at_one() == apply_f(i, x, FLOTW, params).at_one()
                    assert apply_e(i, x, AM, params).at_one() == apply_e(i, x, FLOTW, params).at_one()


def test_rank_homogeneity():
    x = FockVector({((2, 1), (1,)): q, ((1,), (1, 1, 1)): LP.one() - q})
    p = ChargeParams(3, (0, 1))
    for i in range(3):
        assert apply_f(i, x, AM, p).ranks() <= {5}
        assert apply_e(i, x, FLOTW, p).ranks() <= {3}


def test_json_round_trip():
    x = FockVector({((2, 1), ()): q**2 - 3, ((), (1, 1, 1)): LP.monomial(-4)})
    data = x.to_json()
    assert [t["mp"] for t in data] == sorted(t["mp"] for t in data)
    assert data[0] == {"mp": "-|1.1.1", "coef": "q^-4"}
    assert FockVector.from_json(data) == x
    assert FockVector() == FockVector({((1,),): LP.zero()})
