import itertools
import math
from fractions import Fraction

import pytest

from akfock.afun import (
    ASequence,
    NotFlotwError,
    RankMismatchError,
    a_sequence,
    a_sequence_steps,
    a_value,
    compare_a,
    flatten,
)
from akfock.combinat import ChargeParams, enumerate_multipartitions, is_flotw
from akfock.crystal import flotw_crystal_layer
from akfock.llt import a_vector

P340 = ChargeParams(4, (0, 2, 3))
EX = ((1,), (3, 1), (2, 1, 1))


def _params(d_max, e_max):
    for e in range(2, e_max + 1):
        for d in range(1, d_max + 1):
            for v in itertools.combinations_with_replacement(range(e), d):
                yield ChargeParams(e, v)


def _oracle_a(lam, params, n):
    """Naive a-value: explicit pair lists and an explicit k loop."""
    e, d, v = params.e, params.d, params.charges
    m = [Fraction(v[j]) - Fraction(j * e, d) + e for j in range(d)]

    def lam_part(j, p):
        return lam[j][p - 1] if p <= len(lam[j]) else 0

    beta = [[lam_part(j, p) - p + n + m[j] for p in range(1, n + 1)] for j in range(d)]
    pairs = []
    for i in range(d):
        for j in range(i, d):
            for a in beta[i]:
                for b in beta[j]:
                    if i < j or a > b:
                        pairs.append((a, b))
    first = sum((min(a, b) for a, b in pairs), Fraction(0))
    second = Fraction(0)
    for i in range(d):
        for a in beta[i]:
            for j in range(d):
                k = 1
                while k <= a:
                    second += min(k, m[j])
                    k += 1
    return first - second


def test_worked_example():
    seq = a_sequence(EX, P340)
    assert seq.runs == ((3, 1), (2, 2), (1, 2), (3, 1), (0, 3))
    assert str(seq) == "3,2,2,1,1,3,0,0,0"
    steps = a_sequence_steps(EX, P340)
    assert steps[0] == (0, 3, ((), (2, 1), (1, 1, 1)))
    assert a_sequence(((), (), ()), P340).runs == ()


def test_flatten_examples():
    assert flatten(ASequence(((3, 1), (0, 3)))) == [3, 0, 0, 0]
    assert flatten(ASequence(())) == []
    assert flatten(ASequence(((1, 2),))) == [1, 1]
    with pytest.raises(ValueError):
        ASequence(((1, 1), (1, 2)))
    with pytest.raises(ValueError):
        ASequence(((1, 0),))


def test_errors():
    with pytest.raises(NotFlotwError):
        a_sequence(((), (1, 1, 1, 1), ()), P340)
    with pytest.raises(RankMismatchError):
        a_value(EX, P340, 5)
    with pytest.raises(RankMismatchError):
        compare_a(((1,),), ((2,),), ChargeParams(2, (0,)))


def test_small_values():
    p = ChargeParams(2, (0,))
    assert a_value(((2,),), p) < a_value(((1, 1),), p)
    assert compare_a(((2,),), ((1, 1),), p) == -1
    assert compare_a(((2,),), ((2,),), p) == 0
    assert a_value(((), (), ()), P340, 0) == 0


def test_a_value_matches_oracle():
    for params in _params(3, 4):
        for n in range(5 if params.d < 3 else 4):
            for lam in enumerate_multipartitions(params.d, n):
                assert a_value(lam, params, n) == _oracle_a(lam, params, n), (params, lam)


def test_a_value_oracle_on_noninteger_shifts():
    params = ChargeParams(3, (0, 1))  # m^(1) = 1 - 3/2 + 3
    for lam in enumerate_multipartitions(2, 5):
        assert a_value(lam, params) == _oracle_a(lam, params, 5)


def test_sequence_invariants():
    for params in _params(3, 4):
        for n in range(7 if params.d < 3 else 6):
            for lam in flotw_crystal_layer(params, n):
                seq = a_sequence(lam, params)
                assert len(seq) == n
                assert len(flatten(seq)) == n
                for _, _, smaller in a_sequence_steps(lam, params):
                    assert is_flotw(smaller, params)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_monomial_is_a_triangular(d):
    for params in _params(d, 4):
        if params.d != d:
            continue
        for n in range(7 if d < 3 else 6):
            a = {mu: a_value(mu, params, n) for mu in enumerate_multipartitions(d, n)}
            for lam in flotw_crystal_layer(params, n):
                vec = a_vector(lam, params)
                assert vec.coefficient(lam) == 1
                assert all(a[mu] > a[lam] for mu in vec.support() if mu != lam), (params, lam)
