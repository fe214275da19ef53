import itertools

import pytest

from akfock.afun import a_value
from akfock.combinat import (
    ChargeParams,
    enumerate_multipartitions,
    is_semisimple_regime,
)
from akfock.crystal import flotw_crystal_layer, kleshchev_multipartitions
from akfock.exactmath import LaurentPolynomial as LP
from akfock.fock import FockVector, OrderKind
from akfock.llt import a_vector, canonical_basis, decomposition_matrix, verify_cbs
from test_acceptance import _oracle_matrix

AM, FLOTW = OrderKind.AM, OrderKind.FLOTW
P2 = ChargeParams(2, (0,))
q = LP.q()


def _grid():
    for e in (2, 3, 4):
        for d in (1, 2):
            for v in itertools.combinations_with_replacement(range(e), d):
                yield ChargeParams(e, v), 6
    yield ChargeParams(4, (0, 2, 3)), 5


def test_a_vector_examples():
    assert a_vector(((),), P2) == FockVector.vacuum(1)
    assert a_vector(((2,),), P2) == FockVector({((2,),): LP.one(), ((1, 1),): q})


def test_canonical_basis_examples():
    (col,) = canonical_basis(P2, 0)
    assert col.label == ((),)
    assert col.vector == FockVector.vacuum(1)
    (col,) = canonical_basis(P2, 2)
    assert col.vector == FockVector({((2,),): LP.one(), ((1, 1),): q})
    with pytest.raises(ValueError):
        canonical_basis(P2, -1)


def test_decomposition_examples():
    m = decomposition_matrix(P2, 2)
    assert m.columns == [((2,),)]
    assert m.as_lists() == [[1], [1]]
    m = decomposition_matrix(P2, 3)
    assert m.columns == [((3,),), ((2, 1),)]
    table = m.as_lists()
    assert all(x in (0, 1) for row in table for x in row)
    assert m.entry(((3,),), ((3,),)) == 1
    assert m.entry(((2, 1),), ((2, 1),)) == 1


def test_known_type_a_matrix():
    # the 2-modular decomposition matrix of S_4
    m = decomposition_matrix(P2, 4)
    assert [lam for (lam,) in m.columns] == [(4,), (3, 1)]
    assert m.as_lists() == [[1, 0], [1, 1], [0, 1], [1, 1], [1, 0]]
    assert m.poly(((2, 2),), ((3, 1),)) == q
    assert m.poly(((1, 1, 1, 1),), ((4,),)) == q**2


@pytest.mark.parametrize("e,n", [(2, 5), (2, 6), (3, 4), (3, 5), (3, 6), (4, 6)])
def test_type_a_against_oracle(e, n):
    oracle = _oracle_matrix(e, n)
    m = decomposition_matrix(ChargeParams(e, (0,)), n)
    got = {(mu[0], lam[0]): m.entry(mu, lam) for lam in m.columns for mu in m.rows if m.entry(mu, lam)}
    assert got == oracle


def test_unitriangular_on_grid():
    for params, n_max in _grid():
        for n in range(n_max + 1):
            rows = enumerate_multipartitions(params.d, n)
            a = {mu: a_value(mu, params, n) for mu in rows}
            m = decomposition_matrix(params, n, FLOTW)
            assert m.rows == rows
            assert len(m.columns) == len(flotw_crystal_layer(params, n))
            for lam in m.columns:
                assert m.poly(lam, lam) == 1
                for mu in rows:
                    p = m.poly(mu, lam)
                    if mu != lam and not p.is_zero:
                        assert p.in_positive_part(), (params, lam, mu)
                        assert a[mu] > a[lam]
                        assert all(c > 0 for c in p.coefficients.values())


def test_am_columns_on_grid():
    for params, n_max in _grid():
        for n in range(min(n_max, 5) + 1):
            cols = canonical_basis(params, n, AM)
            assert [c.label for c in cols] == kleshchev_multipartitions(params, n)
            for col in cols:
                assert col.coefficient(col.label) == 1
                assert all(
                    p.in_positive_part() for mu, p in col.vector.items() if mu != col.label
                )


def test_semisimple_identity_multi():
    for params in (ChargeParams(9, (0, 4)), ChargeParams(9, (0, 3, 6))):
        for n in range(4):
            assert is_semisimple_regime(params, n)
            m = decomposition_matrix(params, n)
            assert m.columns == m.rows
            assert all(m.column(lam) == {lam: 1} for lam in m.columns)


def test_verify_cbs():
    p01 = ChargeParams(2, (0, 1))
    for n in range(5):
        report = verify_cbs(p01, n)
        assert report.passed, report.to_json()
        assert [c.name for c in report.checks] == [
            "unit-diagonal",
            "a-triangularity",
            "crystal-bijection",
        ]
    report = verify_cbs(ChargeParams(7, (0,)), 3)
    assert report.passed and report.semisimple
    data = report.to_json()
    assert data["passed"] is True and data["n"] == 3


def test_matrix_outputs():
    m = decomposition_matrix(P2, 2)
    assert list(m.tsv_lines()) == ["\t2", "2\t1", "1.1\t1"]
    assert m.to_json() == {"rows": ["2", "1.1"], "columns": ["2"], "entries": [[1], [1]]}
    assert m.to_json(with_q=True)["entries"] == [["1"], ["q"]]
