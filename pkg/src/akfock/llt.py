"""Canonical bases of the Fock-space highest-weight module and decomposition matrices.

FLOTW labels use the a-sequence monomials A(lam) and are eliminated in
decreasing a-value.  Kleshchev (AM) labels use f_i^(eps) G(lam') where
lam' strips all good i-nodes off lam; these columns are only consumed at
q = 1.

Elimination: a working vector X is bar-invariant.  While some label
mu != lam carries a coefficient with a term of exponent <= 0, pick such a
mu and subtract gamma(q) * G(mu), where gamma is the bar-symmetric
completion of the coefficient's exponent-<=0 part.  FLOTW columns pick the
offending label of smallest a-value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .afun import a_sequence, a_value
from .combinat import (
    ChargeParams,
    Multipartition,
    enumerate_multipartitions,
    format_multipartition,
    is_semisimple_regime,
    remove_node,
)
from .crystal import bijection_c, crystal_path, epsilon, generate_crystal, good_node
from .errors import DomainError
from .exactmath import LaurentPolynomial
from .fock import FockVector, OrderKind, apply_divided_f, apply_word


class EliminationStuckError(DomainError):
    """An offending coefficient sits on a label with no finished column."""


@dataclass(frozen=True)
class CanonicalBasisColumn:
    label: Multipartition
    vector: FockVector

    def coefficient(self, mu: Multipartition) -> LaurentPolynomial:
        return self.vector.coefficient(mu)


@dataclass
class DecompositionMatrix:
    """Rows: all d-partitions of rank n.  Columns: crystal labels."""

    rows: list[Multipartition]
    columns: list[Multipartition]
    polys: dict[tuple[Multipartition, Multipartition], LaurentPolynomial] = field(repr=False)

    def entry(self, mu: Multipartition, lam: Multipartition) -> int:
        return self.poly(mu, lam).eval_at_one()

    def poly(self, mu: Multipartition, lam: Multipartition) -> LaurentPolynomial:
        return self.polys.get((mu, lam), LaurentPolynomial.zero())

    def as_lists(self) -> list[list[int]]:
        return [[self.entry(mu, lam) for lam in self.columns] for mu in self.rows]

    def column(self, lam: Multipartition) -> dict[Multipartition, int]:
        return {mu: self.entry(mu, lam) for mu in self.rows if self.entry(mu, lam)}

    def relabel_columns(self, mapping: dict[Multipartition, Multipartition]) -> "DecompositionMatrix":
        return DecompositionMatrix(
            list(self.rows),
            [mapping[lam] for lam in self.columns],
            {(mu, mapping[lam]): p for (mu, lam), p in self.polys.items()},
        )

    def tsv_lines(self):
        yield "\t".join([""] + [format_multipartition(c) for c in self.columns])
        for mu in self.rows:
            cells = [str(self.entry(mu, lam)) for lam in self.columns]
            yield "\t".join([format_multipartition(mu)] + cells)

    def to_json(self, with_q: bool = False) -> dict:
        if with_q:
            entries = [[str(self.poly(mu, lam)) for lam in self.columns] for mu in self.rows]
        else:
            entries = self.as_lists()
        return {
            "rows": [format_multipartition(mu) for mu in self.rows],
            "columns": [format_multipartition(lam) for lam in self.columns],
            "entries": entries,
        }


# -- monomials -------------------------------------------------------------


def a_vector(lam: Multipartition, params: ChargeParams) -> FockVector:
    """A(lam): divided powers along the a-sequence applied to the empty d-partition."""
    seq = a_sequence(lam, params)
    return apply_word(seq.runs, FockVector.vacuum(params.d), OrderKind.FLOTW, params)


def _strip_string(lam, order, params):
    """(i, eps, lam') with lam' = lam minus its eps good i-nodes, eps = eps_i(lam) > 0.

    The residue is the last letter of lam's crystal path."""
    i = crystal_path(lam, order, params)[-1]
    eps = epsilon(lam, i, order, params)
    cur = lam
    for _ in range(eps):
        cur = remove_node(cur, good_node(cur, i, order, params))
    return i, eps, cur


# -- elimination -----------------------------------------------------------


def _eliminate(
    lam: Multipartition,
    x: FockVector,
    finished: dict[Multipartition, FockVector],
    height: Callable[[Multipartition], tuple],
) -> FockVector:
    """Reduce x until every coefficient off lam lies in qZ[q].

    ``height`` orders labels so that each G(mu) is mu plus terms of lower height.
    """
    while True:
        offending = [
            mu for mu, c in x.items() if mu != lam and not c.in_positive_part()
        ]
        if not offending:
            return x
        mu = max(offending, key=height)
        if mu not in finished:
            raise EliminationStuckError(
                f"coefficient {x.coefficient(mu)} of {format_multipartition(mu)} in the "
                f"column of {format_multipartition(lam)} has no finished column to cancel it"
            )
        gamma = x.coefficient(mu).symmetric_completion()
        x = x - finished[mu].scale(gamma)


def _check_column(lam, x: FockVector):
    if x.coefficient(lam) != LaurentPolynomial.one():
        raise EliminationStuckError(
            f"column of {format_multipartition(lam)} has diagonal coefficient {x.coefficient(lam)}"
        )


@lru_cache(maxsize=64)
def _flotw_basis(params: ChargeParams, n: int) -> tuple[CanonicalBasisColumn, ...]:
    labels = generate_crystal(OrderKind.FLOTW, params, n).layer(n)
    a = {mu: a_value(mu, params, n) for mu in enumerate_multipartitions(params.d, n)}
    # decreasing a-value; ties in text order
    labels.sort(key=format_multipartition)
    labels.sort(key=lambda lam: a[lam], reverse=True)
    finished: dict[Multipartition, FockVector] = {}
    columns = []
    for lam in labels:
        x = _eliminate(lam, a_vector(lam, params), finished, lambda mu: -a[mu])
        _check_column(lam, x)
        finished[lam] = x
        columns.append(CanonicalBasisColumn(lam, x))
    return tuple(columns)


class _Deferred(Exception):
    """The column needs a same-rank column that is not finished yet."""


def _eliminate_free(
    lam: Multipartition,
    x: FockVector,
    finished: dict[Multipartition, FockVector],
    labels: set[Multipartition],
    max_steps: int,
) -> FockVector:
    """Elimination without a known triangular order.

    Picks an offending finished label that does not occur in the finished
    column of any other offending label.  Every step subtracts a
    bar-symmetric multiple of a canonical column, so a column that ends
    with qZ[q] tails is the canonical basis element by uniqueness.
    """
    for _ in range(max_steps):
        offending = [mu for mu, c in x.items() if mu != lam and not c.in_positive_part()]
        if not offending:
            return x
        if any(mu in labels and mu not in finished for mu in offending):
            raise _Deferred
        done = [mu for mu in offending if mu in finished]
        top = [
            mu
            for mu in done
            if not any(nu != mu and finished[nu].coefficient(mu) for nu in done)
        ]
        if not top:
            raise EliminationStuckError(
                f"column of {format_multipartition(lam)}: offending coefficients on "
                + ", ".join(map(format_multipartition, sorted(offending)))
                + " cannot be cancelled by finished columns"
            )
        mu = min(top, key=format_multipartition)
        gamma = x.coefficient(mu).symmetric_completion()
        x = x - finished[mu].scale(gamma)
    raise EliminationStuckError(f"column of {format_multipartition(lam)} did not converge")


@lru_cache(maxsize=64)
def _am_basis(params: ChargeParams, n: int) -> tuple[CanonicalBasisColumn, ...]:
    if n == 0:
        vac = FockVector.vacuum(params.d)
        return (CanonicalBasisColumn(vac.support()[0], vac),)
    lower = {}
    for k in range(n):
        lower.update({col.label: col.vector for col in _am_basis(params, k)})
    labels = generate_crystal(OrderKind.AM, params, n).layer(n)
    label_set = set(labels)
    finished: dict[Multipartition, FockVector] = {}
    pending = list(labels)
    max_steps = 4 * len(labels) * (n + 1) ** 2 + 16
    while pending:
        waiting = []
        for lam in pending:
            i, eps, lam0 = _strip_string(lam, OrderKind.AM, params)
            x = apply_divided_f(i, eps, lower[lam0], OrderKind.AM, params)
            try:
                x = _eliminate_free(lam, x, finished, label_set, max_steps)
            except _Deferred:
                waiting.append(lam)
                continue
            _check_column(lam, x)
            finished[lam] = x
        if len(waiting) == len(pending):
            raise EliminationStuckError(
                "no Kleshchev column can be completed: "
                + ", ".join(map(format_multipartition, waiting))
            )
        pending = waiting
    return tuple(CanonicalBasisColumn(lam, finished[lam]) for lam in labels)


def canonical_basis(
    params: ChargeParams, n: int, order: OrderKind = OrderKind.FLOTW
) -> list[CanonicalBasisColumn]:
    """Canonical basis of the rank-n weight spaces, one column per crystal label."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if order is OrderKind.FLOTW:
        return list(_flotw_basis(params, n))
    return list(_am_basis(params, n))


def decomposition_matrix(
    params: ChargeParams, n: int, order: OrderKind = OrderKind.FLOTW
) -> DecompositionMatrix:
    columns = canonical_basis(params, n, order)
    rows = enumerate_multipartitions(params.d, n)
    position = {mu: k for k, mu in enumerate(rows)}
    columns = sorted(columns, key=lambda col: position[col.label])
    polys = {}
    for col in columns:
        for mu, c in col.vector.items():
            polys[(mu, col.label)] = c
    return DecompositionMatrix(rows, [col.label for col in columns], polys)


# -- the canonical basic set checks -----------------------------------------


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CbsReport:
    params: ChargeParams
    n: int
    checks: list[CheckResult]
    semisimple: bool

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "e": self.params.e,
            "charges": list(self.params.charges),
            "n": self.n,
            "semisimple": self.semisimple,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }


def verify_cbs(params: ChargeParams, n: int) -> CbsReport:
    """Check on computed data that the FLOTW d-partitions form a canonical basic set:
    unit diagonal, strict a-triangularity, and agreement with the Kleshchev
    matrix after relabelling by the crystal bijection."""
    flotw = decomposition_matrix(params, n, OrderKind.FLOTW)
    checks = []

    bad = [lam for lam in flotw.columns if flotw.entry(lam, lam) != 1]
    checks.append(
        CheckResult(
            "unit-diagonal",
            not bad,
            "" if not bad else "diagonal != 1 at " + ", ".join(map(format_multipartition, bad)),
        )
    )

    a = {mu: a_value(mu, params, n) for mu in flotw.rows}
    bad_pairs = [
        (mu, lam)
        for lam in flotw.columns
        for mu in flotw.rows
        if mu != lam and flotw.entry(mu, lam) and a[mu] <= a[lam]
    ]
    negative = [(mu, lam) for (mu, lam) in flotw.polys if flotw.entry(mu, lam) < 0]
    detail = ""
    if bad_pairs:
        mu, lam = bad_pairs[0]
        detail = f"{len(bad_pairs)} violations, e.g. row {format_multipartition(mu)} column {format_multipartition(lam)}"
    if negative:
        detail += f" {len(negative)} negative entries"
    checks.append(CheckResult("a-triangularity", not bad_pairs and not negative, detail.strip()))

    am = decomposition_matrix(params, n, OrderKind.AM)
    c = bijection_c(params, n)
    relabelled = am.relabel_columns(c)
    same = set(relabelled.columns) == set(flotw.columns) and all(
        relabelled.column(lam) == flotw.column(lam) for lam in flotw.columns
    )
    checks.append(
        CheckResult(
            "crystal-bijection",
            same,
            "" if same else "Kleshchev and FLOTW matrices differ after relabelling",
        )
    )
    return CbsReport(params, n, checks, is_semisimple_regime(params, n))
