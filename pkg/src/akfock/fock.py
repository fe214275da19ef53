"""The Fock space and its two quantum-group actions.

Both actions share one formula; they differ only in the order used to
decide which nodes lie above or below the node being added or removed:

* ``OrderKind.AM``: the Hayashi action, ordered by (component, row);
* ``OrderKind.FLOTW``: the JMMO action, ordered by (content, component).
"""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterable, Mapping

from .combinat import (
    ChargeParams,
    Multipartition,
    Node,
    add_node,
    addable_nodes,
    format_multipartition,
    nodes,
    parse_multipartition,
    rank,
    remove_node,
    removable_nodes,
)
from .errors import DomainError
from .exactmath import LaurentPolynomial, exact_divide, q_factorial


class OrderKind(enum.Enum):
    AM = "am"
    FLOTW = "flotw"

    @classmethod
    def parse(cls, text: str) -> "OrderKind":
        try:
            return cls(text.lower())
        except ValueError:
            raise DomainError(f"unknown order {text!r}; use am or flotw") from None


class InvalidPairError(DomainError):
    """mu is not lambda plus a single node of the requested residue."""


def order_key(node: Node, order: OrderKind, params: ChargeParams) -> tuple[int, int]:
    """Sort key that increases from the lowest node to the highest."""
    if order is OrderKind.AM:
        return (node.comp, node.row)
    return (-params.content(node), node.comp)


def is_below(g: Node, h: Node, order: OrderKind, params: ChargeParams) -> bool:
    return order_key(g, order, params) < order_key(h, order, params)


class FockVector:
    """A finite linear combination of d-partitions with Laurent coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Multipartition, LaurentPolynomial] | None = None):
        t = {}
        if terms:
            for mp, c in terms.items():
                if not isinstance(c, LaurentPolynomial):
                    c = LaurentPolynomial({0: c})
                if c:
                    t[mp] = c
        if t and len({len(mp) for mp in t}) > 1:
            raise DomainError("all multipartitions in a Fock vector need the same d")
        self._terms = t

    @classmethod
    def basis(cls, mp: Multipartition, coeff: LaurentPolynomial | None = None) -> "FockVector":
        return cls({mp: coeff if coeff is not None else LaurentPolynomial.one()})

    @classmethod
    def vacuum(cls, d: int) -> "FockVector":
        return cls.basis(((),) * d)

    @classmethod
    def _from_raw(cls, acc: dict) -> "FockVector":
        """Build from ``{mp: {exponent: coeff}}`` accumulators."""
        v = object.__new__(cls)
        t = {}
        for mp, c in acc.items():
            p = LaurentPolynomial(c)
            if p:
                t[mp] = p
        v._terms = t
        return v

    @property
    def terms(self) -> dict[Multipartition, LaurentPolynomial]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> list[Multipartition]:
        return list(self._terms)

    def coefficient(self, mp: Multipartition) -> LaurentPolynomial:
        return self._terms.get(mp, LaurentPolynomial.zero())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "FockVector") -> "FockVector":
        t = dict(self._terms)
        for mp, c in other._terms.items():
            s = t.get(mp, LaurentPolynomial.zero()) + c
            if s:
                t[mp] = s
            else:
                t.pop(mp, None)
        return FockVector(t)

    def __neg__(self):
        return FockVector({mp: -c for mp, c in self._terms.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, p: LaurentPolynomial) -> "FockVector":
        return FockVector({mp: c * p for mp, c in self._terms.items()})

    def at_one(self) -> dict[Multipartition, int]:
        out = {}
        for mp, c in self._terms.items():
            x = c.eval_at_one()
            if x:
                out[mp] = x
        return out

    def ranks(self) -> set[int]:
        return {rank(mp) for mp in self._terms}

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: format_multipartition(kv[0]))

    def to_json(self) -> list[dict]:
        return [
            {"mp": format_multipartition(mp), "coef": str(c)} for mp, c in self.sorted_items()
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "FockVector":
        return cls(
            {parse_multipartition(t["mp"]): LaurentPolynomial.parse(t["coef"]) for t in data}
        )

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mp, c in self.sorted_items():
            s = str(c)
            coeff = s if " " not in s else f"({s})"
            parts.append(f"{coeff}*[{format_multipartition(mp)}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"FockVector({self})"


# -- node statistics ------------------------------------------------------


def _added_node(lam: Multipartition, mu: Multipartition, i: int, params: ChargeParams) -> Node:
    if len(lam) != len(mu) or len(lam) != params.d:
        raise InvalidPairError("multipartitions have the wrong number of components")
    for g in addable_nodes(lam, i, params):
        if add_node(lam, g) == mu:
            return g
    raise InvalidPairError(
        f"{format_multipartition(mu)} is not {format_multipartition(lam)} plus an {i}-node"
    )


def n_above(lam, mu, i: int, order: OrderKind, params: ChargeParams) -> int:
    """#addable i-nodes of lam above g minus #removable i-nodes of mu above g,
    where mu = lam + g."""
    g = _added_node(lam, mu, i, params)
    kg = order_key(g, order, params)
    up = lambda h: h != g and order_key(h, order, params) > kg  # noqa: E731
    return sum(map(up, addable_nodes(lam, i, params))) - sum(
        map(up, removable_nodes(mu, i, params))
    )


def n_below(lam, mu, i: int, order: OrderKind, params: ChargeParams) -> int:
    g = _added_node(lam, mu, i, params)
    kg = order_key(g, order, params)
    down = lambda h: h != g and order_key(h, order, params) < kg  # noqa: E731
    return sum(map(down, addable_nodes(lam, i, params))) - sum(
        map(down, removable_nodes(mu, i, params))
    )


def n_total(lam: Multipartition, i: int, params: ChargeParams) -> int:
    return len(addable_nodes(lam, i, params)) - len(removable_nodes(lam, i, params))


def n_zero_nodes(lam: Multipartition, params: ChargeParams) -> int:
    return sum(1 for g in nodes(lam) if params.residue(g) == 0)


def weight_exponents(lam: Multipartition, params: ChargeParams) -> tuple[tuple[int, ...], int]:
    """Exponents (N_0, ..., N_{e-1}) and N_d of the diagonal k-action."""
    return tuple(n_total(lam, i, params) for i in range(params.e)), n_zero_nodes(lam, params)


# -- the actions --------------------------------------------------------------
#
# Adding or removing an i-node only changes the addability of neighbouring
# nodes of residue i +- 1, so the statistics can be read off the i-signature
# of lam alone.


@lru_cache(maxsize=500_000)
def f_terms(lam: Multipartition, i: int, order: OrderKind, params: ChargeParams):
    """((mu, exponent), ...) with f_i lam = sum q^exponent mu."""
    add = addable_nodes(lam, i, params)
    rem = removable_nodes(lam, i, params)
    keyed = sorted(
        [(order_key(g, order, params), 1, g) for g in add]
        + [(order_key(g, order, params), -1, g) for g in rem]
    )
    out = []
    below = 0
    for _, sign, g in keyed:
        if sign == 1:
            out.append((add_node(lam, g), below))
        below += sign
    return tuple(out)


@lru_cache(maxsize=500_000)
def e_terms(lam: Multipartition, i: int, order: OrderKind, params: ChargeParams):
    """((mu, exponent), ...) with e_i lam = sum q^exponent mu."""
    add = addable_nodes(lam, i, params)
    rem = removable_nodes(lam, i, params)
    keyed = sorted(
        [(order_key(g, order, params), 1, g) for g in add]
        + [(order_key(g, order, params), -1, g) for g in rem],
        reverse=True,
    )
    out = []
    above = 0
    for _, sign, g in keyed:
        if sign == -1:
            out.append((remove_node(lam, g), -above))
        above += sign
    return tuple(out)


def _apply(table, i, x: FockVector, order, params) -> FockVector:
    acc: dict[Multipartition, dict[int, int]] = {}
    for lam, coeff in x.items():
        cc = coeff._c
        for mu, k in table(lam, i, order, params):
            slot = acc.setdefault(mu, {})
            for ex, v in cc.items():
                slot[ex + k] = slot.get(ex + k, 0) + v
    return FockVector._from_raw(acc)


def _check_residue(i: int, params: ChargeParams):
    if not 0 <= i < params.e:
        raise DomainError(f"residue {i} outside [0, {params.e})")


def apply_f(i: int, x: FockVector, order: OrderKind, params: ChargeParams) -> FockVector:
    _check_residue(i, params)
    return _apply(f_terms, i, x, order, params)


def apply_e(i: int, x: FockVector, order: OrderKind, params: ChargeParams) -> FockVector:
    _check_residue(i, params)
    return _apply(e_terms, i, x, order, params)


def apply_divided_f(
    i: int, l: int, x: FockVector, order: OrderKind, params: ChargeParams
) -> FockVector:
    """f_i^(l) = f_i^l / [l]!; raises NonDivisibleError if the quotient is not exact."""
    if l < 1:
        raise ValueError("divided power needs l >= 1")
    for _ in range(l):
        x = apply_f(i, x, order, params)
    if l == 1:
        return x
    fact = q_factorial(l)
    return FockVector({mp: exact_divide(c, fact) for mp, c in x.items()})


def apply_word(
    runs: Iterable[tuple[int, int]], x: FockVector, order: OrderKind, params: ChargeParams
) -> FockVector:
    """Apply divided powers f_{i}^{(a)} for each (i, a) in order, first run first."""
    for i, a in runs:
        x = apply_divided_f(i, a, x, order, params)
    return x


def remove_nodes(mp: Multipartition, to_remove: Iterable[Node]) -> Multipartition:
    """Remove several nodes, last rows first so each removal stays valid."""
    for g in sorted(to_remove, key=lambda h: (h.comp, -h.row)):
        mp = remove_node(mp, g)
    return mp
