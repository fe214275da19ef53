"""Partitions, d-partitions, nodes and residues.

A partition is a weakly decreasing tuple of positive ints and a
d-partition (multipartition) is a tuple of d partitions; both are plain
tuples so they hash and compare cheaply.  Nodes are ``(row, col, comp)``
with 1-based rows and columns and 0-based components.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Sequence

from .errors import DomainError

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


class Node(NamedTuple):
    row: int
    col: int
    comp: int


@dataclass(frozen=True)
class ChargeParams:
    """The datum {e; v_0, ..., v_{d-1}}."""

    e: int
    charges: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "charges", tuple(int(v) for v in self.charges))
        if self.e < 2:
            raise DomainError(f"e must be at least 2, got {self.e}")
        if not self.charges:
            raise DomainError("at least one charge is required")
        if any(not 0 <= v < self.e for v in self.charges):
            raise DomainError(f"charges must lie in [0, {self.e}): {self.charges}")
        if any(a > b for a, b in zip(self.charges, self.charges[1:])):
            raise DomainError(f"charges must be weakly increasing: {self.charges}")

    @property
    def d(self) -> int:
        return len(self.charges)

    def content(self, node: Node) -> int:
        return node.col - node.row + self.charges[node.comp]

    def residue(self, node: Node) -> int:
        return (node.col - node.row + self.charges[node.comp]) % self.e

    def __str__(self):
        return "{%d; %s}" % (self.e, ",".join(map(str, self.charges)))


# -- partitions ---------------------------------------------------------


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in decreasing lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _compositions(n: int, d: int) -> Iterator[tuple[int, ...]]:
    if d == 1:
        yield (n,)
        return
    for k in range(n, -1, -1):
        for rest in _compositions(n - k, d - 1):
            yield (k,) + rest


def enumerate_multipartitions(d: int, n: int) -> list[Multipartition]:
    """All d-partitions of rank n, in decreasing lexicographic order of the
    component sequence (so ``((1,), ())`` precedes ``((), (1,))``)."""
    if d < 1 or n < 0:
        raise ValueError("need d >= 1 and n >= 0")
    return _enumerate(d, n)


@lru_cache(maxsize=None)
def _enumerate(d: int, n: int) -> list[Multipartition]:
    out: list[Multipartition] = []

    def rec(prefix: tuple, remaining: int, left: int):
        if left == 1:
            for p in partitions(remaining):
                out.append(prefix + (p,))
            return
        for k in range(remaining, -1, -1):
            for p in partitions(k):
                rec(prefix + (p,), remaining - k, left - 1)

    rec((), n, d)
    out.sort(reverse=True)
    return out


def rank(mp: Multipartition) -> int:
    return sum(sum(p) for p in mp)


def empty_multipartition(d: int) -> Multipartition:
    return ((),) * d


def is_partition(parts: Sequence[int]) -> bool:
    return all(x > 0 for x in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def part(p: Partition, i: int) -> int:
    """The i-th part (1-based) with parts beyond the last read as 0."""
    return p[i - 1] if 1 <= i <= len(p) else 0


# -- text form ----------------------------------------------------------


def format_partition(p: Partition) -> str:
    return ".".join(map(str, p)) if p else "-"


def format_multipartition(mp: Multipartition) -> str:
    return "|".join(format_partition(p) for p in mp)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", ""):
        return ()
    try:
        parts = tuple(int(x) for x in text.split("."))
    except ValueError:
        raise DomainError(f"bad partition text {text!r}") from None
    if not is_partition(parts):
        raise DomainError(f"not a partition: {text!r}")
    return parts


def parse_multipartition(text: str, d: int | None = None) -> Multipartition:
    """Parse ``"1|3.1|2.1.1"``; empty components are written ``-``."""
    mp = tuple(parse_partition(t) for t in text.split("|"))
    if d is not None and len(mp) != d:
        raise DomainError(f"{text!r} has {len(mp)} components, expected {d}")
    return mp


# -- nodes ----------------------------------------------------------------


def nodes(mp: Multipartition) -> list[Node]:
    return [
        Node(a, b, c)
        for c, p in enumerate(mp)
        for a, length in enumerate(p, start=1)
        for b in range(1, length + 1)
    ]


def in_diagram(node: Node, mp: Multipartition) -> bool:
    return 1 <= node.col <= part(mp[node.comp], node.row)


def residue(node: Node, params: ChargeParams) -> int:
    return params.residue(node)


@lru_cache(maxsize=200_000)
def _addable(mp: Multipartition) -> tuple[Node, ...]:
    out = []
    for c, p in enumerate(mp):
        for a in range(1, len(p) + 2):
            if a == 1 or p[a - 2] > part(p, a):
                out.append(Node(a, part(p, a) + 1, c))
    return tuple(out)


@lru_cache(maxsize=200_000)
def _removable(mp: Multipartition) -> tuple[Node, ...]:
    out = []
    for c, p in enumerate(mp):
        for a in range(1, len(p) + 1):
            if p[a - 1] > part(p, a + 1):
                out.append(Node(a, p[a - 1], c))
    return tuple(out)


def all_addable_nodes(mp: Multipartition) -> tuple[Node, ...]:
    return _addable(mp)


def all_removable_nodes(mp: Multipartition) -> tuple[Node, ...]:
    return _removable(mp)


def addable_nodes(mp: Multipartition, i: int, params: ChargeParams) -> list[Node]:
    """Addable i-nodes, ordered by (component, row)."""
    return [g for g in _addable(mp) if params.residue(g) == i]


def removable_nodes(mp: Multipartition, i: int, params: ChargeParams) -> list[Node]:
    """Removable i-nodes, ordered by (component, row)."""
    return [g for g in _removable(mp) if params.residue(g) == i]


def add_node(mp: Multipartition, node: Node) -> Multipartition:
    p = mp[node.comp]
    a = node.row
    if node.col != part(p, a) + 1 or (a > 1 and p[a - 2] <= part(p, a)):
        raise DomainError(f"{node} is not addable to {format_multipartition(mp)}")
    if a <= len(p):
        newp = p[: a - 1] + (p[a - 1] + 1,) + p[a:]
    else:
        newp = p + (1,)
    return mp[: node.comp] + (newp,) + mp[node.comp + 1 :]


def remove_node(mp: Multipartition, node: Node) -> Multipartition:
    p = mp[node.comp]
    a = node.row
    if node.col != part(p, a) or node.col <= part(p, a + 1):
        raise DomainError(f"{node} is not removable from {format_multipartition(mp)}")
    if p[a - 1] == 1:
        newp = p[: a - 1]
    else:
        newp = p[: a - 1] + (p[a - 1] - 1,) + p[a:]
    return mp[: node.comp] + (newp,) + mp[node.comp + 1 :]


# -- node orders ------------------------------------------------------------


def am_below(g: Node, h: Node) -> bool:
    """AM order: g is below h if g.comp < h.comp, or same comp and g.row < h.row."""
    return g.comp < h.comp or (g.comp == h.comp and g.row < h.row)


def flotw_above(g: Node, h: Node, params: ChargeParams) -> bool:
    """FLOTW order: g is above h if its content is smaller, ties broken by
    the larger component being above."""
    cg, ch = params.content(g), params.content(h)
    return cg < ch or (cg == ch and g.comp > h.comp)


# -- special classes ----------------------------------------------------------


def is_e_regular(p: Partition, e: int) -> bool:
    run = 1
    for a, b in zip(p, p[1:]):
        run = run + 1 if a == b else 1
        if run >= e:
            return False
    return e > 1 or not p


def is_flotw(mp: Multipartition, params: ChargeParams) -> bool:
    """Membership in the FLOTW set for the given charges."""
    if len(mp) != params.d:
        raise DomainError(f"expected {params.d} components, got {len(mp)}")
    v, e, d = params.charges, params.e, params.d
    for j in range(d - 1):
        shift = v[j + 1] - v[j]
        hi, lo = mp[j], mp[j + 1]
        for i in range(1, len(lo) + 1):
            if part(hi, i) < part(lo, i + shift):
                return False
    shift = e + v[0] - v[d - 1]
    for i in range(1, len(mp[0]) + 1):
        if part(mp[d - 1], i) < part(mp[0], i + shift):
            return False
    ends: dict[int, set[int]] = {}
    for c, p in enumerate(mp):
        for a, length in enumerate(p, start=1):
            ends.setdefault(length, set()).add((length - a + v[c]) % e)
    return all(len(s) < e for s in ends.values())


def is_semisimple_regime(params: ChargeParams, n: int) -> bool:
    """Ariki's semisimplicity criterion at u_j = eta^{v_j}, v = eta, eta a
    primitive e-th root of unity, all tested on exponents mod e."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    e, v = params.e, params.charges
    for i in range(params.d):
        for j in range(params.d):
            if i != j and any((l + v[i] - v[j]) % e == 0 for l in range(-n + 1, n)):
                return False
    # 1 + eta + ... + eta^(m-1) vanishes exactly when e divides m
    return all(m % e for m in range(2, n + 1))
