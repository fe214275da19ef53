"""The combinatorial a-function and the a-sequence of residues of a FLOTW d-partition."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .combinat import (
    ChargeParams,
    Multipartition,
    Node,
    format_multipartition,
    is_flotw,
    part,
    rank,
)
from .errors import DomainError
from .fock import OrderKind, order_key, remove_nodes


class RankMismatchError(DomainError):
    pass


class NotFlotwError(DomainError):
    pass


class NoValidResidueError(DomainError):
    """No removable node qualifies as the first node to peel."""


def _shifts(params: ChargeParams) -> list[Fraction]:
    e, d = params.e, params.d
    return [params.charges[j] - Fraction(j * e, d) + e for j in range(d)]


def beta_sets(lam: Multipartition, params: ChargeParams, n: int) -> list[list[Fraction]]:
    m = _shifts(params)
    return [
        [part(lam[j], p) - p + n + m[j] for p in range(1, n + 1)] for j in range(params.d)
    ]


def _sum_min_k(a: Fraction, m: Fraction) -> Fraction:
    """sum_{k=1}^{floor(a)} min(k, m)."""
    top = floor(a)
    if top <= 0:
        return Fraction(0)
    c = min(top, floor(m))  # k <= c contributes k, the rest contributes m
    if c < 0:
        c = 0
    return Fraction(c * (c + 1), 2) + (top - c) * m


def a_value(lam: Multipartition, params: ChargeParams, n: int | None = None) -> Fraction:
    """a_1(lam): the a-value up to an additive constant that depends on n only."""
    if n is None:
        n = rank(lam)
    if rank(lam) != n:
        raise RankMismatchError(f"{format_multipartition(lam)} has rank {rank(lam)}, not {n}")
    if len(lam) != params.d:
        raise DomainError(f"expected {params.d} components")
    B = beta_sets(lam, params, n)
    m = _shifts(params)
    d = params.d
    first = Fraction(0)
    for i in range(d):
        bi = sorted(B[i])
        # pairs a > b inside one beta set (entries are distinct): the k-th
        # smallest entry is the min of one pair per larger entry
        first += sum(x * (len(bi) - 1 - k) for k, x in enumerate(bi))
        for j in range(i + 1, d):
            for a in B[i]:
                for b in B[j]:
                    first += min(a, b)
    second = Fraction(0)
    for i in range(d):
        for a in B[i]:
            for j in range(d):
                second += _sum_min_k(a, m[j])
    return first - second


def compare_a(lam: Multipartition, mu: Multipartition, params: ChargeParams) -> int:
    """Sign of a(lam) - a(mu) for two d-partitions of the same rank."""
    n = rank(lam)
    if rank(mu) != n:
        raise RankMismatchError("a-values are only comparable within one rank")
    x, y = a_value(lam, params, n), a_value(mu, params, n)
    return (x > y) - (x < y)


@dataclass(frozen=True)
class ASequence:
    """Runs (residue, multiplicity), in the order the divided powers are applied."""

    runs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for (i, a), (j, _) in zip(self.runs, self.runs[1:]):
            if i == j:
                raise ValueError("consecutive runs must have distinct residues")
        if any(a < 1 for _, a in self.runs):
            raise ValueError("run multiplicities must be positive")

    def __len__(self):
        return sum(a for _, a in self.runs)

    def flat(self) -> list[int]:
        return flatten(self)

    def __str__(self):
        return ",".join(map(str, self.flat()))


def flatten(seq: ASequence) -> list[int]:
    return [i for i, a in seq.runs for _ in range(a)]


def _right_ends(lam: Multipartition, params: ChargeParams) -> list[tuple[int, int, Node]]:
    """(row length, residue, end node) for every nonempty row."""
    return [
        (length, params.residue(Node(a, length, c)), Node(a, length, c))
        for c, p in enumerate(lam)
        for a, length in enumerate(p, start=1)
    ]


def peel_step(lam: Multipartition, params: ChargeParams):
    """One step of the recursion: returns (k, removed nodes, smaller d-partition)."""
    e = params.e
    ends = _right_ends(lam, params)
    l_max = max(length for length, _, _ in ends)
    longest_res = {r for length, r, _ in ends if length == l_max}
    candidates = []
    for length, r, g in ends:
        if length != l_max or part(lam[g.comp], g.row + 1) == l_max:
            continue
        if (r - 1) % e not in longest_res:
            candidates.append(g)
    if not candidates:
        raise NoValidResidueError(
            f"no admissible first node for {format_multipartition(lam)} with {params}"
        )
    xi = max(candidates, key=lambda g: order_key(g, OrderKind.FLOTW, params))
    k = params.residue(xi)
    bound = max((length for length, r, _ in ends if r == (k - 1) % e), default=0)
    removed = [
        g
        for length, r, g in ends
        if r == k and length > bound and part(lam[g.comp], g.row + 1) < length
    ]
    return k, removed, remove_nodes(lam, removed)


def a_sequence_steps(lam: Multipartition, params: ChargeParams):
    """The peeling steps (k, s, lam') from lam down to the empty d-partition."""
    if not is_flotw(lam, params):
        raise NotFlotwError(f"{format_multipartition(lam)} is not FLOTW for {params}")
    steps = []
    cur = lam
    while rank(cur):
        k, removed, cur = peel_step(cur, params)
        steps.append((k, len(removed), cur))
    return steps


def a_sequence(lam: Multipartition, params: ChargeParams) -> ASequence:
    steps = a_sequence_steps(lam, params)
    runs: list[tuple[int, int]] = []
    for k, s, _ in reversed(steps):
        if runs and runs[-1][0] == k:
            runs[-1] = (k, runs[-1][1] + s)
        else:
            runs.append((k, s))
    return ASequence(tuple(runs))
