"""Canonical basic sets for Hecke algebras of types A, B and D at an e-th root of unity.

Type D labels are index objects only: ``[lam, mu]`` for the common
restriction of the Specht modules of ``(lam, mu)`` and ``(mu, lam)``, and
``[lam, +]``, ``[lam, -]`` for the two summands when both halves agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .combinat import (
    ChargeParams,
    Multipartition,
    Partition,
    enumerate_multipartitions,
    format_partition,
    is_e_regular,
    is_flotw,
    partitions,
)
from .errors import DomainError


@dataclass(frozen=True)
class TypeDLabel:
    kind: str  # "pair" or "split"
    halves: tuple[Partition, ...]
    sign: Optional[str] = None

    def __post_init__(self):
        if self.kind == "pair":
            if len(self.halves) != 2 or self.halves[0] == self.halves[1]:
                raise ValueError("a pair label needs two distinct halves")
            if self.sign is not None:
                raise ValueError("pair labels carry no sign")
            # unordered: store in canonical (text) order
            object.__setattr__(
                self, "halves", tuple(sorted(self.halves, key=format_partition))
            )
        elif self.kind == "split":
            if len(self.halves) != 1 or self.sign not in ("+", "-"):
                raise ValueError("a split label needs one half and a sign")
        else:
            raise ValueError(f"unknown label kind {self.kind!r}")

    @classmethod
    def pair(cls, lam: Partition, mu: Partition) -> "TypeDLabel":
        return cls("pair", (lam, mu))

    @classmethod
    def split(cls, lam: Partition, sign: str) -> "TypeDLabel":
        return cls("split", (lam,), sign)

    def to_json(self):
        if self.kind == "pair":
            return [format_partition(p) for p in self.halves]
        return {"half": format_partition(self.halves[0]), "sign": self.sign}

    def __str__(self):
        if self.kind == "pair":
            return "[%s,%s]" % tuple(format_partition(p) for p in self.halves)
        return "[%s,%s]" % (format_partition(self.halves[0]), self.sign)


def preset_charges(weyl_type: str, e: int) -> ChargeParams:
    """Charges that realise the type A/B/D Hecke algebra as an Ariki-Koike algebra.

    Types B and D with e odd have no single charge vector here; their basic
    sets are products of type A sets.
    """
    t = weyl_type.upper()
    if t == "A":
        return ChargeParams(e, (0,))
    if t in ("B", "D"):
        if e % 2:
            raise DomainError(f"type {t} with odd e has no two-charge preset; use basicset")
        return ChargeParams(e, (1, e // 2) if t == "B" else (0, e // 2))
    raise DomainError(f"unknown Weyl type {weyl_type!r}")


def basic_set_A(e: int, n: int) -> list[Partition]:
    return [p for p in partitions(n) if is_e_regular(p, e)]


def _regular_pairs(e: int, n: int) -> list[Multipartition]:
    return [
        (p0, p1)
        for n0 in range(n, -1, -1)
        for p0 in basic_set_A(e, n0)
        for p1 in basic_set_A(e, n - n0)
    ]


def basic_set_B(e: int, n: int) -> list[Multipartition]:
    if e % 2:
        return sorted(_regular_pairs(e, n), reverse=True)
    params = preset_charges("B", e)
    return [mp for mp in enumerate_multipartitions(2, n) if is_flotw(mp, params)]


def fold_to_unordered(pairs: Iterable[Multipartition]) -> list[TypeDLabel]:
    """Identify (lam, mu) with (mu, lam); equal halves split into a +/- pair."""
    out: set[TypeDLabel] = set()
    for lam, mu in pairs:
        if lam == mu:
            out.add(TypeDLabel.split(lam, "+"))
            out.add(TypeDLabel.split(lam, "-"))
        else:
            out.add(TypeDLabel.pair(lam, mu))
    return sorted(out, key=str)


def basic_set_D(e: int, n: int) -> list[TypeDLabel]:
    if e % 2:
        pairs = [(p0, p1) for p0, p1 in _regular_pairs(e, n) if p0 != p1]
        if n % 2 == 0:
            pairs += [(p, p) for p in basic_set_A(e, n // 2)]
    else:
        params = preset_charges("D", e)
        pairs = [mp for mp in enumerate_multipartitions(2, n) if is_flotw(mp, params)]
    return fold_to_unordered(pairs)
