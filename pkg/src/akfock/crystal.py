"""Good nodes and the two highest-weight crystals on d-partitions.

For a residue i, list the addable and removable i-nodes from lowest to
highest in the chosen order and cancel every addable node against the
nearest uncancelled removable node above it (bracket matching with
addable = "(" and removable = ")").  Surviving removable nodes are the
normal nodes and the highest one is good; the lowest surviving addable
node is the one the crystal operator f~_i adds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .combinat import (
    ChargeParams,
    Multipartition,
    Node,
    add_node,
    addable_nodes,
    empty_multipartition,
    format_multipartition,
    rank,
    remove_node,
    removable_nodes,
)
from .errors import DomainError
from .fock import OrderKind, order_key


class PathReplayError(DomainError):
    """A residue word read off one crystal has no path in the other."""


def signature(lam: Multipartition, i: int, order: OrderKind, params: ChargeParams):
    """Return (normal removable nodes, conormal addable nodes), each sorted
    from lowest to highest."""
    cand = [(order_key(g, order, params), 1, g) for g in addable_nodes(lam, i, params)]
    cand += [(order_key(g, order, params), -1, g) for g in removable_nodes(lam, i, params)]
    cand.sort()
    open_addable: list[Node] = []
    normal: list[Node] = []
    for _, sign, g in cand:
        if sign == 1:
            open_addable.append(g)
        elif open_addable:
            open_addable.pop()
        else:
            normal.append(g)
    return normal, open_addable


def normal_nodes(lam, i, order, params) -> list[Node]:
    return signature(lam, i, order, params)[0]


def good_node(lam, i: int, order: OrderKind, params: ChargeParams) -> Optional[Node]:
    normal, _ = signature(lam, i, order, params)
    return normal[-1] if normal else None


def cogood_node(lam, i: int, order: OrderKind, params: ChargeParams) -> Optional[Node]:
    _, conormal = signature(lam, i, order, params)
    return conormal[0] if conormal else None


def add_good_node(lam, i: int, order: OrderKind, params: ChargeParams):
    """Target of the i-labelled crystal edge out of lam, or None."""
    g = cogood_node(lam, i, order, params)
    return None if g is None else add_node(lam, g)


def remove_good_node(lam, i: int, order: OrderKind, params: ChargeParams):
    g = good_node(lam, i, order, params)
    return None if g is None else remove_node(lam, g)


def epsilon(lam, i, order, params) -> int:
    return len(signature(lam, i, order, params)[0])


def phi(lam, i, order, params) -> int:
    return len(signature(lam, i, order, params)[1])


def crystal_path(lam: Multipartition, order: OrderKind, params: ChargeParams) -> list[int]:
    """A residue word i_1, ..., i_n with lam = f~_{i_n} ... f~_{i_1} (empty).

    Built by removing good nodes, smallest residue first.  Raises
    DomainError when lam is not a vertex of the crystal.
    """
    word = []
    cur = lam
    while rank(cur):
        for i in range(params.e):
            g = good_node(cur, i, order, params)
            if g is not None:
                cur = remove_node(cur, g)
                word.append(i)
                break
        else:
            raise DomainError(
                f"{format_multipartition(lam)} is not in the {order.value} crystal of {params}"
            )
    word.reverse()
    return word


def replay(word, order: OrderKind, params: ChargeParams) -> Multipartition:
    lam = empty_multipartition(params.d)
    for i in word:
        nxt = add_good_node(lam, i, order, params)
        if nxt is None:
            raise PathReplayError(f"word {word} leaves the {order.value} crystal of {params}")
        lam = nxt
    return lam


@dataclass
class CrystalGraph:
    order: OrderKind
    params: ChargeParams
    layers: list[list[Multipartition]] = field(default_factory=list)
    edges: list[tuple[Multipartition, int, Multipartition]] = field(default_factory=list)

    @property
    def n_max(self) -> int:
        return len(self.layers) - 1

    def vertices(self) -> list[Multipartition]:
        return [mp for layer in self.layers for mp in layer]

    def layer(self, n: int) -> list[Multipartition]:
        return self.layers[n]

    def to_dot(self) -> str:
        lines = [f'digraph "{self.order.value} crystal {self.params}" {{']
        for mp in self.vertices():
            lines.append(f'  "{format_multipartition(mp)}";')
        for src, i, dst in self.edges:
            lines.append(
                f'  "{format_multipartition(src)}" -> "{format_multipartition(dst)}" [label="{i}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def generate_crystal(order: OrderKind, params: ChargeParams, n_max: int) -> CrystalGraph:
    """Crystal of the module generated by the empty d-partition, up to rank n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    graph = CrystalGraph(order, params, [[empty_multipartition(params.d)]])
    for _ in range(n_max):
        seen: set[Multipartition] = set()
        nxt: list[Multipartition] = []
        for lam in graph.layers[-1]:
            for i in range(params.e):
                mu = add_good_node(lam, i, order, params)
                if mu is None:
                    continue
                graph.edges.append((lam, i, mu))
                if mu not in seen:
                    seen.add(mu)
                    nxt.append(mu)
        nxt.sort(reverse=True)
        graph.layers.append(nxt)
    return graph


def kleshchev_multipartitions(params: ChargeParams, n: int) -> list[Multipartition]:
    return generate_crystal(OrderKind.AM, params, n).layer(n)


def flotw_crystal_layer(params: ChargeParams, n: int) -> list[Multipartition]:
    return generate_crystal(OrderKind.FLOTW, params, n).layer(n)


def bijection_c(params: ChargeParams, n: int) -> dict[Multipartition, Multipartition]:
    """Map each Kleshchev d-partition to the FLOTW d-partition reached by the
    same residue word."""
    return {
        mu: replay(crystal_path(mu, OrderKind.AM, params), OrderKind.FLOTW, params)
        for mu in kleshchev_multipartitions(params, n)
    }
