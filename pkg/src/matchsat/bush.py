"""Integer partitions, the augmented incidence graph B*_H, and a brute-force bush finder.

A bush of dimension (a1, ..., ap) is a triangle (x, y, z) plus p disjoint
stars K_{1,ai}, with y adjacent to one central vertex of every star.
B*_H is the vertex/edge incidence graph of H plus a triangle whose y is
adjacent to every vertex node.  H has a k-mini-hitting set iff B*_H
contains a bush with p <= k stars and a1 + ... + ap = p + k.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterator

from .hitset import GuardError, Hypergraph

BUSH_SIZE_LIMIT = 12

Node = Hashable
TRIANGLE = (("t", "x"), ("t", "y"), ("t", "z"))


def generate_partitions(s: int, l: int) -> list[tuple[int, ...]]:
    """All partitions of ``s`` into exactly ``l`` positive parts, parts non-increasing."""
    if l < 1 or l > s:
        return []
    return list(_parts(s, l, s))


def _parts(s: int, l: int, cap: int) -> Iterator[tuple[int, ...]]:
    if l == 1:
        if s <= cap:
            yield (s,)
        return
    # the first part must leave at least one unit for each of the other l - 1 parts
    for first in range(min(cap, s - (l - 1)), 0, -1):
        if first * l < s:
            break
        for rest in _parts(s - first, l - 1, first):
            yield (first,) + rest


def partition_count(s: int) -> int:
    return sum(len(generate_partitions(s, l)) for l in range(1, s + 1))


def bush_dimensions(k: int) -> Iterator[tuple[int, ...]]:
    """Dimensions allowed for a k-mini-hitting set: p <= k stars with total size p + k."""
    if k == 0:
        yield ()
        return
    for p in range(1, k + 1):
        yield from generate_partitions(p + k, p)


@dataclass(frozen=True)
class AugmentedIncidence:
    """B*_H.  Nodes are ``("v", i)`` for vertices, ``("e", j)`` for edges and the triangle nodes."""

    vertex_nodes: tuple[Node, ...]
    edge_nodes: tuple[Node, ...]
    triangle: tuple[Node, Node, Node]
    adjacency: dict[Node, frozenset[Node]]

    @property
    def nodes(self) -> tuple[Node, ...]:
        return self.vertex_nodes + self.edge_nodes + self.triangle

    def edge_set(self) -> set[frozenset[Node]]:
        return {frozenset((u, w)) for u, nbrs in self.adjacency.items() for w in nbrs}


def build_augmented_incidence(h: Hypergraph) -> AugmentedIncidence:
    vnodes = tuple(("v", i) for i in range(1, h.num_vertices + 1))
    enodes = tuple(("e", j) for j in range(h.m))
    adj: dict[Node, set[Node]] = {u: set() for u in vnodes + enodes + TRIANGLE}

    def link(a, b):
        adj[a].add(b)
        adj[b].add(a)

    for j, e in enumerate(h.edges):
        for v in e:
            link(("v", v), ("e", j))
    x, y, z = TRIANGLE
    link(x, y)
    link(y, z)
    link(z, x)
    for u in vnodes:
        link(y, u)
    return AugmentedIncidence(vnodes, enodes, TRIANGLE, {u: frozenset(n) for u, n in adj.items()})


@dataclass(frozen=True)
class Bush:
    """An embedding: triangle images and, per star, (center, leaves)."""

    triangle: tuple[Node, Node, Node]
    stars: tuple[tuple[Node, tuple[Node, ...]], ...]


def find_bush_small(h: Hypergraph, dim: tuple[int, ...]) -> Bush | None:
    """Exhaustive search for a subgraph of B*_H isomorphic to the bush of dimension ``dim``.

    Tries every ordered triangle, every tuple of distinct star centers
    adjacent to the triangle's y, and every disjoint choice of leaves.
    """
    if h.num_vertices + h.m > BUSH_SIZE_LIMIT:
        raise GuardError(f"n + m = {h.num_vertices + h.m} exceeds {BUSH_SIZE_LIMIT}")
    if any(a < 1 for a in dim):
        raise ValueError("star sizes must be positive")
    g = build_augmented_incidence(h)
    adj = g.adjacency
    for tx, ty, tz in _ordered_triangles(adj):
        used = {tx, ty, tz}
        candidates = sorted(adj[ty] - used)
        stars = _place_stars(adj, list(dim), candidates, used)
        if stars is not None:
            return Bush((tx, ty, tz), tuple(stars))
    return None


def bush_exists_small(h: Hypergraph, dim: tuple[int, ...]) -> bool:
    return find_bush_small(h, dim) is not None


def _ordered_triangles(adj):
    for a in adj:
        for b in adj[a]:
            for c in adj[a] & adj[b]:
                if len({a, b, c}) == 3:
                    yield a, b, c


def _place_stars(adj, sizes, candidates, used):
    if not sizes:
        return []
    a, rest = sizes[0], sizes[1:]
    for center in candidates:
        if center in used:
            continue
        free = sorted(adj[center] - used - {center})
        for leaves in combinations(free, a):
            taken = {center, *leaves}
            more = _place_stars(adj, rest, candidates, used | taken)
            if more is not None:
                return [(center, leaves)] + more
    return None


def mini_hitting_set_via_bush(h: Hypergraph, k: int) -> bool:
    """k-mini-hitting-set existence decided through bush search."""
    return any(bush_exists_small(h, dim) for dim in bush_dimensions(k))

