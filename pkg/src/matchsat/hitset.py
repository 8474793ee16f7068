"""(m−k)-Hitting Set: brute force, colorful-hitting-set DP and color coding.

Hyperedges are frozensets of 1-based vertex indices; parallel edges are
kept.  Colors are 0-based (``0 .. q-1``).
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

BRUTE_VERTEX_LIMIT = 20
MAX_COLORS = 62
DEFAULT_TRIAL_BUDGET = 100_000


class HypergraphError(ValueError):
    pass


class GuardError(ValueError):
    """Input exceeds the size guard of a brute-force routine."""


@dataclass(frozen=True)
class Hypergraph:
    num_vertices: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        edges = tuple(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if not e:
                raise HypergraphError("empty hyperedge")
            if min(e) < 1 or max(e) > self.num_vertices:
                raise HypergraphError(f"edge {sorted(e)} outside 1..{self.num_vertices}")

    @classmethod
    def from_lists(cls, edges: Iterable[Iterable[int]], num_vertices: int | None = None) -> Hypergraph:
        es = tuple(frozenset(e) for e in edges)
        if num_vertices is None:
            num_vertices = max((max(e) for e in es if e), default=0)
        return cls(num_vertices, es)

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if v in e]

    def edge_masks(self) -> dict[int, int]:
        """Bitmask over edge indices for every vertex of positive degree."""
        masks: dict[int, int] = {}
        for i, e in enumerate(self.edges):
            for v in e:
                masks[v] = masks.get(v, 0) | (1 << i)
        return masks

    def covered(self, s: Iterable[int]) -> int:
        """|F[S]|: number of edges meeting ``s``."""
        s = set(s)
        return sum(1 for e in self.edges if e & s)

    def is_hitting_set(self, s: Iterable[int]) -> bool:
        s = set(s)
        return all(e & s for e in self.edges)

    def to_text(self) -> str:
        lines = [f"h {self.num_vertices} {self.m}"]
        lines.extend(" ".join(map(str, sorted(e))) for e in self.edges)
        return "\n".join(lines) + "\n"


def parse_hypergraph(source) -> Hypergraph:
    """Read ``h <n> <m>`` followed by m lines of vertex indices; ``c`` lines are comments."""
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    header = None
    edges = []
    for lineno, raw in enumerate(io.StringIO(source), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if header is None:
            if parts[0] != "h" or len(parts) != 3:
                raise HypergraphError(f"line {lineno}: expected 'h <n> <m>' header")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise HypergraphError(f"line {lineno}: malformed header") from None
            continue
        try:
            e = frozenset(int(p) for p in parts)
        except ValueError:
            raise HypergraphError(f"line {lineno}: non-integer vertex") from None
        if any(v < 1 or v > header[0] for v in e):
            raise HypergraphError(f"line {lineno}: vertex outside 1..{header[0]}")
        edges.append(e)
    if header is None:
        raise HypergraphError("missing 'h <n> <m>' header")
    if len(edges) != header[1]:
        raise HypergraphError(f"header declares {header[1]} edges, found {len(edges)}")
    return Hypergraph(header[0], tuple(edges))


def brute_min_hitting_set(h: Hypergraph) -> frozenset[int]:
    """A minimum hitting set by enumerating vertex subsets in order of size."""
    masks = h.edge_masks()
    if len(masks) > BRUTE_VERTEX_LIMIT:
        raise GuardError(f"{len(masks)} non-isolated vertices exceed the brute-force limit {BRUTE_VERTEX_LIMIT}")
    full = (1 << h.m) - 1
    verts = sorted(masks)
    for size in range(len(verts) + 1):
        for combo in combinations(verts, size):
            acc = 0
            for v in combo:
                acc |= masks[v]
            if acc == full:
                return frozenset(combo)
    raise AssertionError("unreachable: all vertices form a hitting set")


def min_hitting_set_size(h: Hypergraph) -> int:
    """τ(H)."""
    return len(brute_min_hitting_set(h))


# ---------------------------------------------------------------- colorful DP


@dataclass(frozen=True)
class Coloring:
    edge_colors: tuple[int, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "edge_colors", tuple(int(c) for c in self.edge_colors))
        if not 1 <= self.q <= MAX_COLORS:
            raise GuardError(f"q={self.q} outside 1..{MAX_COLORS}")
        if any(not 0 <= c < self.q for c in self.edge_colors):
            raise ValueError("color out of range")


def _vertex_color_masks(h: Hypergraph, chi: Coloring) -> dict[int, int]:
    if len(chi.edge_colors) != h.m:
        raise ValueError("coloring length differs from edge count")
    masks: dict[int, int] = {}
    for e, col in zip(h.edges, chi.edge_colors):
        bit = 1 << col
        for v in e:
            masks[v] = masks.get(v, 0) | bit
    return masks


def colorful_table(h: Hypergraph, chi: Coloring) -> list[float]:
    """γ[X] for every color subset X (bitmask index): size of a smallest W with X ⊆ χ(W)."""
    masks = set(_vertex_color_masks(h, chi).values())
    return _fill_gamma(masks, chi.q)


def _fill_gamma(masks: Iterable[int], q: int) -> list[float]:
    masks = sorted(set(masks))
    gamma: list[float] = [math.inf] * (1 << q)
    gamma[0] = 0
    # X & ~m < X whenever m meets X, so ascending order is a valid fill order
    for x in range(1, 1 << q):
        best = math.inf
        for m in masks:
            if m & x:
                cand = gamma[x & ~m] + 1
                if cand < best:
                    best = cand
        gamma[x] = best
    return gamma


def dp_colorful_hitting_set(h: Hypergraph, chi: Coloring) -> frozenset[int] | None:
    """A minimum W with χ(W) = [q], or None when some color class is empty."""
    if set(chi.edge_colors) != set(range(chi.q)):
        return None
    vmask = _vertex_color_masks(h, chi)
    by_mask: dict[int, int] = {}
    for v in sorted(vmask):
        by_mask.setdefault(vmask[v], v)
    gamma = _fill_gamma(by_mask, chi.q)
    x = (1 << chi.q) - 1
    if gamma[x] == math.inf:
        return None
    chosen = []
    while x:
        for m, v in by_mask.items():
            if m & x and gamma[x & ~m] + 1 == gamma[x]:
                chosen.append(v)
                x &= ~m
                break
        else:  # pragma: no cover - table is consistent by construction
            raise AssertionError("back-tracking failed")
    return frozenset(chosen)


# ------------------------------------------------------- mini hitting sets


@dataclass(frozen=True)
class MiniHittingSet:
    vertices: frozenset[int]


def is_mini_hitting_set(h: Hypergraph, s: Iterable[int], k: int) -> bool:
    s = set(s)
    return len(s) <= k and h.covered(s) >= len(s) + k


class Inconclusive(RuntimeError):
    """Randomized search would exceed its trial budget."""


def trial_count(k: int) -> int:
    return math.ceil(math.exp(2 * k))


def _trial_rng(seed: int, p: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, p, trial])


def color_coding_search(
    h: Hypergraph, k: int, seed: int = 0, trials: int | None = None, budget: int = DEFAULT_TRIAL_BUDGET
) -> MiniHittingSet | None:
    """Randomized k-mini-hitting-set search.

    For each size p = 1..k, color the edges uniformly with p + k colors and
    look for a colorful hitting set of at most p vertices; repeat
    ``trials`` times (default ⌈e^{2k}⌉).  Raises :class:`Inconclusive` if
    the trial count exceeds ``budget``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if trials is None:
        trials = trial_count(k)
    if trials > budget:
        raise Inconclusive(f"{trials} trials exceed the budget of {budget}")
    for p in range(1, k + 1):
        q = p + k
        if q > h.m:
            break
        for t in range(trials):
            colors = _trial_rng(seed, p, t).integers(0, q, size=h.m)
            w = dp_colorful_hitting_set(h, Coloring(tuple(colors), q))
            if w is not None and len(w) <= p:
                assert is_mini_hitting_set(h, w, k)
                return MiniHittingSet(w)
    return None


def exact_mini_search(h: Hypergraph, k: int) -> MiniHittingSet | None:
    """Depth-first enumeration of vertex sets of size <= k, pruned by degree sums.

    Vertices are scanned in non-increasing degree.  A partial set of s
    vertices covering c edges is abandoned once c plus the degrees of the
    next r = min(k - s, remaining) vertices falls short of s + r + k.
    Degrees are at least 1, so the largest r gives the loosest bound.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    masks = h.edge_masks()
    order = sorted(masks, key=lambda v: (-masks[v].bit_count(), v))
    degs = [masks[v].bit_count() for v in order]

    def dfs(start: int, chosen: list[int], acc: int) -> list[int] | None:
        s = len(chosen)
        if s and acc.bit_count() >= s + k:
            return list(chosen)
        if s == k:
            return None
        for i in range(start, len(order)):
            room = min(k - s, len(order) - i)
            if acc.bit_count() + sum(degs[i : i + room]) < s + room + k:
                break
            chosen.append(order[i])
            found = dfs(i + 1, chosen, acc | masks[order[i]])
            chosen.pop()
            if found is not None:
                return found
        return None

    found = dfs(0, [], 0)
    return None if found is None else MiniHittingSet(frozenset(found))


def find_mini_hitting_set(
    h: Hypergraph, k: int, mode: str = "randomized", seed: int = 0, budget: int = DEFAULT_TRIAL_BUDGET
) -> MiniHittingSet | None:
    """A k-mini-hitting set, or None.

    ``exact`` mode certifies absence.  ``randomized`` mode runs color coding
    and falls back to ``exact`` only when the trial budget would be
    exceeded; a None from it means "not found".
    """
    if mode == "exact":
        return exact_mini_search(h, k)
    if mode != "randomized":
        raise ValueError(f"unknown mode {mode!r}")
    try:
        return color_coding_search(h, k, seed=seed, budget=budget)
    except Inconclusive:
        return exact_mini_search(h, k)


def extend_to_hitting_set(h: Hypergraph, s: MiniHittingSet | Iterable[int], k: int) -> frozenset[int]:
    """Grow a k-mini-hitting set into a hitting set of size <= m − k.

    Each edge missed so far contributes its smallest vertex.
    """
    verts = set(s.vertices if isinstance(s, MiniHittingSet) else s)
    if not is_mini_hitting_set(h, verts, k):
        raise ValueError("not a k-mini-hitting set")
    for e in h.edges:
        if not e & verts:
            verts.add(min(e))
    assert len(verts) <= h.m - k
    return frozenset(verts)


@dataclass(frozen=True)
class HittingSetAnswer:
    answer: bool
    hitting_set: frozenset[int] | None
    method: str


def solve_m_minus_k(
    h: Hypergraph, k: int, mode: str = "randomized", seed: int = 0, budget: int = DEFAULT_TRIAL_BUDGET
) -> HittingSetAnswer:
    """Decide whether H has a hitting set of size at most m − k.

    A randomized miss is confirmed by the exact search, so the answer is
    always exact; only the work done differs between modes.
    """
    if k <= 0:
        return HittingSetAnswer(True, frozenset(min(e) for e in h.edges), "trivial")
    if k > h.m:
        return HittingSetAnswer(False, None, "trivial")
    mini = find_mini_hitting_set(h, k, mode=mode, seed=seed, budget=budget)
    method = mode
    if mini is None and mode == "randomized":
        mini = exact_mini_search(h, k)
        method = "exact-fallback"
    if mini is None:
        return HittingSetAnswer(False, None, method)
    return HittingSetAnswer(True, extend_to_hitting_set(h, mini, k), method)


def brute_decide(h: Hypergraph, k: int) -> bool:
    """Oracle: τ(H) <= m − k."""
    return min_hitting_set_size(h) <= h.m - k
