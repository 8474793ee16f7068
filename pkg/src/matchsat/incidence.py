"""Variable-clause incidence graph, matchings, expansion and autarkies."""

from __future__ import annotations

from collections import ChainMap, deque
from dataclasses import dataclass
from typing import Hashable, Mapping, Sequence

from .formula import CnfFormula, lit_var


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite graph B_F: live variables on the left, clause indices on the right."""

    var_side: tuple[int, ...]
    num_clauses: int
    adjacency: Mapping[int, tuple[int, ...]]

    @property
    def clause_side(self) -> range:
        return range(self.num_clauses)

    def edges(self) -> set[tuple[int, int]]:
        return {(v, c) for v in self.var_side for c in self.adjacency[v]}

    def neighbours(self, xs) -> set[int]:
        out: set[int] = set()
        for v in xs:
            out.update(self.adjacency.get(v, ()))
        return out


@dataclass(frozen=True)
class Matching:
    pairs: Mapping[int, int]  # variable -> clause index

    def __len__(self) -> int:
        return len(self.pairs)

    def edges(self) -> set[tuple[int, int]]:
        return set(self.pairs.items())


@dataclass(frozen=True)
class AutarkyResult:
    domain: frozenset[int]
    assignment: Mapping[int, bool]
    satisfied_clauses: frozenset[int]


class ExpansionError(ValueError):
    pass


def build_incidence(f: CnfFormula) -> IncidenceGraph:
    adj: dict[int, list[int]] = {}
    for i, c in enumerate(f.clauses):
        for l in c:
            adj.setdefault(lit_var(l), []).append(i)
    var_side = tuple(sorted(adj))
    return IncidenceGraph(var_side, f.m, {v: tuple(adj[v]) for v in var_side})


def _as_graph(g: IncidenceGraph | CnfFormula) -> IncidenceGraph:
    return build_incidence(g) if isinstance(g, CnfFormula) else g


def hopcroft_karp(adj: Mapping[Hashable, Sequence[Hashable]]) -> dict:
    """Maximum matching of a bipartite graph given as left -> right neighbours.

    Iterative DFS keeps deep alternating paths off the Python call stack.
    """
    left = list(adj)
    match_l: dict = {}
    match_r: dict = {}
    dead = -1
    while True:
        dist: dict = {}
        queue = deque()
        for u in left:
            if u not in match_l:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for r in adj[u]:
                w = match_r.get(r)
                if w is None:
                    found = True
                elif w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not found:
            return match_l

        cursor = dict.fromkeys(left, 0)
        for root in left:
            if root in match_l or dist.get(root) != 0:
                continue
            stack = [root]
            rights: list = []
            while stack:
                v = stack[-1]
                nbrs = adj[v]
                moved = False
                while cursor[v] < len(nbrs):
                    r = nbrs[cursor[v]]
                    cursor[v] += 1
                    w = match_r.get(r)
                    if w is None:
                        rights.append(r)
                        for lv, rv in zip(stack, rights):
                            match_l[lv] = rv
                            match_r[rv] = lv
                        stack = []
                        moved = True
                        break
                    if dist.get(w, dead) == dist[v] + 1:
                        rights.append(r)
                        stack.append(w)
                        moved = True
                        break
                if not moved:
                    dist[v] = dead - 1
                    stack.pop()
                    if rights:
                        rights.pop()


def _augment(adj, match_l: dict, match_r: dict, root) -> tuple[bool, set, set]:
    """Try to grow the matching by an augmenting path from ``root``.

    On success the matching is updated in place.  Returns the left and right
    vertices reached by alternating paths from ``root``.
    """
    parent: dict = {}
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for r in adj[u]:
            if r in parent:
                continue
            parent[r] = u
            w = match_r.get(r)
            if w is None:
                while True:
                    u2 = parent[r]
                    prev = match_l.get(u2)
                    match_l[u2] = r
                    match_r[r] = u2
                    if u2 == root:
                        break
                    r = prev
                return True, seen, set(parent)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return False, seen, set(parent)


def maximum_matching(g: IncidenceGraph | CnfFormula) -> Matching:
    g = _as_graph(g)
    return Matching(hopcroft_karp(g.adjacency))


def matching_number(f: CnfFormula | IncidenceGraph) -> int:
    """ν(F)."""
    return len(maximum_matching(f))


def _duplicate_test(adj, base: dict, y: int, q: int):
    """Add q copies of ``y`` on top of a left-saturating matching and try to saturate them.

    Returns None when all copies are matched, otherwise the left vertices
    reached from the first copy that could not be matched.
    """
    match_l = dict(base)
    match_r = {c: v for v, c in base.items()}
    copies = {(y, i): adj[y] for i in range(1, q + 1)}
    adj2 = ChainMap(copies, adj)
    for copy in copies:
        ok, reached, _ = _augment(adj2, match_l, match_r, copy)
        if not ok:
            return reached
    return None


def is_q_expanding(g: IncidenceGraph | CnfFormula, q: int) -> bool:
    """True iff every nonempty variable set X has |N(X)| >= |X| + q.

    Checked through the duplication graphs G_qx: the graph must be
    variable-saturated and stay so after adding q copies of any variable.
    """
    if q not in (0, 1, 2):
        raise ValueError("q must be 0, 1 or 2")
    g = _as_graph(g)
    base = hopcroft_karp(g.adjacency)
    if len(base) < len(g.var_side):
        return False
    if q == 0:
        return True
    return all(_duplicate_test(g.adjacency, base, x, q) is None for x in g.var_side)


def find_deficient_set(g: IncidenceGraph | CnfFormula) -> frozenset[int] | None:
    """For a 1-expanding graph, a set S with |N(S)| = |S| + 1, or None if 2-expanding."""
    g = _as_graph(g)
    base = hopcroft_karp(g.adjacency)
    if len(base) < len(g.var_side):
        raise ExpansionError("graph is not 1-expanding")
    for y in g.var_side:
        if _duplicate_test(g.adjacency, base, y, 1) is not None:
            raise ExpansionError("graph is not 1-expanding")
        reached = _duplicate_test(g.adjacency, base, y, 2)
        if reached is not None:
            s = frozenset(v for v in reached if not isinstance(v, tuple))
            assert len(g.neighbours(s)) == len(s) + 1
            return s
    return None


def _polarity(f: CnfFormula, v: int, clause_index: int) -> bool:
    return v in f.clauses[clause_index]


def find_autarky(f: CnfFormula) -> AutarkyResult:
    """An autarky π on U such that F \\ F_U is 1-expanding (U may be empty).

    Pure literals are peeled first.  On what remains, phase one takes
    everything reachable by alternating paths from the variables a maximum
    matching leaves free, and phase two repeatedly peels off tight sets
    (|N(X)| = |X|) found by the single-copy duplication test.  Each matched
    variable is set to satisfy its partner clause.
    """
    assignment: dict[int, bool] = {}
    removed: set[int] = set()
    changed = True
    while changed:
        changed = False
        for v in sorted(f.variables - assignment.keys()):
            live = [i for i in range(f.m) if i not in removed]
            pos = [i for i in live if v in f.clauses[i]]
            neg = [i for i in live if -v in f.clauses[i]]
            if pos and neg:
                continue
            assignment[v] = bool(pos)
            removed.update(pos or neg)
            changed = True
    kept = [i for i in range(f.m) if i not in removed]
    rest = _matching_autarky(f.drop(removed))
    assignment.update(rest.assignment)
    removed.update(kept[j] for j in rest.satisfied_clauses)
    return AutarkyResult(frozenset(assignment), assignment, frozenset(removed))


def _matching_autarky(f: CnfFormula) -> AutarkyResult:
    g = build_incidence(f)
    match = hopcroft_karp(g.adjacency)
    match_r = {c: v for v, c in match.items()}

    domain: set[int] = set()
    assignment: dict[int, bool] = {}
    removed: set[int] = set()

    def absorb(xs, clauses):
        for v in xs:
            c = match.get(v)
            assignment[v] = _polarity(f, v, c) if c is not None else True
        domain.update(xs)
        removed.update(clauses)

    free = [v for v in g.var_side if v not in match]
    if free:
        seen = set(free)
        reached_c: set[int] = set()
        queue = deque(free)
        while queue:
            u = queue.popleft()
            for c in g.adjacency[u]:
                if c in reached_c:
                    continue
                reached_c.add(c)
                w = match_r[c]  # max matching: no augmenting path, so c is matched
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        absorb(seen, reached_c)

    while True:
        live = [v for v in g.var_side if v not in domain]
        adj = {v: tuple(c for c in g.adjacency[v] if c not in removed) for v in live}
        base = {v: match[v] for v in live}
        for y in live:
            reached = _duplicate_test(adj, base, y, 1)
            if reached is not None:
                xs = {v for v in reached if not isinstance(v, tuple)}
                absorb(xs, {c for v in xs for c in adj[v]})
                break
        else:
            break

    return AutarkyResult(frozenset(domain), assignment, frozenset(removed))


def max_deficiency(f: CnfFormula) -> tuple[int, int]:
    """(δ(F), δ*(F)) with δ* = m − ν(F) by matching duality."""
    return f.m - len(f.variables), f.m - matching_number(f)
