"""Independent brute-force oracles used only by the tests.

Nothing here calls into the package's algorithms; each checker works from
the definitions directly (plain enumeration, no numpy, no matchings).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product


def sat_value(clauses, variables=None) -> int:
    """max over assignments of satisfied clauses, by itertools.product."""
    if variables is None:
        variables = sorted({abs(l) for c in clauses for l in c})
    best = 0
    for bits in product((False, True), repeat=len(variables)):
        val = dict(zip(variables, bits))
        got = sum(1 for c in clauses if any(val[abs(l)] == (l > 0) for l in c))
        best = max(best, got)
    return best


def satisfiable(clauses) -> bool:
    return sat_value(clauses) == len(clauses)


def var_sets(clauses):
    return [frozenset(abs(l) for l in c) for c in clauses]


def matching_size(clauses) -> int:
    """Largest set of (variable, clause) pairs with distinct ends, by exhaustive recursion."""
    vsets = var_sets(clauses)
    variables = sorted(set().union(*vsets)) if vsets else []

    @lru_cache(maxsize=None)
    def rec(i, used):
        if i == len(variables):
            return 0
        best = rec(i + 1, used)
        for j, vs in enumerate(vsets):
            if not used >> j & 1 and variables[i] in vs:
                best = max(best, 1 + rec(i + 1, used | 1 << j))
        return best

    return rec(0, 0)


def neighbourhood(clauses, xs) -> set[int]:
    xs = set(xs)
    return {j for j, c in enumerate(clauses) if any(abs(l) in xs for l in c)}


def q_expanding(clauses, q) -> bool:
    variables = sorted({abs(l) for c in clauses for l in c})
    for r in range(1, len(variables) + 1):
        for xs in combinations(variables, r):
            if len(neighbourhood(clauses, xs)) < r + q:
                return False
    return True


def max_deficiency(clauses) -> int:
    best = 0
    for r in range(1, len(clauses) + 1):
        for sub in combinations(range(len(clauses)), r):
            nv = len({abs(l) for j in sub for l in clauses[j]})
            best = max(best, r - nv)
    return best


def hitting_number(edges) -> int:
    verts = sorted(set().union(*edges)) if edges else []
    for r in range(len(verts) + 1):
        for s in combinations(verts, r):
            if all(e & set(s) for e in edges):
                return r
    raise AssertionError


def mini_hitting_exists(edges, k) -> bool:
    verts = sorted(set().union(*edges)) if edges else []
    for r in range(0, k + 1):
        for s in combinations(verts, r):
            if sum(1 for e in edges if e & set(s)) >= r + k:
                return True
    return False


def colorful_gamma(edges, colors, q):
    """γ[X] for all X by enumerating every vertex set W."""
    verts = sorted(set().union(*edges)) if edges else []
    reach = {}
    for r in range(len(verts) + 1):
        for w in combinations(verts, r):
            mask = 0
            for e, col in zip(edges, colors):
                if e & set(w):
                    mask |= 1 << col
            reach.setdefault(mask, r)
    gamma = []
    for x in range(1 << q):
        sizes = [r for mask, r in reach.items() if mask & x == x]
        gamma.append(min(sizes) if sizes else float("inf"))
    return gamma


def partitions(s, l):
    """Partitions of s into l parts via all compositions, sorted and deduplicated."""
    out = set()

    def comp(rem, parts):
        if len(parts) == l:
            if rem == 0:
                out.add(tuple(sorted(parts, reverse=True)))
            return
        for a in range(1, rem + 1):
            comp(rem - a, parts + [a])

    comp(s, [])
    return out
