"""Brute-force MaxSat, the hypergraph-to-CNF reduction, and seeded instance generators.

All randomness comes from ``numpy.random.default_rng(seed)`` (PCG64 seeded
through SeedSequence), so a seed fixes the instance on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .formula import CnfFormula, make_clause
from .hitset import GuardError, Hypergraph

BRUTE_VAR_LIMIT = 20
FAMILIES = ("uniform", "special", "hypergraph", "hypergraph-reduction")


class GenerationError(ValueError):
    pass


def brute_maxsat(f: CnfFormula) -> int:
    """sat(F) by enumerating all 2^n assignments of the live variables."""
    vs = sorted(f.variables)
    n = len(vs)
    if n > BRUTE_VAR_LIMIT:
        raise GuardError(f"{n} variables exceed the brute-force limit {BRUTE_VAR_LIMIT}")
    if not f.clauses:
        return 0
    col = {v: i for i, v in enumerate(vs)}
    pos = np.zeros((n, f.m), dtype=np.int32)
    neg = np.zeros((n, f.m), dtype=np.int32)
    for j, c in enumerate(f.clauses):
        for l in c:
            (pos if l > 0 else neg)[col[abs(l)], j] = 1
    shifts = np.arange(n, dtype=np.int64)
    best = 0
    total = 1 << n
    chunk = 1 << min(n, 15)
    for start in range(0, total, chunk):
        a = np.arange(start, min(total, start + chunk), dtype=np.int64)
        bits = ((a[:, None] >> shifts) & 1).astype(np.int32)
        sat = ((bits @ pos) > 0) | (((1 - bits) @ neg) > 0)
        best = max(best, int(sat.sum(axis=1).max()))
        if best == f.m:
            break
    return best


def hypergraph_to_cnf(h: Hypergraph) -> CnfFormula:
    """One unit clause (x) per vertex plus one all-negative clause per edge.

    H has a hitting set of size m − k iff sat(F) >= n + k.
    """
    units = [(v,) for v in range(1, h.num_vertices + 1)]
    negs = [make_clause(-v for v in e) for e in h.edges]
    return CnfFormula(h.num_vertices, tuple(units + negs))


@dataclass(frozen=True)
class GenConfig:
    """Generator settings.

    For the hypergraph families ``num_vars`` is the vertex count,
    ``num_clauses`` the edge count and ``clause_len_range`` the edge sizes.
    """

    seed: int = 0
    num_vars: int = 8
    num_clauses: int = 16
    clause_len_range: tuple[int, int] = (1, 4)
    family: str = "uniform"

    def __post_init__(self):
        lo, hi = self.clause_len_range
        if self.family not in FAMILIES:
            raise GenerationError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if lo < 1 or hi < lo:
            raise GenerationError(f"bad length range {self.clause_len_range}")
        if self.num_vars < 0 or self.num_clauses < 0:
            raise GenerationError("counts must be non-negative")


def _lengths(rng, lo, hi, n, count):
    hi = min(hi, n)
    if count and lo > hi:
        raise GenerationError(f"cannot draw clauses of length >= {lo} over {n} variables")
    return rng.integers(lo, hi + 1, size=count)


def _uniform(cfg: GenConfig, rng) -> CnfFormula:
    n, m = cfg.num_vars, cfg.num_clauses
    clauses = []
    for length in _lengths(rng, *cfg.clause_len_range, n, m):
        vs = rng.choice(n, size=int(length), replace=False) + 1
        signs = rng.integers(0, 2, size=int(length))
        clauses.append(make_clause(int(v) if s else -int(v) for v, s in zip(vs, signs)))
    return CnfFormula(n, tuple(clauses))


def _special(cfg: GenConfig, rng) -> CnfFormula:
    """Build c(x) = x plus negative literals for each x, then all-negative clauses.

    Variables still short of two negative occurrences are added to clauses
    with spare room (never to a clause that already mentions them).
    """
    n, m = cfg.num_vars, cfg.num_clauses
    lo, hi = cfg.clause_len_range
    if m < n:
        raise GenerationError("special family needs at least one clause per variable")
    clauses: list[set[int]] = []
    for x, length in zip(range(1, n + 1), _lengths(rng, lo, hi, n, n)):
        others = [v for v in range(1, n + 1) if v != x]
        negs = rng.choice(others, size=int(length) - 1, replace=False) if length > 1 else []
        clauses.append({x} | {-int(v) for v in negs})
    for length in _lengths(rng, lo, hi, n, m - n):
        vs = rng.choice(n, size=int(length), replace=False) + 1
        clauses.append({-int(v) for v in vs})
    for x in range(1, n + 1):
        need = 2 - sum(1 for c in clauses if -x in c)
        if need <= 0:
            continue
        room = [j for j, c in enumerate(clauses) if len(c) < hi and x not in c and -x not in c]
        if len(room) < need:
            raise GenerationError(f"no room for two occurrences of ¬x{x}; raise clause count or length")
        for j in rng.choice(room, size=need, replace=False):
            clauses[int(j)].add(-x)
    return CnfFormula(n, tuple(make_clause(c) for c in clauses))


def gen_hypergraph(cfg: GenConfig, rng=None) -> Hypergraph:
    rng = np.random.default_rng(cfg.seed) if rng is None else rng
    n, m = cfg.num_vars, cfg.num_clauses
    edges = []
    for size in _lengths(rng, *cfg.clause_len_range, n, m):
        edges.append(frozenset(int(v) + 1 for v in rng.choice(n, size=int(size), replace=False)))
    return Hypergraph(n, tuple(edges))


def gen_random(cfg: GenConfig) -> CnfFormula | Hypergraph:
    rng = np.random.default_rng(cfg.seed)
    if cfg.family == "uniform":
        return _uniform(cfg, rng)
    if cfg.family == "special":
        return _special(cfg, rng)
    h = gen_hypergraph(cfg, rng)
    return h if cfg.family == "hypergraph" else hypergraph_to_cnf(h)
