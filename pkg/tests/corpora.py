"""Seeded instance streams shared by the unit and acceptance tests."""

from __future__ import annotations

import numpy as np

from matchsat.formula import CnfFormula, Instance
from matchsat.genoracle import GenConfig, GenerationError, gen_random
from matchsat.hitset import Hypergraph
from matchsat.incidence import is_q_expanding, matching_number
from matchsat.reduce import RULES
from matchsat.special import is_special, transform_special


def uniform(seed, max_vars=10, max_clauses=24, lens=(1, 4)) -> CnfFormula:
    rng = np.random.default_rng([seed, 9001])
    n = int(rng.integers(1, max_vars + 1))
    m = int(rng.integers(1, max_clauses + 1))
    return gen_random(GenConfig(seed=seed, num_vars=n, num_clauses=m, clause_len_range=lens))


def _rule4_candidate(seed) -> CnfFormula:
    # dense formulas are usually 1-expanding; trimming clauses makes 2-expansion fail often
    rng = np.random.default_rng([seed, 4])
    n = int(rng.integers(2, 9))
    m = int(rng.integers(n + 1, 2 * n + 3))
    return gen_random(GenConfig(seed=seed, num_vars=n, num_clauses=m, clause_len_range=(1, 3)))


def rule_applicable(rule: str, count: int, max_seed: int = 200_000):
    """(seed, Instance) pairs on which ``rule`` applies, all with n <= 10."""
    fn = RULES[rule]
    found = []
    for seed in range(max_seed):
        f = _rule4_candidate(seed) if rule == "expansion" else uniform(seed)
        if rule == "expansion" and not is_q_expanding(f, 1):
            continue
        inst = Instance(f, matching_number(f) + 1)
        out = fn(inst)
        if out is not None:
            found.append((inst, out))
            if len(found) == count:
                return found
    raise AssertionError(f"only {len(found)} instances for {rule}")


def special_instances(count: int, tautology_free: bool = False, transformed: bool = False, max_seed: int = 100_000):
    """(seed, formula) pairs of special formulas with n <= 8.

    ``tautology_free`` keeps only formulas whose transformation creates no
    tautology; ``transformed`` returns the transformed formula instead.
    """
    out = []
    for seed in range(max_seed):
        rng = np.random.default_rng([seed, 5])
        n = int(rng.integers(1, 9))
        m = int(rng.integers(n, n + 9))
        try:
            f = gen_random(GenConfig(seed=seed, num_vars=n, num_clauses=m, clause_len_range=(1, 3), family="special"))
        except GenerationError:
            continue
        assert is_special(f)
        if tautology_free or transformed:
            t = transform_special(f, 0)
            if t.tautologies:
                continue
            if transformed:
                f = t.formula
        out.append((seed, f))
        if len(out) == count:
            return out
    raise AssertionError(f"only {len(out)} special instances")


def random_hypergraph(seed, max_n=8, max_m=10, max_size=3):
    rng = np.random.default_rng([seed, 77])
    n = int(rng.integers(1, max_n + 1))
    m = int(rng.integers(1, max_m + 1))
    edges = [
        rng.choice(n, size=int(rng.integers(1, min(max_size, n) + 1)), replace=False) + 1 for _ in range(m)
    ]
    return Hypergraph.from_lists([map(int, e) for e in edges], num_vertices=n)
