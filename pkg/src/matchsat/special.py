"""Special instances, their transformation, and the hitting-set instance H*.

A formula is special when every variable occurs positively exactly once
and negatively at least twice, and no clause has two positive literals.
It is *transformed* special when, in addition, each positive occurrence
is a unit clause (x).
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Clause, CnfFormula, is_tautology, lit_var, make_clause
from .hitset import Hypergraph


class NotSpecialError(ValueError):
    pass


def is_special(f: CnfFormula) -> bool:
    for v in f.variables:
        pos, neg = f.occurrence_counts(v)
        if pos != 1 or neg < 2:
            return False
    return all(sum(1 for l in c if l > 0) <= 1 for c in f.clauses)


def is_transformed_special(f: CnfFormula) -> bool:
    return is_special(f) and _units_match_variables(f)


def _units_match_variables(f: CnfFormula) -> bool:
    """Each variable's only positive occurrence is its unit clause; other clauses are all-negative."""
    units = [c[0] for c in f.clauses if len(c) == 1 and c[0] > 0]
    if sorted(units) != sorted(f.variables):
        return False
    return all(all(l < 0 for l in c) for c in f.clauses if not (len(c) == 1 and c[0] > 0))


@dataclass(frozen=True)
class SpecialInstance:
    formula: CnfFormula
    alpha: int

    def __post_init__(self):
        if not is_special(self.formula):
            raise NotSpecialError("formula is not special")


@dataclass(frozen=True)
class Transformed:
    """Result of the transformation.

    ``tautologies`` lists clauses that became tautological while absorbing
    some c(x) − x; they are always satisfied, so they were removed and
    ``alpha`` lowered by one each.  When that happens the formula may no
    longer be special and must go back through the reduction rules.
    """

    formula: CnfFormula
    alpha: int
    tautologies: tuple[tuple[int, ...], ...] = ()

    @property
    def is_transformed_special(self) -> bool:
        return is_transformed_special(self.formula)


def transform_special(s: SpecialInstance | CnfFormula, alpha: int | None = None) -> Transformed:
    """Shrink every c(x) to (x) by moving c(x) − x into all clauses with x̄.

    Variables are processed in increasing index; a processed c(x) stays a
    unit clause because later steps only touch clauses containing some x̄.
    """
    if isinstance(s, CnfFormula):
        s = SpecialInstance(s, 0 if alpha is None else alpha)
    f = s.formula
    clauses: list[set[int] | None] = [set(c) for c in f.clauses]
    tautologies: list[tuple[int, ...]] = []
    for x in sorted(f.variables):
        idx = next((i for i, c in enumerate(clauses) if c is not None and x in c), None)
        if idx is None:
            continue  # c(x) was removed as a tautology
        rest = clauses[idx] - {x}
        if not rest:
            continue
        for j, c in enumerate(clauses):
            if c is None or -x not in c:
                continue
            merged = c | rest
            if is_tautology(merged):
                tautologies.append(tuple(sorted(merged, key=lambda l: (lit_var(l), l))))
                clauses[j] = None
            else:
                clauses[j] = merged
        clauses[idx] = {x}
    out: list[Clause] = [make_clause(c) for c in clauses if c is not None]
    return Transformed(f.replace(out), s.alpha - len(tautologies), tuple(tautologies))


@dataclass(frozen=True)
class HittingInstance:
    """H* with vertices relabelled 1..|V(F)|; ``labels[i - 1]`` is the variable of vertex i.

    ``decided`` is set when the answer follows from k alone.
    """

    hypergraph: Hypergraph
    k: int
    labels: tuple[int, ...]
    decided: bool | None = None


def build_hitting_instance(f: CnfFormula | Transformed, alpha: int | None = None) -> HittingInstance:
    """H*: one edge V(c) for every clause not matched by the unit-clause matching.

    sat(F) >= alpha iff H* has a hitting set of size at most |E(H*)| − k,
    with k = alpha − |V(F)|.
    """
    if isinstance(f, Transformed):
        alpha = f.alpha if alpha is None else alpha
        f = f.formula
    if alpha is None:
        raise TypeError("alpha is required")
    if not _units_match_variables(f):
        raise NotSpecialError("formula is not transformed special")
    labels = tuple(sorted(f.variables))
    index = {v: i + 1 for i, v in enumerate(labels)}
    edges = tuple(
        frozenset(index[lit_var(l)] for l in c) for c in f.clauses if not (len(c) == 1 and c[0] > 0)
    )
    h = Hypergraph(len(labels), edges)
    k = alpha - len(labels)
    decided = True if k <= 0 else (False if k > h.m else None)
    return HittingInstance(h, k, labels, decided)
