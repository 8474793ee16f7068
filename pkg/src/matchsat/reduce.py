"""Reduction rules, assignment simplification and polarity normalization.

Every rule maps an :class:`Instance` to a :class:`RuleOutcome` (or ``None``
when it does not apply) and satisfies ``sat(old) == sat(new) + alpha_offset``.
Variable choice within a rule is always the lowest eligible index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .formula import Clause, CnfFormula, Instance, is_tautology, lit_var, make_clause
from .incidence import build_incidence, find_autarky, find_deficient_set

PURE_LITERAL = "pure_literal"
RESOLVE_SINGLETONS = "resolve_singletons"
AUTARKY = "autarky"
EXPANSION = "expansion"
RULE_ORDER = (PURE_LITERAL, RESOLVE_SINGLETONS, AUTARKY, EXPANSION)


@dataclass(frozen=True)
class RuleOutcome:
    instance: Instance
    applied: str
    alpha_offset: int


class PreconditionError(ValueError):
    pass


def _outcome(inst: Instance, clauses: Iterable[Clause], rule: str, offset: int) -> RuleOutcome:
    new = inst.rewrite(inst.formula.replace(clauses), rule, offset)
    return RuleOutcome(new, rule, offset)


def rule_pure_literal(inst: Instance) -> RuleOutcome | None:
    """Rule 1: a variable occurring in one polarity only satisfies all its clauses."""
    f = inst.formula
    for v in sorted(f.variables):
        pos, neg = f.occurrence_counts(v)
        if pos == 0 or neg == 0:
            keep = [c for c in f.clauses if v not in c and -v not in c]
            return _outcome(inst, keep, PURE_LITERAL, pos + neg)
    return None


def rule_resolve_singletons(inst: Instance) -> RuleOutcome | None:
    """Rule 2: merge the two clauses of a variable with n(x) = n(x̄) = 1.

    An empty resolvent is dropped (offset 1); a tautological resolvent is
    always satisfied, so it is dropped as well with offset 2.
    """
    f = inst.formula
    for v in sorted(f.variables):
        if f.occurrence_counts(v) != (1, 1):
            continue
        i_pos = next(i for i, c in enumerate(f.clauses) if v in c)
        i_neg = next(i for i, c in enumerate(f.clauses) if -v in c)
        lits = {l for l in f.clauses[i_pos] if l != v} | {l for l in f.clauses[i_neg] if l != -v}
        rest = [c for i, c in enumerate(f.clauses) if i not in (i_pos, i_neg)]
        if not lits:
            return _outcome(inst, rest, RESOLVE_SINGLETONS, 1)
        if is_tautology(lits):
            return _outcome(inst, rest, RESOLVE_SINGLETONS, 2)
        return _outcome(inst, rest + [make_clause(lits)], RESOLVE_SINGLETONS, 1)
    return None


def rule_autarky(inst: Instance) -> RuleOutcome | None:
    """Rule 3: remove the clauses satisfied by an autarky leaving a 1-expanding rest."""
    aut = find_autarky(inst.formula)
    if not aut.domain:
        return None
    f = inst.formula
    return _outcome(inst, f.drop(aut.satisfied_clauses).clauses, AUTARKY, len(aut.satisfied_clauses))


def rule_expansion(inst: Instance) -> RuleOutcome | None:
    """Rule 4: collapse a set S with |N(S)| = |S| + 1 in a 1-expanding formula.

    If F[S] is satisfiable the clauses N(S) go away together.  Otherwise
    they are replaced by the union c' of their literals outside S; an empty
    c' is omitted and a tautological c' (always satisfied) is omitted with
    one extra unit of offset.
    """
    f = inst.formula
    g = build_incidence(f)
    s = find_deficient_set(g)
    if s is None:
        return None
    touched = g.neighbours(s)
    rest = [c for i, c in enumerate(f.clauses) if i not in touched]
    projected, _ = f.project(s)
    if sat_oracle_small(projected):
        return _outcome(inst, rest, EXPANSION, len(touched))
    lits = {l for i in touched for l in f.clauses[i] if lit_var(l) not in s}
    if not lits:
        return _outcome(inst, rest, EXPANSION, len(s))
    if is_tautology(lits):
        return _outcome(inst, rest, EXPANSION, len(s) + 1)
    return _outcome(inst, rest + [make_clause(lits)], EXPANSION, len(s))


RULES: dict[str, Callable[[Instance], RuleOutcome | None]] = {
    PURE_LITERAL: rule_pure_literal,
    RESOLVE_SINGLETONS: rule_resolve_singletons,
    AUTARKY: rule_autarky,
    EXPANSION: rule_expansion,
}


def apply_first_rule(inst: Instance) -> RuleOutcome | None:
    for name in RULE_ORDER:
        out = RULES[name](inst)
        if out is not None:
            return out
    return None


def reduce_exhaustively(inst: Instance) -> Instance:
    while (out := apply_first_rule(inst)) is not None:
        inst = out.instance
    return inst


def sat_oracle_small(f: CnfFormula) -> bool:
    """Complete satisfiability check: unit propagation plus chronological backtracking."""
    return _dpll([set(c) for c in f.clauses])


def _dpll(clauses: list[set[int]]) -> bool:
    while True:
        if not clauses:
            return True
        unit = next((c for c in clauses if len(c) == 1), None)
        if unit is None:
            break
        (lit,) = unit
        clauses = _assign(clauses, lit)
        if clauses is None:
            return False
    lit = next(iter(clauses[0]))
    for choice in (lit, -lit):
        reduced = _assign(clauses, choice)
        if reduced is not None and _dpll(reduced):
            return True
    return False


def _assign(clauses: list[set[int]], lit: int) -> list[set[int]] | None:
    out = []
    for c in clauses:
        if lit in c:
            continue
        if -lit in c:
            c = c - {-lit}
            if not c:
                return None
        out.append(c)
    return out


def simplify(inst: Instance, v: int, val: bool) -> Instance:
    """Fix variable ``v``; satisfied clauses cost one unit of alpha each.

    A clause reduced to nothing (it was the single falsified literal) is
    dropped without touching alpha.
    """
    true_lit = v if val else -v
    satisfied = 0
    out = []
    for c in inst.formula.clauses:
        if true_lit in c:
            satisfied += 1
        elif -true_lit in c:
            if len(c) > 1:
                out.append(tuple(l for l in c if l != -true_lit))
        else:
            out.append(c)
    return inst.rewrite(inst.formula.replace(out), f"set x{v}={'T' if val else 'F'}", satisfied)


def flip_variables(f: CnfFormula, vs: Iterable[int]) -> CnfFormula:
    vs = set(vs)
    return f.replace(tuple(sorted((-l if lit_var(l) in vs else l for l in c), key=lit_var)) for c in f.clauses)


def polarity_flips(f: CnfFormula) -> frozenset[int]:
    """Variables whose literals must be swapped so that n(x) = 1 and n(x̄) >= 2."""
    flips = set()
    for v in f.variables:
        pos, neg = f.occurrence_counts(v)
        if min(pos, neg) != 1 or max(pos, neg) < 2:
            raise PreconditionError(f"x{v} has (n(x), n(x̄)) = {(pos, neg)}; cannot normalize")
        if neg == 1:
            flips.add(v)
    return frozenset(flips)


def normalize_polarity(f: CnfFormula) -> CnfFormula:
    return flip_variables(f, polarity_flips(f))
