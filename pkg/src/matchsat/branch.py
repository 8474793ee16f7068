"""Branching rules, the measure α − ν(F), and the complete decision procedure."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .formula import CnfFormula, Instance
from .hitset import DEFAULT_TRIAL_BUDGET, solve_m_minus_k
from .incidence import matching_number
from .reduce import apply_first_rule, flip_variables, polarity_flips, simplify
from .special import build_hitting_instance, is_special, transform_special

DEFAULT_NODE_BUDGET = 10**6


class NodeBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class MeasureEvent:
    """One step of the search: μ before and after a reduction, branch or transformation."""

    kind: str
    before: int
    after: int
    depth: int


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    max_depth: int = 0
    leaf_special_instances: int = 0
    hitting_set_calls: int = 0
    tautologies: int = 0
    rule_counts: Counter = field(default_factory=Counter)
    measure_log: list[MeasureEvent] | None = None

    def merge(self, other: SearchStats) -> None:
        self.nodes_expanded += other.nodes_expanded
        self.max_depth = max(self.max_depth, other.max_depth)
        self.leaf_special_instances += other.leaf_special_instances
        self.hitting_set_calls += other.hitting_set_calls
        self.tautologies += other.tautologies
        self.rule_counts.update(other.rule_counts)
        if self.measure_log is not None and other.measure_log is not None:
            self.measure_log.extend(other.measure_log)

    def as_dict(self) -> dict:
        return {
            "nodes_expanded": self.nodes_expanded,
            "max_depth": self.max_depth,
            "leaf_special_instances": self.leaf_special_instances,
            "hitting_set_calls": self.hitting_set_calls,
            "tautologies_removed": self.tautologies,
        }


@dataclass(frozen=True)
class SolveResult:
    answer: bool
    k: int
    nu: int
    stats: SearchStats


def measure(inst: Instance) -> int:
    return inst.alpha - matching_number(inst.formula)


def branch_rule1(inst: Instance) -> tuple[Instance, Instance] | None:
    """Branch on the lowest variable with n(x) >= 2 and n(x̄) >= 2; x = true first."""
    f = inst.formula
    for v in sorted(f.variables):
        pos, neg = f.occurrence_counts(v)
        if pos >= 2 and neg >= 2:
            return simplify(inst, v, True), simplify(inst, v, False)
    return None


def branch_rule2(inst: Instance) -> tuple[Instance, Instance] | None:
    """On the first clause with two positive literals x < y, branch on x = false or y = false."""
    for c in inst.formula.clauses:
        positives = [l for l in c if l > 0]
        if len(positives) >= 2:
            x, y = positives[:2]
            return simplify(inst, x, False), simplify(inst, y, False)
    return None


class _Search:
    def __init__(self, mode, seed, node_budget, trial_budget, parallel, trace_measure):
        self.mode = mode
        self.seed = seed
        self.node_budget = node_budget
        self.trial_budget = trial_budget
        self.parallel = parallel
        self.trace_measure = trace_measure
        self.stats = SearchStats(measure_log=[] if trace_measure else None)

    def _fork(self) -> _Search:
        return _Search(self.mode, self.seed, self.node_budget, self.trial_budget, False, self.trace_measure)

    def _log(self, kind, before, after_inst, depth):
        if self.trace_measure:
            self.stats.measure_log.append(MeasureEvent(kind, before, measure(after_inst), depth))

    def run(self, inst: Instance, depth: int = 0) -> bool:
        st = self.stats
        st.nodes_expanded += 1
        if st.nodes_expanded > self.node_budget:
            raise NodeBudgetExceeded(f"search exceeded the node budget of {self.node_budget}")
        st.max_depth = max(st.max_depth, depth)
        while True:
            mu = measure(inst)
            if mu <= 0:
                return True

            out = apply_first_rule(inst)
            if out is not None:
                st.rule_counts[out.applied] += 1
                self._log(out.applied, mu, out.instance, depth)
                inst = out.instance
                continue

            children = branch_rule1(inst)
            kind = "branch1"
            if children is None:
                flips = polarity_flips(inst.formula)
                if flips:
                    inst = Instance(flip_variables(inst.formula, flips), inst.alpha, inst.trace + (("normalize", 0),))
                children = branch_rule2(inst)
                kind = "branch2"
            if children is not None:
                st.rule_counts[kind] += 1
                for child in children:
                    self._log(kind, mu, child, depth)
                return self._branch(children, depth)

            if not is_special(inst.formula):  # pragma: no cover - guaranteed by the rules above
                raise AssertionError(f"leaf is not special: {inst.formula}")
            st.leaf_special_instances += 1
            t = transform_special(inst.formula, inst.alpha)
            if t.tautologies:
                st.tautologies += len(t.tautologies)
                st.rule_counts["transform_tautology"] += 1
                nxt = inst.rewrite(t.formula, "transform", inst.alpha - t.alpha)
                self._log("transform", mu, nxt, depth)
                inst = nxt
                continue
            hi = build_hitting_instance(t)
            if hi.decided is not None:
                return hi.decided
            st.hitting_set_calls += 1
            return solve_m_minus_k(hi.hypergraph, hi.k, mode=self.mode, seed=self.seed, budget=self.trial_budget).answer

    def _branch(self, children, depth) -> bool:
        if not (self.parallel and depth == 0):
            return any(self.run(child, depth + 1) for child in children)
        forks = [self._fork() for _ in children]
        with ThreadPoolExecutor(max_workers=len(children)) as pool:
            answers = list(pool.map(lambda fc: fc[0].run(fc[1], depth + 1), zip(forks, children)))
        for fk in forks:
            self.stats.merge(fk.stats)
        return any(answers)


def solve(
    inst: Instance | CnfFormula,
    alpha: int | None = None,
    *,
    mode: str = "randomized",
    seed: int = 0,
    node_budget: int = DEFAULT_NODE_BUDGET,
    trial_budget: int = DEFAULT_TRIAL_BUDGET,
    parallel: bool = False,
    trace_measure: bool = False,
) -> SolveResult:
    """Decide sat(F) >= alpha.

    Runs the reduction rules (first applicable, restarting after each
    change), then Branching Rule 1, then polarity normalization and
    Branching Rule 2; instances where nothing applies are special and are
    answered through the hitting-set reduction.
    """
    if isinstance(inst, CnfFormula):
        if alpha is None:
            raise TypeError("alpha is required with a bare formula")
        inst = Instance(inst, alpha)
    nu = matching_number(inst.formula)
    search = _Search(mode, seed, node_budget, trial_budget, parallel, trace_measure)
    answer = search.run(inst)
    return SolveResult(answer, inst.alpha - nu, nu, search.stats)
