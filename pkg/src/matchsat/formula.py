"""CNF data model, occurrence statistics and DIMACS I/O.

Literals are nonzero ints in DIMACS convention: ``v`` is the positive
literal of variable ``v`` and ``-v`` its negation.  A clause is a tuple of
literals sorted by variable index with no repeated variable.  Formulas are
immutable; every rewrite returns a new object and keeps variable indices
stable (variables that drop out are simply no longer live).
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

Clause = tuple[int, ...]
Assignment = Mapping[int, bool]


class FormulaError(ValueError):
    """Invalid clause or formula construction."""


class TautologyError(FormulaError):
    pass


class EmptyClauseError(FormulaError):
    pass


class DimacsError(ValueError):
    """Base class for DIMACS parse errors; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DimacsHeaderError(DimacsError):
    pass


class DimacsTautologyError(DimacsError):
    pass


class DimacsEmptyClauseError(DimacsError):
    pass


class DimacsRangeError(DimacsError):
    pass


class DimacsCountError(DimacsError):
    pass


def lit_var(lit: int) -> int:
    return lit if lit > 0 else -lit


def is_tautology(lits: Iterable[int]) -> bool:
    s = set(lits)
    return any(-l in s for l in s)


def make_clause(lits: Iterable[int]) -> Clause:
    """Canonical clause from literals; duplicates collapse.

    Raises EmptyClauseError or TautologyError for illegal clauses.
    """
    s = set(lits)
    if not s:
        raise EmptyClauseError("empty clause")
    if 0 in s:
        raise FormulaError("0 is not a literal")
    if any(-l in s for l in s):
        raise TautologyError(f"clause {sorted(s, key=abs)} contains a complementary pair")
    return tuple(sorted(s, key=lit_var))


def clause_vars(clause: Clause) -> frozenset[int]:
    return frozenset(lit_var(l) for l in clause)


def satisfies(clause: Clause, assignment: Assignment) -> bool:
    for l in clause:
        val = assignment.get(lit_var(l))
        if val is not None and val == (l > 0):
            return True
    return False


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[Clause, ...] = field(default=())

    def __post_init__(self):
        clauses = tuple(tuple(c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for c in clauses:
            if make_clause(c) != c:
                raise FormulaError(f"clause {c} is not in canonical form")
            if lit_var(c[-1]) > self.num_vars:
                raise FormulaError(f"clause {c} uses a variable above num_vars={self.num_vars}")

    @classmethod
    def from_lists(cls, clauses: Iterable[Iterable[int]], num_vars: int | None = None) -> CnfFormula:
        cs = tuple(make_clause(c) for c in clauses)
        if num_vars is None:
            num_vars = max((lit_var(c[-1]) for c in cs), default=0)
        return cls(num_vars, cs)

    @property
    def m(self) -> int:
        return len(self.clauses)

    def __len__(self) -> int:
        return len(self.clauses)

    @cached_property
    def variables(self) -> frozenset[int]:
        """V(F): the live variables, i.e. those occurring in some clause."""
        return frozenset(lit_var(l) for c in self.clauses for l in c)

    @cached_property
    def _occurrences(self) -> dict[int, tuple[int, int]]:
        pos: dict[int, int] = {}
        neg: dict[int, int] = {}
        for c in self.clauses:
            for l in c:
                if l > 0:
                    pos[l] = pos.get(l, 0) + 1
                else:
                    neg[-l] = neg.get(-l, 0) + 1
        return {v: (pos.get(v, 0), neg.get(v, 0)) for v in self.variables}

    def occurrence_counts(self, v: int) -> tuple[int, int]:
        """(n(x), n(x̄)): clauses containing ``v`` positively / negatively."""
        if not 1 <= v <= self.num_vars:
            raise FormulaError(f"variable {v} out of range 1..{self.num_vars}")
        return self._occurrences.get(v, (0, 0))

    def clauses_touching(self, xs: Iterable[int]) -> frozenset[int]:
        """Indices of clauses c with V(c) ∩ xs nonempty."""
        xs = set(xs)
        return frozenset(i for i, c in enumerate(self.clauses) if any(lit_var(l) in xs for l in c))

    def project(self, s: Iterable[int]) -> tuple[CnfFormula, int]:
        """F[S]: clauses touching ``s`` restricted to variables of ``s``.

        Returns the projected formula and the number of clauses dropped for
        becoming empty.  Only clauses touching ``s`` are kept, so with the
        F_S definition the dropped count is always 0; it is reported to keep
        the contract explicit for callers that short-circuit on it.
        """
        s = set(s)
        out = []
        dropped = 0
        for c in self.clauses:
            if not any(lit_var(l) in s for l in c):
                continue
            kept = tuple(l for l in c if lit_var(l) in s)
            if kept:
                out.append(kept)
            else:
                dropped += 1
        return CnfFormula(self.num_vars, tuple(out)), dropped

    def count_satisfied(self, assignment: Assignment) -> int:
        """sat_τ(F) for a total assignment τ over V(F)."""
        missing = self.variables - assignment.keys()
        if missing:
            raise FormulaError(f"assignment is partial; missing variables {sorted(missing)}")
        return sum(1 for c in self.clauses if satisfies(c, assignment))

    def drop(self, indices: Iterable[int]) -> CnfFormula:
        gone = set(indices)
        return CnfFormula(self.num_vars, tuple(c for i, c in enumerate(self.clauses) if i not in gone))

    def replace(self, clauses: Iterable[Clause]) -> CnfFormula:
        return CnfFormula(self.num_vars, tuple(clauses))

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {self.m}"]
        lines.extend(" ".join(map(str, c)) + " 0" for c in self.clauses)
        return "\n".join(lines) + "\n"

    def __str__(self) -> str:
        def lit(l):
            return f"x{l}" if l > 0 else f"¬x{-l}"

        return "{" + ", ".join("(" + " ∨ ".join(map(lit, c)) + ")" for c in self.clauses) + "}"


def parse_dimacs(source) -> CnfFormula:
    """Parse DIMACS CNF from ``str``, ``bytes`` or a text/binary file object.

    Clauses may span lines.  The declared clause count must match.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")

    header: tuple[int, int] | None = None
    clauses: list[Clause] = []
    pending: list[int] = []
    pending_line = 0
    for lineno, raw in enumerate(io.StringIO(source), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise DimacsHeaderError("duplicate header", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsHeaderError(f"malformed header {line!r}", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsHeaderError(f"malformed header {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise DimacsHeaderError("negative counts in header", lineno)
            header = (n, m)
            continue
        if header is None:
            raise DimacsHeaderError("clause data before 'p cnf' header", lineno)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"bad token {tok!r}", lineno) from None
            if not pending:
                pending_line = lineno
            if lit == 0:
                if not pending:
                    raise DimacsEmptyClauseError("empty clause", lineno)
                if any(-l in pending for l in pending):
                    raise DimacsTautologyError("clause contains a variable and its negation", pending_line)
                clauses.append(make_clause(pending))
                pending = []
                continue
            if abs(lit) > header[0]:
                raise DimacsRangeError(f"variable {abs(lit)} exceeds declared {header[0]}", lineno)
            pending.append(lit)
    if header is None:
        raise DimacsHeaderError("missing 'p cnf' header")
    if pending:
        raise DimacsError("last clause is not terminated by 0", pending_line)
    if len(clauses) != header[1]:
        raise DimacsCountError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def emit_dimacs(f: CnfFormula) -> str:
    return f.to_dimacs()


@dataclass(frozen=True)
class Instance:
    """A formula with target ``alpha`` and the α-offsets applied so far.

    ``trace`` holds ``(rule, offset)`` pairs; ``original_alpha`` replays them.
    """

    formula: CnfFormula
    alpha: int
    trace: tuple[tuple[str, int], ...] = ()

    @property
    def original_alpha(self) -> int:
        return self.alpha + sum(off for _, off in self.trace)

    def rewrite(self, formula: CnfFormula, rule: str, offset: int) -> Instance:
        return Instance(formula, self.alpha - offset, self.trace + ((rule, offset),))
