import pytest
from hypothesis import given, settings

import oracles
from conftest import random_formula
from matchsat.formula import CnfFormula
from matchsat.incidence import (
    ExpansionError,
    build_incidence,
    find_autarky,
    find_deficient_set,
    is_q_expanding,
    matching_number,
    max_deficiency,
    maximum_matching,
)
from test_formula import formulas

F = CnfFormula.from_lists


def test_build_incidence_examples():
    assert build_incidence(F([[1, -2]])).edges() == {(1, 0), (2, 0)}
    g = build_incidence(F([]))
    assert list(g.clause_side) == [] and g.edges() == set()
    assert build_incidence(F([[1], [-1]])).edges() == {(1, 0), (1, 1)}


@pytest.mark.parametrize(
    "clauses, nu",
    [([[1], [1, 2]], 2), ([[1], [-1]], 1), ([[1, 2], [-1, -2], [1, -2]], 2)],
)
def test_matching_examples(clauses, nu):
    assert oracles.matching_size(clauses) == nu
    m = maximum_matching(F(clauses))
    assert len(m) == nu
    f = F(clauses)
    assert all(v in f.clauses[c] or -v in f.clauses[c] for v, c in m.pairs.items())
    assert len(set(m.pairs.values())) == len(m.pairs)


@pytest.mark.parametrize(
    "clauses, q, expected",
    [
        ([[1]], 0, True),
        ([[1]], 1, False),
        ([[1], [-1]], 1, True),
        ([[1], [-1]], 2, False),
        ([[1, 2]], 0, False),
    ],
)
def test_expansion_examples(clauses, q, expected):
    assert oracles.q_expanding(clauses, q) == expected
    assert is_q_expanding(F(clauses), q) == expected


def test_expansion_rejects_large_q():
    with pytest.raises(ValueError):
        is_q_expanding(F([[1]]), 3)


def test_deficient_set_examples():
    f = F([[1], [-1], [2], [-2], [1, 2]])
    assert oracles.q_expanding(f.clauses, 2)
    assert find_deficient_set(f) is None
    s = find_deficient_set(F([[1], [-1, -2], [2]]))
    assert s in ({1}, {2})
    assert find_deficient_set(F([[1], [-1]])) == {1}


def test_deficient_set_requires_one_expanding():
    with pytest.raises(ExpansionError):
        find_deficient_set(F([[1]]))


def test_autarky_examples():
    a = find_autarky(F([[1]]))
    assert a.domain == {1} and a.assignment == {1: True} and a.satisfied_clauses == {0}
    assert find_autarky(F([[1], [-1]])).domain == set()
    a = find_autarky(F([[1, 2]]))
    assert a.domain in ({1, 2}, {1}, {2}) and a.satisfied_clauses == {0}


@pytest.mark.parametrize(
    "clauses, expected",
    [([[1], [-1]], (1, 1)), ([[1]], (0, 0)), ([[1], [-1], [1]], (2, 2))],
)
def test_max_deficiency_examples(clauses, expected):
    assert max_deficiency(F(clauses)) == expected
    assert oracles.max_deficiency(clauses) == expected[1]


@settings(max_examples=200)
@given(formulas(max_vars=6, max_clauses=7))
def test_matching_matches_brute_force(f):
    assert matching_number(f) == oracles.matching_size(f.clauses)


@settings(max_examples=200)
@given(formulas(max_vars=6, max_clauses=9))
def test_expansion_matches_subset_check(f):
    for q in (0, 1, 2):
        assert is_q_expanding(f, q) == oracles.q_expanding(f.clauses, q)


@settings(max_examples=150)
@given(formulas(max_vars=6, max_clauses=8))
def test_max_deficiency_matches_subformula_maximum(f):
    delta, star = max_deficiency(f)
    assert star == oracles.max_deficiency(f.clauses)
    assert star >= max(delta, 0)


def _check_autarky(f):
    a = find_autarky(f)
    assert set(a.assignment) == set(a.domain)
    assert a.satisfied_clauses == f.clauses_touching(a.domain)
    for j in a.satisfied_clauses:
        assert any(abs(l) in a.assignment and a.assignment[abs(l)] == (l > 0) for l in f.clauses[j])
    rest = [c for j, c in enumerate(f.clauses) if j not in a.satisfied_clauses]
    assert oracles.q_expanding(rest, 1)


@pytest.mark.parametrize("seed", range(300))
def test_autarky_postconditions_random(seed):
    _check_autarky(random_formula(seed, max_vars=8, max_clauses=14))


def _check_deficient(f):
    if not is_q_expanding(f, 1):
        return False
    s = find_deficient_set(f)
    if s is None:
        assert oracles.q_expanding(f.clauses, 2)
    else:
        assert s and len(oracles.neighbourhood(f.clauses, s)) == len(s) + 1
    return True


def test_deficient_set_postconditions_random():
    hits = sum(_check_deficient(random_formula(seed, max_vars=7, max_clauses=20)) for seed in range(600))
    assert hits >= 50
