import itertools

import pytest

import oracles
from matchsat.bush import (
    TRIANGLE,
    build_augmented_incidence,
    bush_dimensions,
    bush_exists_small,
    find_bush_small,
    generate_partitions,
    mini_hitting_set_via_bush,
    partition_count,
)
from matchsat.hitset import GuardError, Hypergraph

H = Hypergraph.from_lists


def test_partition_examples():
    assert set(generate_partitions(4, 2)) == {(3, 1), (2, 2)}
    assert generate_partitions(5, 1) == [(5,)]
    assert generate_partitions(2, 3) == []
    assert partition_count(5) == 7
    assert partition_count(10) == 42


@pytest.mark.parametrize("s", range(1, 21))
def test_partitions_match_composition_dedup(s):
    for l in range(1, s + 1):
        got = generate_partitions(s, l)
        assert len(got) == len(set(got))
        assert set(got) == oracles.partitions(s, l) if s <= 12 else all(
            sum(p) == s and len(p) == l and list(p) == sorted(p, reverse=True) for p in got
        )


def test_partition_counts_up_to_twenty():
    # p(s) from the recurrence over the largest part, independent of the generator
    table = [[0] * 21 for _ in range(21)]
    for cap in range(21):
        table[0][cap] = 1
    for s in range(1, 21):
        for cap in range(1, 21):
            table[s][cap] = table[s][cap - 1] + (table[s - cap][cap] if cap <= s else 0)
    for s in range(1, 21):
        assert partition_count(s) == table[s][s]


def test_bush_dimensions():
    assert list(bush_dimensions(0)) == [()]
    assert set(bush_dimensions(2)) == {(3,), (2, 2), (3, 1)}


def test_augmented_incidence_example():
    g = build_augmented_incidence(H([[1]]))
    x, y, z = TRIANGLE
    assert set(g.nodes) == {("v", 1), ("e", 0), x, y, z}
    expected = {frozenset(p) for p in [(("v", 1), ("e", 0)), (x, y), (y, z), (z, x), (y, ("v", 1))]}
    assert g.edge_set() == expected


def test_augmented_incidence_counts():
    h = Hypergraph(3, ())
    g = build_augmented_incidence(h)
    assert len(g.nodes) == 6 and len(g.edge_set()) == 3 + 3
    h = H([[1, 2], [2, 3], [3]])
    g = build_augmented_incidence(h)
    incid = sum(len(e) for e in h.edges)
    assert len(g.nodes) == h.num_vertices + h.m + 3
    assert len(g.edge_set()) == incid + 3 + h.num_vertices


def test_bush_examples():
    assert bush_exists_small(H([[1], [1, 2]]), (2,))
    assert not bush_exists_small(H([[1], [2]]), (2,))


def test_bush_guard():
    with pytest.raises(GuardError):
        bush_exists_small(H([[i] for i in range(1, 8)]), (2,))


def all_small_hypergraphs(max_n, max_m):
    for n in range(1, max_n + 1):
        subsets = [frozenset(c) for r in range(1, n + 1) for c in itertools.combinations(range(1, n + 1), r)]
        for m in range(0, max_m + 1):
            for edges in itertools.combinations_with_replacement(subsets, m):
                yield Hypergraph(n, edges)


def test_star_centers_on_vertex_side():
    for h in all_small_hypergraphs(3, 3):
        for k in (1, 2):
            for dim in bush_dimensions(k):
                b = find_bush_small(h, dim)
                if b is not None:
                    assert b.triangle[1] == TRIANGLE[1] or b.triangle[1][0] == "v"
                    assert all(center[0] == "v" for center, _ in b.stars)


def test_mini_hitting_set_via_bush():
    assert mini_hitting_set_via_bush(H([[1], [1], [1]]), 2)
    assert not mini_hitting_set_via_bush(H([[1], [2]]), 1)
    assert mini_hitting_set_via_bush(H([[1], [2]]), 0)
