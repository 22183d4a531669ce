from __future__ import annotations

import pytest

from chromatic_bounds.errors import ImproperColoringError, InputError
from chromatic_bounds.exact import (
    Coloring,
    chromatic_number,
    clique_number,
    greedy_coloring,
    independence_number,
    max_clique,
    parse_coloring,
)
from chromatic_bounds.graphs import (
    all_graphs,
    barbell,
    complete,
    complete_multipartite,
    coxeter,
    cycle,
    empty,
    generate,
    gnp,
    hadamard,
    petersen,
)
from chromatic_bounds.harness import DEFAULT_CORPUS
from oracles import brute_alpha, brute_chromatic


@pytest.mark.parametrize("n", [1, 3, 6])
def test_greedy_complete(n):
    c = greedy_coloring(complete(n))
    assert c.colors_used == n and c.is_proper(complete(n))


def test_greedy_edgeless():
    assert greedy_coloring(empty(4)).colors_used == 1


def test_greedy_c5():
    c = greedy_coloring(cycle(5))
    assert c.colors_used == 3 and c.is_proper(cycle(5))


@pytest.mark.parametrize(
    "g, chi",
    [(petersen(), 3), (complete_multipartite([3, 3]), 2), (barbell(8), 8), (coxeter(), 3),
     (generate("kneser:6:2"), 4), (generate("kneser:7:2"), 5), (hadamard(4), 4)],
)
def test_chromatic_known_values(g, chi):
    res = chromatic_number(g)
    assert res.exact and res.value == chi
    assert res.witness.is_proper(g) and res.witness.colors_used == chi


@pytest.mark.parametrize("g, alpha", [(complete(5), 1), (cycle(5), 2), (petersen(), 4), (coxeter(), 12)])
def test_independence_known_values(g, alpha):
    res = independence_number(g)
    assert res.value == alpha
    edges = set(g.edge_list())
    assert len(res.witness) == alpha
    assert not any((u, v) in edges for u in res.witness for v in res.witness if u < v)


def test_independence_matches_subset_oracle_on_petersen():
    g = petersen()
    assert independence_number(g).value == brute_alpha(g.n, g.edge_list())


def test_clique_numbers():
    assert clique_number(coxeter()).value == 2
    assert clique_number(barbell(5)).value == 5
    assert max_clique([]).value == 0


def test_all_graphs_up_to_six_against_oracles():
    # every labelled graph on at most 6 vertices (33 867 of them) is too slow with the
    # brute oracle; sample every 7th mask at n = 6 and take n <= 5 exhaustively
    checked = 0
    for g in all_graphs(6):
        mask = int(g.name.rsplit(":", 1)[1])
        if g.n == 6 and mask % 7:
            continue
        chi = chromatic_number(g)
        assert chi.value == brute_chromatic(g.n, g.edge_list()), g.name
        assert chi.witness.is_proper(g)
        assert independence_number(g).value == brute_alpha(g.n, g.edge_list()), g.name
        checked += 1
    assert checked > 5000


@pytest.mark.parametrize("seed", range(12))
def test_random_eight_vertex_against_oracle(seed):
    g = gnp(8, 0.5, seed)
    assert chromatic_number(g).value == brute_chromatic(8, g.edge_list())
    assert independence_number(g).value == brute_alpha(8, g.edge_list())


@pytest.mark.parametrize("family", DEFAULT_CORPUS)
def test_corpus_chi_against_greedy_and_alpha(family):
    g = generate(family)
    chi = chromatic_number(g)
    assert chi.exact
    assert chi.value <= greedy_coloring(g).colors_used
    alpha = independence_number(g).value
    assert g.n - alpha + 1 >= chi.value
    u_v = chi.witness.monochromatic_edge(g)
    assert u_v is None


def test_budget_exhaustion_returns_bracket():
    g = generate("gnp:40:0.5:1")
    res = chromatic_number(g, node_budget=5)
    assert res.lower <= res.upper
    assert res.witness.is_proper(g) and res.witness.colors_used == res.upper
    full = chromatic_number(g)
    assert res.lower <= full.value <= res.upper


def test_independence_budget_bracket():
    g = generate("gnp:40:0.3:2")
    res = independence_number(g, node_budget=3)
    full = independence_number(g)
    assert res.lower <= full.value <= res.upper


def test_coloring_checks():
    g = complete(3)
    with pytest.raises(ImproperColoringError) as info:
        Coloring((1, 1, 2)).check_proper(g)
    assert info.value.edge == (1, 2) and info.value.color == 1
    assert "monochromatic edge (1, 2)" in str(info.value)
    with pytest.raises(InputError):
        Coloring((1, 2)).check_proper(g)
    with pytest.raises(InputError):
        Coloring((1, 2, 4)).check_proper(g, 3)


def test_parse_coloring():
    assert parse_coloring("1\n2 # second\n\n3\n").assignment == (1, 2, 3)
    with pytest.raises(InputError, match="line 2"):
        parse_coloring("1\nblue\n")
