import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prismradio import (
    SearchConfig,
    Vertex,
    build_graph,
    construct_labeling,
    exact_radio_number,
    greedy_span_for_order,
    in_phi_scope,
    lower_bound_rn,
    verify,
)
from prismradio.exact import _is_vertex_transitive


def _solve(n, s, **kwargs):
    g = build_graph(n, s)
    cfg = SearchConfig(use_phi_pruning=in_phi_scope(n, s), **kwargs)
    return g, exact_radio_number(g, cfg)


@pytest.mark.parametrize(
    "n,s,expected",
    [(3, 3, 6), (4, 1, 11), (4, 2, 8), (4, 3, 9), (5, 1, 14), (5, 2, 14), (5, 3, 10)],
)
def test_exact_matches_known_values(n, s, expected):
    g, result = _solve(n, s)
    assert result.rn == expected
    assert result.proven_optimal
    report = verify(g, result.witness)
    assert report.valid and result.witness.span == expected


@pytest.mark.parametrize("n,s", [(4, 1), (4, 2), (5, 1), (5, 2), (5, 3)])
def test_exact_agrees_with_formula(n, s):
    _, result = _solve(n, s)
    assert result.rn == lower_bound_rn(n, s)


def test_exact_handles_graphs_without_construction():
    # rn(Z(3,1)) = 6: the complement is a 6-cycle, so consecutive labels can
    # always move to a non-neighbor.  rn(Z(3,2)) = 8: the complement is a
    # perfect matching, so runs of consecutive labels have length at most 2.
    for n, s, expected in [(3, 1, 6), (3, 2, 8)]:
        g = build_graph(n, s)
        result = exact_radio_number(g)
        assert result.rn == expected and result.proven_optimal
        assert verify(g, result.witness).valid


def test_phi_pruning_changes_nodes_not_answer():
    g = build_graph(5, 1)
    with_phi = exact_radio_number(g, SearchConfig(use_phi_pruning=True))
    without = exact_radio_number(g, SearchConfig(use_phi_pruning=False))
    assert with_phi.rn == without.rn == 14
    assert with_phi.nodes_explored < without.nodes_explored


def test_phi_pruning_out_of_scope_raises():
    g = build_graph(3, 3)
    with pytest.raises(ValueError, match="outside theorem scope"):
        exact_radio_number(g, SearchConfig(use_phi_pruning=True))


def test_search_is_deterministic():
    g = build_graph(5, 2)
    a = exact_radio_number(g, SearchConfig(use_phi_pruning=True))
    b = exact_radio_number(g, SearchConfig(use_phi_pruning=True))
    assert (a.rn, a.nodes_explored) == (b.rn, b.nodes_explored)


def test_hint_equal_to_optimum_still_finds_witness():
    g = build_graph(4, 1)
    result = exact_radio_number(g, SearchConfig(upper_bound_hint=11))
    assert result.rn == 11 and result.proven_optimal
    assert verify(g, result.witness).valid


def test_hint_below_optimum_raises():
    g = build_graph(4, 1)
    with pytest.raises(ValueError, match="below the optimum"):
        exact_radio_number(g, SearchConfig(upper_bound_hint=5))


def test_zero_budget_returns_constructive_incumbent():
    g = build_graph(10, 1)
    result = exact_radio_number(g, SearchConfig(use_phi_pruning=True, time_budget=0.0))
    assert not result.proven_optimal
    assert result.rn == construct_labeling(10, 1).span
    assert verify(g, result.witness).valid


def test_fix_first_vertex_preserves_answer():
    for n, s in [(4, 1), (4, 3), (5, 2)]:
        g = build_graph(n, s)
        free = exact_radio_number(g, SearchConfig(use_phi_pruning=in_phi_scope(n, s)))
        fixed = exact_radio_number(
            g, SearchConfig(use_phi_pruning=in_phi_scope(n, s), fix_first_vertex=True)
        )
        assert fixed.rn == free.rn
        assert fixed.nodes_explored <= free.nodes_explored


@pytest.mark.parametrize("n,s", [(4, 1), (5, 2), (6, 3), (7, 1)])
def test_prisms_are_vertex_transitive(n, s):
    assert _is_vertex_transitive(build_graph(n, s))


def test_greedy_is_optimal_on_witness_order():
    g, result = _solve(4, 2)
    order = [v for v, _ in sorted(result.witness.assignment.items(), key=lambda kv: kv[1])]
    span, labels = greedy_span_for_order(g, order)
    assert span == result.rn
    assert labels == sorted(result.witness.assignment.values())


def test_greedy_rejects_non_permutation():
    g = build_graph(4, 1)
    with pytest.raises(ValueError, match="not a permutation"):
        greedy_span_for_order(g, list(g.vertices())[:-1])
    with pytest.raises(ValueError, match="not a permutation"):
        greedy_span_for_order(g, [Vertex(1, 1)] * 8)


def test_greedy_labels_are_monotone_and_start_at_one():
    g = build_graph(5, 3)
    span, labels = greedy_span_for_order(g, list(g.vertices()))
    assert labels[0] == 1
    assert all(b > a for a, b in zip(labels, labels[1:]))
    assert span == labels[-1]


@settings(max_examples=60, deadline=None)
@given(st.permutations([(c, p) for c in (1, 2) for p in (1, 2, 3)]))
def test_greedy_never_beats_rn_on_z33(order):
    g = build_graph(3, 3)
    span, _ = greedy_span_for_order(g, order)
    assert span == 6  # complete graph: every order forces exactly 1..6


@settings(max_examples=60, deadline=None)
@given(st.permutations([(c, p) for c in (1, 2) for p in (1, 2, 3, 4)]))
def test_greedy_never_beats_rn_on_z41(order):
    g = build_graph(4, 1)
    span, _ = greedy_span_for_order(g, order)
    assert span >= 11
