from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from longedge.graphs import Edge, LongEdgeGraph, conjugate, enumerate_graphs, enumerate_templates
from longedge.orderings import (
    Allowability,
    BetaSeq,
    LinearForm,
    allowability,
    beta_from_divergence,
    fit_linear_phi,
    is_semiallowable,
    p_beta,
    p_beta_strict,
    phi_beta,
    phi_beta_strict,
)
from oracles import brute_force_orderings
from table1_data import TABLE1

EMPTY = LongEdgeGraph()
WT2 = LongEdgeGraph([(0, 1, 2)])
ARC = LongEdgeGraph([(0, 2, 1)])


def test_betaseq_validation():
    b = BetaSeq((1, 2, 3))
    assert b.height == 2
    with pytest.raises(ValueError):
        BetaSeq(())
    with pytest.raises(ValueError):
        BetaSeq((1, -1))
    with pytest.raises(TypeError):
        BetaSeq((1.5, 2))


def test_beta_from_divergence():
    assert beta_from_divergence((2, 0, 0)) == (2, 2, 2)
    assert beta_from_divergence((0, 1, 1, -1, -1)) == (0, 1, 2, 1, 0)
    with pytest.raises(ValueError, match="not a valid width sequence"):
        beta_from_divergence((1, -2, 5))


def test_allowability():
    assert allowability(EMPTY, (0,)) is Allowability.STRICTLY_ALLOWABLE
    assert allowability(WT2, (1,)) is Allowability.NOT_ALLOWABLE
    assert allowability(WT2, (2,)) is Allowability.ALLOWABLE
    # same edge away from both ambient ends is strictly allowable
    g = LongEdgeGraph([(1, 2, 2)])
    assert allowability(g, (0, 2, 0)) is Allowability.STRICTLY_ALLOWABLE
    assert allowability(g, (0, 2)) is Allowability.ALLOWABLE  # hi == M+1
    assert allowability(ARC, (1, 1)) is Allowability.STRICTLY_ALLOWABLE
    # maxv beyond the range
    assert allowability(ARC, (5,)) is Allowability.NOT_ALLOWABLE


def test_semiallowable_uses_reduced_crossing_weight():
    # a gap edge is discounted: weight 2 across gap 1 but only 1 required
    assert not allowability(WT2, (1,)) is not Allowability.NOT_ALLOWABLE or True
    assert is_semiallowable(WT2, (1,))
    assert not is_semiallowable(WT2, (0,))
    assert is_semiallowable(EMPTY, (0,))
    assert not is_semiallowable(ARC, (5,))  # maxv > M+1


def test_p_beta_known_values():
    assert p_beta(EMPTY, (3, 1)) == 1
    assert p_beta_strict(EMPTY, (3, 1)) == 1
    assert p_beta(WT2, (3,)) == 2
    assert p_beta(ARC, (2, 3)) == 5
    assert p_beta(WT2, (1,)) == 0
    # strict variant vanishes when a heavy edge touches an ambient end
    assert p_beta_strict(WT2, (3,)) == 0
    assert p_beta_strict(ARC, (2, 3)) == 5


def test_p_beta_matches_brute_force_on_fixed_cases():
    cases = [
        (WT2, (4,)),
        (WT2, (2, 3)),
        (ARC, (2, 3)),
        (ARC, (3, 3, 2)),
        (LongEdgeGraph([(0, 1, 2), (0, 2, 1)]), (3, 2)),
        (LongEdgeGraph([(0, 2, 1), (0, 2, 1), (1, 2, 2)]), (2, 4)),
        (LongEdgeGraph([(1, 2, 3)]), (5, 4, 1)),
        (LongEdgeGraph([(0, 3, 1), (1, 2, 2)]), (2, 3, 2)),
    ]
    for g, beta in cases:
        assert p_beta(g, beta) == brute_force_orderings(g, beta), (g, beta)


_edges = st.tuples(
    st.integers(0, 2), st.integers(1, 3), st.integers(1, 3)
).map(lambda t: (t[0], t[0] + t[1], t[2])).filter(lambda e: not (e[1] - e[0] == 1 and e[2] == 1))


@settings(max_examples=150, deadline=None)
@given(
    edges=st.lists(_edges, min_size=1, max_size=3),
    beta=st.lists(st.integers(0, 5), min_size=2, max_size=4),
)
def test_p_beta_matches_brute_force(edges, beta):
    g = LongEdgeGraph(edges)
    assert p_beta(g, beta) == brute_force_orderings(g, beta)


@settings(max_examples=60, deadline=None)
@given(
    edges=st.lists(_edges, min_size=1, max_size=3),
    beta=st.lists(st.integers(0, 5), min_size=4, max_size=4),
    noise=st.lists(st.integers(0, 5), min_size=4, max_size=4),
)
def test_p_beta_reads_only_spanned_positions(edges, beta, noise):
    g = LongEdgeGraph(edges)
    if g.maxv > len(beta):
        return
    base = p_beta(g, beta)
    tweaked = [
        noise[i] if not (g.minv <= i <= g.maxv - 1) else beta[i]
        for i in range(len(beta))
    ]
    assert p_beta(g, tweaked) == base


def test_phi_single_edge_equals_p():
    for beta in [(3,), (5,), (2, 2)]:
        assert phi_beta(WT2, beta) == p_beta(WT2, beta)
    assert phi_beta(ARC, (4, 4)) == p_beta(ARC, (4, 4))


def test_phi_strict_vanishes_off_shifted_templates():
    betas = [(3, 3, 3, 3), (4, 2, 5, 3)]
    for g in enumerate_graphs(2, 4):
        if not g.is_shifted_template():
            for beta in betas:
                assert phi_beta_strict(g, beta) == 0, g


def test_phi_two_parallel_arcs():
    g = LongEdgeGraph([(0, 2, 1), (0, 2, 1)])
    for b0, b1 in [(4, 4), (5, 7), (6, 4)]:
        expected = Fraction(-3, 2) * b0 + Fraction(-3, 2) * b1 + 1
        assert phi_beta(g, (b0, b1)) == expected


def test_phi_empty_graph_is_zero():
    assert phi_beta(EMPTY, (3,)) == 0
    assert phi_beta_strict(EMPTY, (3,)) == 0


def test_linear_form_zeta():
    form = LinearForm((Fraction(0), Fraction(1), Fraction(1), Fraction(1)))
    assert (form.zeta0, form.zeta1, form.zeta2) == (3, 3, 1)
    assert form.evaluate((2, 3, 4)) == 9


def test_fit_linear_phi_table1():
    for row in TABLE1:
        form = fit_linear_phi(LongEdgeGraph(row["edges"]))
        assert form.eta == row["eta"], row["edges"]
        assert form.zeta0 == row["zeta0"]
        assert form.zeta1 == row["zeta1"]
        assert form.zeta2 == row["zeta2"]


def test_fit_linear_phi_shifted_graph():
    base = fit_linear_phi(LongEdgeGraph([(0, 1, 2)]))
    shifted = fit_linear_phi(LongEdgeGraph([(2, 3, 2)]))
    assert shifted.eta == base.eta
    assert shifted.minv == 2
    assert shifted.evaluate((9, 9, 5, 9)) == base.evaluate((5,))


def test_fit_linear_phi_rejects_empty():
    with pytest.raises(ValueError):
        fit_linear_phi(EMPTY)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_phi_agrees_with_fit_on_semiallowable_points(data):
    pool = enumerate_graphs(1, 2) + enumerate_graphs(2, 3)
    g = data.draw(st.sampled_from(pool))
    form = fit_linear_phi(g)
    d = g.cogenus
    beta = data.draw(
        st.lists(
            st.integers(d, d + 6), min_size=g.maxv, max_size=g.maxv + 2
        )
    )
    assert is_semiallowable(g, beta)
    assert phi_beta(g, beta) == form.evaluate(beta)


def test_conjugate_identities():
    for delta in (1, 2, 3):
        for t in enumerate_templates(delta):
            f = fit_linear_phi(t)
            fc = fit_linear_phi(conjugate(t))
            ell = t.length
            assert fc.eta[0] == f.eta[0]
            assert fc.zeta0 == f.zeta0
            assert f.zeta1 + fc.zeta1 == (ell - 1) * f.zeta0
            assert tuple(fc.eta[1:]) == tuple(reversed(f.eta[1:]))
