"""Bound evaluation, closed forms, chain inequalities, and ratio tables."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphenergy import tolerances as tol
from graphenergy.bounds import (
    bounds_suite,
    e0,
    edge_deletion_check,
    energy_ratio,
    lemma_suite,
    paley_energy_closed,
    paley_ratio_closed,
    paley_ratio_lower,
    ratio_row_for_graph,
    ratio_table,
    ring_clique_energy_closed,
    ring_clique_energy_upper,
    ring_clique_ratio_upper,
)
from graphenergy.graphcore import (
    complete,
    cycle,
    empty,
    from_edge_list,
    paley,
    paley_primes,
    random_graph,
    ring_of_cliques,
)
from graphenergy.spectral import energy


def path3():
    return from_edge_list(3, [(0, 1), (1, 2)])


# ---------------------------------------------------------------------------
# e0


def test_e0_zero_regular():
    for n in (1, 2, 5, 9):
        assert e0(n, 0) == 0.0


def test_e0_complete_case_is_exact():
    # k = n-1 collapses to 2(n-1)
    assert e0(5, 4) == 8.0
    for n in range(2, 40):
        assert e0(n, n - 1) == pytest.approx(2 * (n - 1), abs=1e-12)


def test_e0_direct_value():
    # 6 + sqrt(2736), 40-digit reference evaluation
    assert e0(25, 6) == pytest.approx(58.306787322488084, abs=1e-12)


def test_e0_rejections():
    with pytest.raises(ValueError):
        e0(0, 0)
    with pytest.raises(ValueError):
        e0(5, 5)
    with pytest.raises(ValueError):
        e0(5, -1)


# ---------------------------------------------------------------------------
# energy_ratio


def test_energy_ratio_complete_graph_hits_the_bound():
    report = energy_ratio(complete(5))
    assert report.ratio == pytest.approx(1.0, abs=tol.BOUND_SLACK)
    assert report.k == 4
    assert report.e0 == pytest.approx(8.0, abs=1e-12)
    assert report.spectral_radius == pytest.approx(4.0, abs=1e-10)
    assert report.energy == pytest.approx(8.0, abs=1e-9)


def test_energy_ratio_paley_13():
    report = energy_ratio(paley(13))
    # (1 + sqrt(13)) / (1 + sqrt(14)), 40-digit reference evaluation
    assert report.ratio == pytest.approx(0.9712956672724611, abs=1e-9)


def test_energy_ratio_ring_3():
    report = energy_ratio(ring_of_cliques(3))
    # 16 / (4 + sqrt(160)), 40-digit reference evaluation
    assert report.ratio == pytest.approx(0.9610122934081686, abs=1e-9)
    assert report.energy == pytest.approx(16.0, abs=1e-9)


def test_energy_ratio_rejections():
    with pytest.raises(ValueError, match="regular"):
        energy_ratio(path3())
    with pytest.raises(ValueError, match="0-regular"):
        energy_ratio(empty(4))


# ---------------------------------------------------------------------------
# edge-deletion inequality


def test_edge_deletion_check_k2_is_tight():
    check = edge_deletion_check(complete(2), (0, 1))
    assert check.lhs == pytest.approx(2.0, abs=1e-10)
    assert check.rhs == pytest.approx(2.0, abs=1e-10)
    assert check.holds


def test_edge_deletion_check_path3_end_edge():
    check = edge_deletion_check(path3(), (0, 1))
    assert check.lhs == pytest.approx(2 * math.sqrt(2), abs=1e-10)
    assert check.rhs == pytest.approx(4.0, abs=1e-10)
    assert check.holds


def test_edge_deletion_check_triangle():
    check = edge_deletion_check(complete(3), (0, 1))
    assert check.lhs == pytest.approx(4.0, abs=1e-10)
    assert check.rhs == pytest.approx(2.0 + 2 * math.sqrt(2), abs=1e-10)
    assert check.holds


def test_edge_deletion_check_rejects_absent_edge():
    with pytest.raises(ValueError, match="not in the graph"):
        edge_deletion_check(path3(), (0, 2))


@given(
    st.integers(min_value=2, max_value=10),
    st.integers(min_value=0, max_value=2**32),
    st.integers(min_value=0, max_value=10**6),
)
@settings(deadline=None)
def test_edge_deletion_inequality_on_random_graphs(n, seed, pick):
    mmax = n * (n - 1) // 2
    g = random_graph(n, 1 + seed % mmax, seed)
    check = edge_deletion_check(g, g.edges()[pick % g.m])
    assert check.holds


# ---------------------------------------------------------------------------
# closed forms and chains


def test_paley_energy_closed_values():
    # (p-1)(1+sqrt(p))/2, 40-digit reference evaluations
    assert paley_energy_closed(5) == pytest.approx(6.47213595499958, abs=1e-12)
    assert paley_energy_closed(13) == pytest.approx(27.633307652783937, abs=1e-12)
    assert paley_energy_closed(17) == pytest.approx(40.984845004941285, abs=1e-12)
    with pytest.raises(ValueError):
        paley_energy_closed(12)


def test_paley_energy_closed_matches_eigensolver():
    for p in (5, 13, 17, 29):
        assert paley_energy_closed(p) == pytest.approx(energy(paley(p)), abs=1e-8)


def test_paley_energy_exact_for_all_p_up_to_200(paley_spectra_200):
    import numpy as np

    for p, vals in paley_spectra_200.items():
        solver_energy = float(np.abs(vals).sum())
        assert abs(solver_energy - paley_energy_closed(p)) <= 1e-6, p


def test_paley_energy_exceeds_half_p_sqrt_p():
    for p in paley_primes(5, 2000):
        assert paley_energy_closed(p) > p**1.5 / 2.0


def test_paley_ratio_closed_values():
    # (1+sqrt(p))/(1+sqrt(p+1)), 40-digit reference evaluations
    assert paley_ratio_closed(13) == pytest.approx(0.9712956672724611, abs=1e-15)
    assert paley_ratio_closed(101) == pytest.approx(0.9955286909175869, abs=1e-15)
    with pytest.raises(ValueError):
        paley_ratio_closed(9)


def test_paley_ratio_lower_chain():
    # sqrt(13)/(sqrt(13)+2), 40-digit reference evaluation
    assert paley_ratio_lower(13) == pytest.approx(0.6432108276746691, abs=1e-15)
    for p in paley_primes(5, 2000):
        assert paley_ratio_lower(p) < paley_ratio_closed(p) < 1.0


def test_ring_clique_energy_upper_values():
    assert ring_clique_energy_upper(3) == 30.0
    assert ring_clique_energy_upper(5) == 90.0
    assert ring_clique_energy_upper(10) == 380.0
    with pytest.raises(ValueError):
        ring_clique_energy_upper(2)


def test_ring_clique_energy_closed_values():
    assert ring_clique_energy_closed(3) == pytest.approx(16.0, abs=1e-10)
    assert ring_clique_energy_closed(3) <= ring_clique_energy_upper(3)
    for q in range(3, 7):
        assert ring_clique_energy_closed(q) == pytest.approx(
            energy(ring_of_cliques(q)), abs=1e-7
        )


def test_ring_clique_ratio_upper_values():
    assert ring_clique_ratio_upper(3).crude == 3.0  # 30 / (5 * 2), uninformative small-q case
    # 992 / e0(256, 17), 40-digit reference evaluation
    assert ring_clique_ratio_upper(16).tight == pytest.approx(0.95857193020505, abs=1e-12)
    # 39800 / (9899 sqrt(101)), 40-digit reference evaluation
    assert ring_clique_ratio_upper(100).crude == pytest.approx(0.40006546287865, abs=1e-12)
    with pytest.raises(ValueError):
        ring_clique_ratio_upper(1)


def test_ring_clique_tight_never_exceeds_crude():
    for q in range(3, 501):
        bounds_q = ring_clique_ratio_upper(q)
        assert bounds_q.tight <= bounds_q.crude


# ---------------------------------------------------------------------------
# ratio tables


def test_ratio_table_paley_modes_agree():
    numeric = ratio_table("paley", [13], use_closed_form=False)[0]
    closed = ratio_table("paley", [13], use_closed_form=True)[0]
    assert numeric.ratio == pytest.approx(closed.ratio, abs=tol.MODE_AGREEMENT_TOL)
    assert numeric.energy == pytest.approx(closed.energy, abs=1e-6)
    assert (numeric.n, numeric.k, numeric.m) == (closed.n, closed.k, closed.m) == (13, 6, 39)


def test_ratio_table_modes_agree_across_families():
    for p in (5, 13, 17):
        numeric, = ratio_table("paley", [p])
        closed, = ratio_table("paley", [p], use_closed_form=True)
        assert numeric.ratio == pytest.approx(closed.ratio, abs=tol.MODE_AGREEMENT_TOL)
    for q in (3, 4, 5):
        numeric, = ratio_table("ring_of_cliques", [q])
        closed, = ratio_table("ring_of_cliques", [q], use_closed_form=True)
        assert numeric.ratio == pytest.approx(closed.ratio, abs=tol.MODE_AGREEMENT_TOL)


def test_ratio_table_ring_3_closed():
    row, = ratio_table("ring_of_cliques", [3], use_closed_form=True)
    assert row.energy == pytest.approx(16.0, abs=1e-10)
    assert row.ratio == pytest.approx(0.9610122934081686, abs=1e-10)
    assert (row.n, row.k, row.m) == (9, 4, 18)
    assert row.paper_bound == pytest.approx(3.0, abs=1e-12)


def test_ratio_table_row_fields_are_consistent():
    rows = ratio_table("paley", [5, 13, 17], use_closed_form=True)
    rows += ratio_table("ring_of_cliques", [3, 4, 5], use_closed_form=True)
    for row in rows:
        assert row.ratio == pytest.approx(row.energy / row.e0, abs=tol.RATIO_FIELD_TOL)
        assert 0.0 < row.ratio <= 1.0 + tol.BOUND_SLACK


def test_ratio_table_preserves_input_order():
    rows = ratio_table("paley", [17, 5, 13], use_closed_form=True)
    assert [row.param for row in rows] == [17, 5, 13]


def test_ratio_table_names_offending_param():
    with pytest.raises(ValueError, match="12"):
        ratio_table("paley", [13, 12])
    with pytest.raises(ValueError, match="2"):
        ratio_table("ring_of_cliques", [3, 2])
    with pytest.raises(ValueError, match="family"):
        ratio_table("nonsense", [3])


def test_ratio_row_for_graph_custom_family():
    row = ratio_row_for_graph(cycle(5))
    assert row.family == "custom"
    assert row.param == 5
    assert row.closed_ratio is None and row.paper_bound is None
    assert row.ratio == pytest.approx(energy(cycle(5)) / e0(5, 2), abs=1e-12)


def test_paley_rows_carry_chain_bound():
    row, = ratio_table("paley", [13], use_closed_form=True)
    assert row.closed_ratio == pytest.approx(0.9712956672724611, abs=1e-12)
    assert row.paper_bound == pytest.approx(0.6432108276746691, abs=1e-12)
    assert row.ratio > row.paper_bound


# ---------------------------------------------------------------------------
# suites


def test_lemma_suite_passes():
    result = lemma_suite(trials=30, seed=42)
    assert result.ok
    assert result.passed == result.total == 30


def test_lemma_suite_rejects_bad_trials():
    with pytest.raises(ValueError):
        lemma_suite(trials=0, seed=0)


def test_lemma_suite_is_deterministic():
    a = lemma_suite(trials=10, seed=7)
    b = lemma_suite(trials=10, seed=7)
    assert a.passed == b.passed and a.failures == b.failures


def test_bounds_suite_passes_small_corpus():
    result = bounds_suite(paley_max=30, ring_max=5, complete_max=12, cycle_max=12)
    assert result.ok
    expected_cases = 4 + 3 + 12 + 10  # paley {5,13,17,29}, ring 3..5, K_1..12, C_3..12
    assert result.total == expected_cases
