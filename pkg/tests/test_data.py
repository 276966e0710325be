from fractions import Fraction

import pytest

from equigraph.data import (
    DS_CONFERENCE,
    DS_NONCONFERENCE,
    MOORE_TUPLES,
    SEIDEL_SPORADIC,
    TABLE_DISTANCE_TRANSITIVE_CUBIC,
    TABLE_INTEGRAL_CUBIC,
    TRIANGLE_FREE_SPORADIC,
    bisect_root,
    ds_nonconference_params,
    exact_spectrum_of_family,
)
from equigraph.exact import ExactValue
from equigraph.graphs import gen_named, numeric_spectrum, regularity
from equigraph.spectra import spectra_match
from equigraph.srg import eigen_data


def eig_float(eig):
    return float(eig.exact) if eig.exact is not None else eig.value


def check_trace_identities(row):
    total = sum(eig_float(e) * m for e, m in row.spectrum.entries)
    squares = sum(eig_float(e) ** 2 * m for e, m in row.spectrum.entries)
    assert abs(total) < 1e-6, row.name
    assert abs(squares - row.n * row.k) < 1e-5, row.name


@pytest.mark.parametrize("row", TABLE_INTEGRAL_CUBIC, ids=lambda r: r.name)
def test_integral_cubic_rows_consistent(row):
    assert row.spectrum.n == row.n
    check_trace_identities(row)
    assert float(row.spectrum.principal_eig.exact) == row.k


@pytest.mark.parametrize("row", TABLE_DISTANCE_TRANSITIVE_CUBIC, ids=lambda r: r.name)
def test_distance_transitive_rows_consistent(row):
    assert row.spectrum.n == row.n
    check_trace_identities(row)


@pytest.mark.parametrize(
    "row",
    [r for r in TABLE_INTEGRAL_CUBIC + TABLE_DISTANCE_TRANSITIVE_CUBIC if r.build],
    ids=lambda r: r.name,
)
def test_constructible_rows_match_numeric(row):
    g = row.build()
    assert g.n == row.n
    assert regularity(g) == row.k
    assert spectra_match(numeric_spectrum(g), row.spectrum)


def test_table_sizes():
    assert len(TABLE_INTEGRAL_CUBIC) == 13
    assert len(TABLE_DISTANCE_TRANSITIVE_CUBIC) == 13
    assert len(DS_NONCONFERENCE) == 14
    assert len(DS_CONFERENCE) == 3
    assert len(SEIDEL_SPORADIC) == 5
    assert len(MOORE_TUPLES) == 4
    assert len(TRIANGLE_FREE_SPORADIC) == 4


@pytest.mark.parametrize("row", DS_NONCONFERENCE, ids=lambda r: r[-1])
def test_ds_nonconference_rows_are_feasible(row):
    n, k, r, m_r, s, m_s, _name = row
    assert 1 + m_r + m_s == n
    assert k + r * m_r + s * m_s == 0
    p = ds_nonconference_params(row)
    data = eigen_data(p)
    assert (int(data.m_r), int(data.m_s)) == (m_r, m_s)
    assert float(data.r) == r and float(data.s) == s


def test_heawood_correction_against_fano_incidence():
    # the Heawood graph is the point-line incidence graph of the Fano plane
    from equigraph.graphs import Graph
    edges = []
    for i in range(7):
        line = {i % 7, (i + 1) % 7, (i + 3) % 7}
        for p in line:
            edges.append((p, 7 + i))
    heawood = Graph.from_edges(14, edges)
    assert regularity(heawood) == 3
    row = next(r for r in TABLE_DISTANCE_TRANSITIVE_CUBIC if r.name == "Heawood")
    assert spectra_match(numeric_spectrum(heawood), row.spectrum)


def test_coxeter_correction_satisfies_moment_identities():
    row = next(r for r in TABLE_DISTANCE_TRANSITIVE_CUBIC if r.name == "Coxeter")
    check_trace_identities(row)
    # girth 7: the fourth moment counts closed 4-walks, n * k * (2k - 1)
    fourth = sum(eig_float(e) ** 4 * m for e, m in row.spectrum.entries)
    assert abs(fourth - 28 * 3 * 5) < 1e-5


def test_bisect_root_golden():
    eig = bisect_root([-1, -1, 1], Fraction(1), Fraction(2))  # x^2 - x - 1
    assert abs(eig.value - 1.618033988749) < 1e-9
    assert eig.radius <= 1e-10
    with pytest.raises(ValueError):
        bisect_root([-1, -1, 1], Fraction(3), Fraction(4))


def test_biggs_smith_row_intervals():
    row = next(r for r in TABLE_DISTANCE_TRANSITIVE_CUBIC if r.name == "Biggs-Smith")
    approx = [(e.value, m) for e, m in row.spectrum.entries if e.exact is None]
    assert len(approx) == 5
    values = sorted(v for v, _ in approx)
    expect = [-2.532, -1.562, -1.347, 0.879, 2.562]
    for got, want in zip(values, expect):
        assert abs(got - want) < 1e-3


def test_exact_family_spectra_match_numeric():
    cases = [
        ("crown", {"t": 4}),
        ("complete", {"n": 6}),
        ("complete_bipartite", {"a": 2, "b": 5}),
        ("complete_multipartite", {"a": 3, "m": 2}),
        ("lattice", {"n": 5}),
        ("triangular", {"n": 6}),
        ("petersen", {}),
        ("shrikhande", {}),
        ("q3", {}),
        ("k3_prism", {}),
        ("paley", {"q": 13}),
        ("cycle", {"n": 6}),
        ("gp", {"k": 3, "q": 16}),
    ]
    for family, params in cases:
        exact = exact_spectrum_of_family(family, **params)
        assert exact is not None, family
        g = gen_named(family, **params)
        assert spectra_match(numeric_spectrum(g), exact), family


def test_exact_family_spectrum_unknown():
    assert exact_spectrum_of_family("cycle", n=9) is None


def test_paley_spectrum_energy():
    spec = exact_spectrum_of_family("paley", q=5)
    from equigraph.spectra import energy
    assert energy(spec) == ExactValue([(1, 2), (5, 2)])


def test_integral_census_discrepancy_specializations():
    # integral spectra: total = m0 + sigma; bipartite integral: total = m0 - 1
    from equigraph.spectra import classify_spectrum, discrepancy
    for row in TABLE_INTEGRAL_CUBIC:
        flags = classify_spectrum(row.spectrum)
        assert flags.integral
        b = discrepancy(row.spectrum)
        assert b.delta_total == ExactValue.from_rational(b.m0 + b.sigma)
        if row.bipartite:
            assert flags.symmetric
            assert b.delta_total == ExactValue.from_rational(b.m0 - 1)
