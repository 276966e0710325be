import random
from fractions import Fraction

import pytest

from equigraph.exact import ExactValue, Surd, surd_abs
from equigraph.spectra import (
    Approximate,
    Eig,
    Spectrum,
    UncertifiableBranch,
    check_equienergetic,
    classify_spectrum,
    complement_spectrum,
    delta_of,
    discrepancy,
    energy,
)


def spec(values, principal=0):
    return Spectrum.from_values(values) if principal == 0 else Spectrum(
        [(Eig.from_exact(v if isinstance(v, Surd) else Surd(v)), m) for v, m in values],
        principal=principal,
    )


# -- delta ---------------------------------------------------------------

def test_delta_branches():
    assert delta_of(Eig.from_exact(3)) == ExactValue.from_rational(1)
    assert delta_of(Eig.from_exact(-2)) == ExactValue.from_rational(-1)
    golden = Surd(Fraction(-1, 2), Fraction(1, 2), 5)   # about 0.618
    assert delta_of(Eig.from_exact(golden)) == ExactValue.from_rational(1)


def test_delta_inside_unit_interval_is_exact_and_linear():
    x = Surd(Fraction(-1, 4))
    assert delta_of(Eig.from_exact(x)) == ExactValue.from_rational(Fraction(1, 2))
    irr = Surd(1, -1, 2)    # 1 - sqrt(2), in (-1, 0)
    assert delta_of(Eig.from_exact(irr)) == ExactValue([(1, 3), (2, -2)])


def test_delta_matches_abs_definition_randomly():
    rng = random.Random(7)
    radicands = [1, 2, 3, 5, 6, 7, 13, 17]
    for _ in range(10_000):
        x = Surd(Fraction(rng.randint(-40, 40), rng.randint(1, 8)),
                 Fraction(rng.randint(-40, 40), rng.randint(1, 8)),
                 rng.choice(radicands))
        via_branch = delta_of(Eig.from_exact(x))
        direct = ExactValue.from_surd(surd_abs(x + 1)) - ExactValue.from_surd(surd_abs(x))
        assert via_branch == direct


def test_delta_approx_certified_and_refused():
    assert delta_of(Eig.from_approx(2.5, 1e-8)) == ExactValue.from_rational(1)
    assert delta_of(Eig.from_approx(-1.3473, 1e-10)) == ExactValue.from_rational(-1)
    with pytest.raises(UncertifiableBranch):
        delta_of(Eig.from_approx(0.0, 1e-8))
    with pytest.raises(UncertifiableBranch):
        delta_of(Eig.from_approx(-0.5, 1e-8))
    with pytest.raises(UncertifiableBranch):
        delta_of(Eig.from_approx(-1.0, 1e-8))


def test_delta_assume_exact_midpoint():
    assert delta_of(Eig.from_approx(0.0, 1e-8), assume_exact=True) == ExactValue.from_rational(1)
    got = delta_of(Eig.from_approx(-0.5, 1e-8), assume_exact=True)
    assert got == ExactValue.from_rational(0)


# -- discrepancy ----------------------------------------------------------

def test_discrepancy_crown3():
    s = spec([(2, 1), (1, 2), (-1, 2), (-2, 1)])
    b = discrepancy(s)
    assert b.delta_total == ExactValue.from_rational(-1)
    assert (b.sigma, b.T, b.m0) == (-1, 0, 0)
    assert b.S.is_zero


def test_discrepancy_complete_bipartite():
    t = 3
    s = spec([(t, 1), (0, 2 * t - 2), (-t, 1)])
    b = discrepancy(s)
    assert b.delta_total == ExactValue.from_rational(b.m0 - 1)
    assert b.delta_total == ExactValue.from_rational(3)


def test_discrepancy_complete_multipartite():
    a, m = 3, 2
    s = spec([((a - 1) * m, 1), (0, a * (m - 1)), (-m, a - 1)])
    b = discrepancy(s)
    assert b.delta_total == ExactValue.from_rational(a * m - 2 * a + 1)
    assert b.delta_total == ExactValue.from_rational(1)
    assert b.delta_total == ExactValue.from_rational(b.m0 + b.sigma)


def test_sp_prime_removes_single_copy_of_repeated_principal():
    # Cr(2) = 2K_2 has principal eigenvalue 1 with multiplicity 2
    s = spec([(1, 2), (-1, 2)])
    b = discrepancy(s)
    # Sp' = {1, -1, -1}: sigma = 1 - 2 = -1
    assert b.sigma == -1
    assert b.delta_total == ExactValue.from_rational(-1)


# -- energy ----------------------------------------------------------------

def test_energy_examples():
    q3 = spec([(3, 1), (1, 3), (-1, 3), (-3, 1)])
    assert energy(q3) == ExactValue.from_rational(12)
    prism = spec([(3, 1), (1, 1), (0, 2), (-2, 2)])
    assert energy(prism) == ExactValue.from_rational(8)
    shrikhande = spec([(6, 1), (2, 6), (-2, 9)])
    assert energy(shrikhande) == ExactValue.from_rational(36)


def test_energy_interval_for_approx_entries():
    s = Spectrum([(Eig.from_approx(2.4494897, 1e-8), 2),
                  (Eig.from_exact(3), 1),
                  (Eig.from_exact(-3), 1)])
    e = energy(s)
    assert isinstance(e, Approximate)
    assert e.radius == pytest.approx(2e-8)
    assert e.value == pytest.approx(6 + 2 * 2.4494897)


# -- complement ---------------------------------------------------------------

def test_complement_crown2_gives_c4():
    cr2 = spec([(1, 2), (-1, 2)])
    c4 = complement_spectrum(cr2, k=1)
    assert c4 == spec([(2, 1), (0, 2), (-2, 1)])


def test_complement_ktt_gives_2kt():
    t = 2
    ktt = spec([(t, 1), (0, 2 * t - 2), (-t, 1)])
    got = complement_spectrum(ktt, k=t)
    assert got == spec([(t - 1, 2), (-1, 2 * t - 2)])


def test_complement_is_involution():
    samples = [
        spec([(3, 1), (1, 5), (-2, 4)]),
        spec([(4, 1), (1, 2), (0, 3), (-2, 1), (-1, 3)]),
        spec([(2, 1), (Surd(Fraction(-1, 2), Fraction(1, 2), 5), 2),
              (Surd(Fraction(-1, 2), Fraction(-1, 2), 5), 2)]),
    ]
    for s in samples:
        k = int(s.principal_eig.exact.a)
        back = complement_spectrum(complement_spectrum(s, k), s.n - k - 1)
        assert back == s


def test_complement_with_loops_negates():
    s = spec([(2, 1), (0, 2), (-2, 1)])
    got = complement_spectrum(s, k=2, loops=True)
    assert got == spec([(2, 1), (1, 1), (0, 2)], principal=1) or got.multiplicity_of(1) == 1


# -- equienergy check -----------------------------------------------------------

def test_check_q3_equal():
    q3 = spec([(3, 1), (1, 3), (-1, 3), (-3, 1)])
    report = check_equienergetic(q3, k=3)
    assert report.equal
    assert report.energy == ExactValue.from_rational(12)
    assert report.energy_complement == ExactValue.from_rational(12)
    assert report.routes_agree


def test_check_k4_not_equal():
    k4 = spec([(3, 1), (-1, 3)])
    report = check_equienergetic(k4, k=3)
    assert not report.equal
    assert report.delta == ExactValue.from_rational(-3)
    assert report.routes_agree


def test_check_petersen_not_equal():
    pet = spec([(3, 1), (1, 5), (-2, 4)])
    report = check_equienergetic(pet, k=3)
    assert not report.equal
    assert report.routes_agree


def test_check_agrees_with_direct_energy_comparison():
    samples = [
        (spec([(3, 1), (1, 3), (-1, 3), (-3, 1)]), 3),
        (spec([(3, 1), (-1, 3)]), 3),
        (spec([(3, 1), (1, 5), (-2, 4)]), 3),
        (spec([(6, 1), (2, 6), (-2, 9)]), 6),
        (spec([(4, 1), (0, 3), (-2, 2)], principal=0), 4),
        (spec([(2, 1), (Surd(Fraction(-1, 2), Fraction(1, 2), 5), 2),
               (Surd(Fraction(-1, 2), Fraction(-1, 2), 5), 2)]), 2),
    ]
    for s, k in samples:
        report = check_equienergetic(s, k=k)
        direct = energy(s) == energy(complement_spectrum(s, k))
        assert report.equal == direct
        assert report.routes_agree


def test_irrational_eigenvalue_in_unit_interval_blocks_equality():
    # witness multiset with 1 - sqrt(2) inside (-1, 0): the linear branch of
    # delta makes the total discrepancy irrational, so equality is impossible
    witness = spec([(3, 1), (Surd(1, 1, 2), 6), (2, 8), (Surd(1, -1, 2), 6), (-1, 7)])
    report = check_equienergetic(witness, k=3)
    assert not report.equal
    assert not report.delta.is_rational


def test_check_with_loops_uses_n_equals_2k_plus_1():
    s = spec([(2, 1), (0, 2), (-2, 1)])     # n=4, k=2: 4 != 5
    assert not check_equienergetic(s, k=2, loops=True).equal
    s5 = spec([(2, 1), (1, 2), (-1, 1), (-2, 1)])  # n=5, k=2
    assert check_equienergetic(s5, k=2, loops=True).equal


# -- classification flags ---------------------------------------------------------

def test_classify_k33():
    s = spec([(3, 1), (0, 4), (-3, 1)])
    flags = classify_spectrum(s)
    assert flags.integral and flags.symmetric


def test_classify_petersen():
    s = spec([(3, 1), (1, 5), (-2, 4)])
    flags = classify_spectrum(s)
    assert flags.integral and not flags.symmetric and not flags.almost_symmetric


def test_classify_c5():
    s = spec([(2, 1), (Surd(Fraction(-1, 2), Fraction(1, 2), 5), 2),
              (Surd(Fraction(-1, 2), Fraction(-1, 2), 5), 2)])
    flags = classify_spectrum(s)
    assert not flags.integral


def test_classify_crown_is_almost_symmetric_and_symmetric():
    s = spec([(3, 1), (1, 3), (-1, 3), (-3, 1)])
    flags = classify_spectrum(s)
    assert flags.symmetric and flags.almost_symmetric


# -- JSON round trip ---------------------------------------------------------------

def test_spectrum_json_round_trip():
    s = Spectrum([
        (Eig.from_exact(Surd(Fraction(-1, 2), Fraction(1, 2), 5)), 2),
        (Eig.from_exact(2), 1),
        (Eig.from_approx(-1.5615528128, 1e-10), 9),
    ])
    back = Spectrum.from_json(s.to_json())
    assert back == s
    assert back.principal == s.principal
