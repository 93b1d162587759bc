from fractions import Fraction

import pytest

import mgn_euler as mg


def test_number_theory():
    assert mg.mobius(30) == -1
    assert mg.euler_phi(10) == 4
    assert mg.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert mg.bernoulli(12) == Fraction(-691, 2730)


def test_counts():
    assert mg.count_residue_tuples(5, [1, 1, 1]) == 12
    assert mg.count_residue_tuples(10, [1, 2, 5], bruteforce=True) == 4
    assert mg.count_connected_monodromies(4, 1, 2) == 12
    assert mg.count_connected_monodromies(4, 1, 2, bruteforce=True) == 12
    assert mg.count_connected_monodromies(4, 1, 2, printed_forms=["monodromy"]) == -48
    with pytest.raises(mg.DomainError):
        mg.count_residue_tuples(6, [4])


def test_orbifold_euler():
    assert mg.orb_chi(2, 0) == Fraction(-1, 240)
    assert mg.orb_chi(1, 2) == Fraction(1, 12)
    with pytest.raises(mg.UnstableError):
        mg.orb_chi(1, 0)
    with pytest.raises(ValueError):
        mg.orb_chi(0, 2)


def test_genus2_table():
    rows = mg.coefficient_table(2)
    assert len(rows) == 10
    assert len(mg.signatures(2)) == 10
    coefficients = sorted(r["coefficient"] for r in rows)
    expected = sorted(Fraction(x) for x in
                      ["-1/240", "-1/240", "2/5", "2/5", "1/6", "-1/12", "-1/12", "1/12", "1/4", "-1/8"])
    assert coefficients == expected
    for r in rows:
        product = r["chi_orb"] * r["monodromy_count"] * r["n_value"] / r["denominator"]
        assert product == r["coefficient"]


def test_series_and_schur():
    series = mg.mgn_series(2, 4)
    assert series[0] == {(): Fraction(1)}
    assert series[1] == {(1,): Fraction(2)}
    for n, schur in enumerate(mg.schur_series(2, 6)):
        assert all(m.denominator == 1 for m in schur.values()), n
    assert mg.p_to_schur({(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}, 2) == {(2,): 1}
    assert mg.mn_character([2, 1], [1, 1, 1]) == 2


def test_config_series():
    swap = {"group_order": 2, "elements": [
        {"label": "e", "chi_by_orbit_length": {"1": 2}},
        {"label": "s", "chi_by_orbit_length": {"2": 2}},
    ]}
    series = mg.config_series(swap, 2)
    assert series[2] == {(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)}
    assert mg.config_series({"strata": []}, 3) == [{}, {}, {}, {}]
    with pytest.raises(mg.SchemaError):
        mg.config_series({"group_order": 3, "elements": []}, 2)


def test_selftest():
    passed, checks = mg.selftest()
    assert passed and len(checks) == 11
    for name in mg.printed_form_names():
        passed, checks = mg.selftest([name])
        assert not passed
        assert any(c["detail"] for c in checks)
