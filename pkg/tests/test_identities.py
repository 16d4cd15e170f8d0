import pytest

from stoimenow import (
    PowerSeries,
    catalan_series,
    check_case_sums,
    check_f_equals_catalan,
    check_h_closed_forms,
    check_h_functional_equation,
    fibonacci,
    fibonacci_identity_check,
    gf_coefficients,
    gf_registry,
    h_series,
    multi_avoidance_rows,
    three_case_assembly,
)
from stoimenow.identities import h_equation_rhs
from stoimenow.series import Polynomial

CASE_SUM_NAMES = {
    "P1,P3", "P1,P4", "P2,P3", "P2,P4", "P3,P4", "P4,P5",
    "P1,P2,P3", "P1,P2,P4", "P2,P3,P4", "P1,P4,P5", "P2,P4,P5",
    "P1,P3,P4", "P3,P4,P5",
    "P1,P2,P3,P4", "P2,P3,P4,P5", "P1,P2,P4,P5", "P1,P3,P4,P5",
    "P1,P2,P3,P4,P5",
}


def test_h_series_coefficients():
    h = h_series(6)
    assert [int(c) for c in h.coeffs] == [0, 1, 2, 4, 9, 23, 65]


def test_h_closed_forms_agree():
    assert check_h_closed_forms(12)


def test_h_functional_equation():
    assert check_h_functional_equation(12)
    assert check_h_functional_equation(2)


def test_h_functional_equation_detects_perturbation():
    order = 12
    perturbed = h_series(order) + PowerSeries.monomial(1, 5, order)
    assert perturbed != h_equation_rhs(perturbed, order)


def test_f_equals_catalan():
    assert check_f_equals_catalan(12)
    assert check_f_equals_catalan(0)


def test_assembly_specializations():
    order = 12
    x = PowerSeries.monomial(1, 1, order)
    fib_like = three_case_assembly(x / (1 - x), order)
    assert fib_like == PowerSeries.from_gf(gf_registry()["P3,P4"], order)
    assert fib_like != catalan_series(order)
    single_arc = three_case_assembly(x, order)
    assert single_arc == PowerSeries.from_gf(gf_registry()["P3,P4,P5"], order)


def test_case_sums_all_pass():
    results = check_case_sums(12)
    assert set(results) == CASE_SUM_NAMES
    assert all(results.values())


def test_case_sum_detects_dropped_term():
    order = 12
    x = PowerSeries.monomial(1, 1, order)
    incomplete = (1 / (1 - x)) * (1 + x**2 / (1 - 2 * x)) + (x / (1 - x)) ** 2 * (
        x / (1 - 2 * x)
    )  # the final summand is missing
    assert incomplete != PowerSeries.from_gf(gf_registry()["P1,P3"], order)


def test_fibonacci_convention():
    assert [fibonacci(k) for k in range(1, 10)] == [1, 1, 2, 3, 5, 8, 13, 21, 34]
    with pytest.raises(ValueError):
        fibonacci(0)


def test_fibonacci_identity():
    assert fibonacci_identity_check(12)
    a = gf_coefficients(gf_registry()["P2,P4"], 5)
    assert a[5] == 34 == fibonacci(9)
    assert a[1] == 1 == fibonacci(1)


def test_registry_shape():
    reg = gf_registry()
    assert len(reg) == 29
    rows = multi_avoidance_rows()
    assert len(rows) == 26
    assert len({r.name for r in rows}) == 26
    assert all(len(r.quoted_terms) == 8 for r in rows)


def test_registry_examples():
    reg = gf_registry()
    assert reg["P2,P4"].numerator == Polynomial.parse("1-2x")
    assert reg["P2,P4"].denominator == Polynomial.parse("1-3x+x^2")
    assert reg["P1,P2,P3,P4,P5"].numerator == Polynomial.parse("1-2x+2x^2+x^3")
    assert reg["P1,P2,P3,P4,P5"].denominator == Polynomial.parse("1-x") ** 3
    assert reg["R3"].numerator == Polynomial.parse("1-x")
    assert reg["R3"].denominator == Polynomial.parse("1-2x")
    assert gf_coefficients(reg["R4"], 8) == [1, 1, 2, 4, 8, 16, 32, 64, 128]


def test_rows_sharing_a_form_share_the_object():
    reg = gf_registry()
    assert reg["P1,P4"] is reg["P1,P5"] is reg["P2,P3"]
    assert reg["P2,P4"] is reg["P4,P5"]
    assert reg["R3"] is reg["R5"]


def test_all_multi_rows_start_one_one_two_five():
    for row in multi_avoidance_rows():
        assert gf_coefficients(row.gf, 3) == [1, 1, 2, 5]
