from fractions import Fraction

import pytest

from rcbrackets.brackets import WeightedForm, monomial_form
from rcbrackets.poly import poly_from_string
from rcbrackets.star import StarSeries, TruncationMismatchError, assoc_defect, star


def zform(weight, src):
    return WeightedForm(weight, poly_from_string(src, ("z",)))


def test_inject_and_forms():
    f = monomial_form(Fraction(1, 2), 2)
    series = StarSeries.inject(f, 3)
    assert series.order == 3
    assert series.forms(0) == [f]
    assert series.forms(1) == []


def test_zeroth_order_is_pointwise_product():
    f = StarSeries.inject(zform(Fraction(1, 2), "z + 1"), 2)
    g = StarSeries.inject(zform(1, "z^2"), 2)
    product = star(f, g)
    zero_order = product.forms(0)
    assert len(zero_order) == 1
    assert zero_order[0].form == poly_from_string("z^3 + z^2", ("z",))
    assert zero_order[0].weight == Fraction(3, 2)


def test_weight_zero_constant_is_two_sided_unit():
    one = StarSeries.inject(zform(0, "1"), 4)
    f = StarSeries.inject(zform(Fraction(7, 3), "z^3 + z"), 4)
    assert star(one, f) == f
    assert star(f, one) == f


def test_truncation_mismatch_rejected():
    f = StarSeries.inject(zform(1, "z"), 2)
    g = StarSeries.inject(zform(1, "z"), 3)
    with pytest.raises(TruncationMismatchError):
        star(f, g)
    with pytest.raises(TruncationMismatchError):
        f + g


def test_series_addition_and_subtraction():
    f = StarSeries.inject(zform(1, "z"), 2)
    g = StarSeries.inject(zform(1, "z^2"), 2)
    total = f + g
    assert len(total.forms(0)) == 1  # same weight, forms merge
    assert (total - f - g).is_zero()


def test_mixed_weights_stay_separated():
    f = StarSeries.inject(zform(1, "z"), 2)
    g = StarSeries.inject(zform(2, "z"), 2)
    total = f + g
    assert len(total.forms(0)) == 2


def test_associativity_defect_vanishes_plain():
    f = monomial_form(Fraction(1, 2), 1)
    g = monomial_form(1, 2)
    h = monomial_form(Fraction(7, 3), 1)
    assert assoc_defect(f, g, h, order=4).is_zero()


def test_associativity_defect_vanishes_special_kappas():
    f = monomial_form(Fraction(1, 2), 1)
    g = monomial_form(1, 2)
    h = monomial_form(Fraction(7, 3), 1)
    for kappa in (Fraction(1, 2), Fraction(3, 2)):
        assert assoc_defect(f, g, h, order=4, kappa=kappa).is_zero()


def test_deformed_product_rescales_orders():
    # kappa = 1/2 multiplies the order-n component by (-1/4)^n
    f = StarSeries.inject(zform(Fraction(1, 2), "z^2"), 3)
    g = StarSeries.inject(zform(1, "z^3"), 3)
    plain = star(f, g)
    deformed = star(f, g, kappa=Fraction(1, 2))
    for m in range(4):
        scale = Fraction(-1, 4) ** m
        plain_forms = {piece.weight: piece.form for piece in plain.forms(m)}
        deformed_forms = {piece.weight: piece.form for piece in deformed.forms(m)}
        assert set(plain_forms) == set(deformed_forms)
        for weight, form in plain_forms.items():
            assert deformed_forms[weight] == form * scale


def test_star_zero_series():
    f = StarSeries.inject(zform(1, "z"), 2)
    zero = f - f
    assert zero.is_zero()
    assert star(f, zero).is_zero()
