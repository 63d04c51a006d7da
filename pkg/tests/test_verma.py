from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rcbrackets.brackets import WeightedForm, rc_bracket
from rcbrackets.hypergeom import jacobi_operator, jacobi_poly
from rcbrackets.poly import Poly, poly_from_string
from rcbrackets.verma import (
    Highest,
    Lowest,
    NonPolynomialResultError,
    TensorLowest,
    TensorLowestTV,
    act,
    adjoint_phi_tilde,
    divide_by_t,
    fischer,
    intertwiner_phi_tilde,
    psi_map,
)

WEIGHT_SAMPLES = (Fraction(1, 2), Fraction(1), Fraction(7, 3))

weights = st.sampled_from(WEIGHT_SAMPLES)
coeffs = st.fractions(min_value=Fraction(-5), max_value=Fraction(5), max_denominator=4).filter(bool)


def single_var_polys(var="x", max_degree=5):
    exponent = st.integers(min_value=0, max_value=max_degree)
    return st.lists(st.tuples(exponent, coeffs), max_size=3).map(
        lambda items: Poly((var,), {(e,): c for e, c in items})
    )


def two_var_polys(max_degree=4):
    exponent = st.integers(min_value=0, max_value=max_degree)
    return st.lists(st.tuples(exponent, exponent, coeffs), max_size=3).map(
        lambda items: Poly(("x", "y"), {(a, b): c for a, b, c in items})
    )


def tv_image_polys(max_degree=4):
    # elements of the (t, v) model obtained as images of Pol(x, y)
    return two_var_polys(max_degree).map(psi_map)


def _commutator(model, a, b, p):
    return act(model, a, act(model, b, p)) - act(model, b, act(model, a, p))


@given(weights, single_var_polys())
def test_sl2_relations_highest(lam, p):
    model = Highest(lam)
    assert _commutator(model, "H", "E", p) == 2 * act(model, "E", p)
    assert _commutator(model, "H", "F", p) == -2 * act(model, "F", p)
    assert _commutator(model, "E", "F", p) == act(model, "H", p)


@given(weights, single_var_polys())
def test_sl2_relations_lowest(lam, p):
    model = Lowest(lam)
    assert _commutator(model, "H", "E", p) == 2 * act(model, "E", p)
    assert _commutator(model, "H", "F", p) == -2 * act(model, "F", p)
    assert _commutator(model, "E", "F", p) == act(model, "H", p)


@given(weights, weights, two_var_polys())
def test_sl2_relations_tensor(lam1, lam2, p):
    model = TensorLowest(lam1, lam2)
    assert _commutator(model, "H", "E", p) == 2 * act(model, "E", p)
    assert _commutator(model, "H", "F", p) == -2 * act(model, "F", p)
    assert _commutator(model, "E", "F", p) == act(model, "H", p)


@given(weights, weights, tv_image_polys())
def test_sl2_relations_tensor_tv(lam1, lam2, p):
    model = TensorLowestTV(lam1, lam2)
    assert _commutator(model, "H", "E", p) == 2 * act(model, "E", p)
    assert _commutator(model, "H", "F", p) == -2 * act(model, "F", p)
    assert _commutator(model, "E", "F", p) == act(model, "H", p)


def test_unknown_generator_rejected():
    with pytest.raises(ValueError):
        act(Highest(1), "X", Poly.variable("x", ("x",)))


@given(weights, single_var_polys())
def test_casimir_scalar_on_highest(lam, p):
    # one-variable Verma modules have a central character
    assert act(Highest(lam), "C", p) == p * Fraction(lam * (lam - 2), 4)


@given(weights, single_var_polys())
def test_casimir_scalar_on_lowest(lam, p):
    assert act(Lowest(lam), "C", p) == p * Fraction(lam * (lam - 2), 4)


@given(weights, weights, two_var_polys())
def test_casimir_central_in_tensor(lam1, lam2, p):
    model = TensorLowest(lam1, lam2)
    for gen in ("H", "E", "F"):
        assert _commutator(model, "C", gen, p).is_zero()


@given(weights, weights, two_var_polys())
def test_psi_intertwines_models(lam1, lam2, p):
    source = TensorLowest(lam1, lam2)
    target = TensorLowestTV(lam1, lam2)
    for gen in ("H", "E", "F", "C"):
        assert psi_map(act(source, gen, p)) == act(target, gen, psi_map(p))


def test_tv_casimir_closed_form():
    # on the psi image the Casimir is the scalar part minus the Jacobi operator in v
    lam1, lam2 = Fraction(1, 2), Fraction(7, 3)
    model = TensorLowestTV(lam1, lam2)
    p = psi_map(poly_from_string("x^2*y + 3*x - y^2", ("x", "y")))
    scalar = Fraction((lam1 + lam2) * (lam1 + lam2 - 2), 4)
    jac = Poly.zero(("t", "v"))
    # apply the v-operator slice by slice in t
    by_t: dict[int, dict[tuple[int, ...], Fraction]] = {}
    for (et, ev), c in p.terms.items():
        by_t.setdefault(et, {})[(ev,)] = c
    for et, terms in by_t.items():
        slice_v = Poly(("v",), terms)
        out = jacobi_operator(lam1 - 1, lam2 - 1, slice_v)
        for (ev,), c in out.terms.items():
            jac = jac + Poly.monomial(("t", "v"), {"t": et, "v": ev}, c)
    assert act(model, "C", p) == p * scalar - jac


def test_tv_f_action_leaves_image():
    lam1, lam2 = Fraction(1, 2), 1
    model = TensorLowestTV(lam1, lam2)
    p = psi_map(poly_from_string("x^2 + x*y", ("x", "y")))
    act(model, "F", p)  # must not raise


def test_tv_f_action_rejects_non_image():
    # v alone has v-degree above its t-degree, so it is outside the psi image
    model = TensorLowestTV(Fraction(1, 2), 1)
    with pytest.raises(NonPolynomialResultError):
        act(model, "F", Poly.variable("v", ("t", "v")))


def test_divide_by_t():
    t = Poly.variable("t", ("t", "v"))
    v = Poly.variable("v", ("t", "v"))
    assert divide_by_t(t * v + t * t) == v + t
    with pytest.raises(NonPolynomialResultError):
        divide_by_t(v)


def test_psi_image_slices_bound_v_degree():
    # Psi(x^a y^b) lives in t^(a+b) times polynomials of v-degree <= a + b
    p = psi_map(poly_from_string("x^3*y + x*y - 7*y^2", ("x", "y")))
    for (et, ev) in p.terms:
        assert ev <= et


def test_psi_image_jacobi_decomposition():
    # each homogeneous slice decomposes exactly in the Jacobi basis P_0..P_m
    lam1, lam2 = Fraction(1, 2), Fraction(7, 3)
    alpha, beta = lam1 - 1, lam2 - 1
    p = psi_map(poly_from_string("x^2*y - 4*x^3 + y^3 + x*y", ("x", "y")))
    by_t: dict[int, dict[tuple[int, ...], Fraction]] = {}
    for (et, ev), c in p.terms.items():
        by_t.setdefault(et, {})[(ev,)] = c
    for m, terms in by_t.items():
        slice_v = Poly(("v",), terms)
        remainder = slice_v
        # triangular elimination from the top degree down
        for ell in range(m, -1, -1):
            basis = jacobi_poly(ell, alpha, beta)
            lead = basis.coeff({"v": ell})
            c = remainder.coeff({"v": ell}) / lead
            remainder = remainder - basis * c
        assert remainder.is_zero()


# -- Fischer pairing ---------------------------------------------------------------


def test_fischer_monomial_orthogonality():
    x2y = Poly.monomial(("x", "y"), {"x": 2, "y": 1})
    assert fischer(x2y, x2y) == 2  # 2! * 1!
    other = Poly.monomial(("x", "y"), {"x": 1, "y": 2})
    assert fischer(x2y, other) == 0


@given(two_var_polys(), two_var_polys())
def test_fischer_symmetry(p, q):
    assert fischer(p, q) == fischer(q, p)


@given(two_var_polys(), two_var_polys(), two_var_polys())
def test_fischer_bilinear(p, q, r):
    assert fischer(p + q, r) == fischer(p, r) + fischer(q, r)


@given(two_var_polys(), two_var_polys())
def test_fischer_multiplication_adjoint_to_derivative(p, q):
    x = Poly.variable("x", ("x", "y"))
    assert fischer(x * p, q) == fischer(p, q.diff("x"))


@given(weights, single_var_polys(), single_var_polys())
def test_contragredient_duality(lam, p, q):
    # the highest(lam) action is minus the fischer-adjoint of the lowest(lam) action
    for gen in ("H", "E", "F"):
        left = fischer(act(Highest(lam), gen, p), q)
        right = fischer(p, act(Lowest(lam), gen, q))
        assert left + right == 0


# -- intertwiners ------------------------------------------------------------------


@given(
    weights,
    weights,
    st.integers(min_value=0, max_value=3),
    single_var_polys(max_degree=4),
)
def test_intertwiner_equivariance(lam1, lam2, ell, q):
    source = Lowest(lam1 + lam2 + 2 * ell)
    target = TensorLowest(lam1, lam2)
    for gen in ("H", "E", "F"):
        moved = act(source, gen, q)
        lhs = intertwiner_phi_tilde(ell, lam1, lam2, moved)
        rhs = act(target, gen, intertwiner_phi_tilde(ell, lam1, lam2, q))
        assert lhs == rhs


def test_intertwiner_constant_lands_on_jacobi_form():
    from rcbrackets.hypergeom import jacobi_two_var

    lam1, lam2 = Fraction(1, 2), Fraction(7, 3)
    one = Poly.const(("x",), 1)
    assert intertwiner_phi_tilde(2, lam1, lam2, one) == jacobi_two_var(2, lam1, lam2)


def test_adjoint_reproduces_bracket_on_split_monomials():
    lam1, lam2 = Fraction(1, 2), Fraction(7, 3)
    for a in range(4):
        for b in range(4):
            for ell in range(4):
                split = Poly.monomial(("x", "y"), {"x": a, "y": b})
                got = adjoint_phi_tilde(ell, lam1, lam2, split)
                f = WeightedForm(lam1, poly_from_string(f"z^{a}", ("z",)))
                g = WeightedForm(lam2, poly_from_string(f"z^{b}", ("z",)))
                assert got == rc_bracket(f, g, ell).form


@given(
    st.integers(min_value=0, max_value=3),
    single_var_polys(var="z", max_degree=3),
    two_var_polys(max_degree=3),
)
def test_adjoint_is_fischer_adjoint(ell, q, p):
    lam1, lam2 = Fraction(1, 2), Fraction(7, 3)
    image = intertwiner_phi_tilde(ell, lam1, lam2, q)
    back = adjoint_phi_tilde(ell, lam1, lam2, p)
    # compare <Phi q, p> in Pol(x, y) with <q, adjoint p> in one variable
    assert fischer(image, p) == fischer(q, back)


def test_casimir_eigenvalue_on_jacobi_slices():
    lam1, lam2 = Fraction(1, 2), Fraction(7, 3)
    model = TensorLowestTV(lam1, lam2)
    t = Poly.variable("t", ("t", "v"))
    for ell in range(5):
        basis = jacobi_poly(ell, lam1 - 1, lam2 - 1).lift(("t", "v"))
        for extra in range(3):
            vector = t ** (ell + extra) * basis
            mu = Fraction((lam1 + lam2 + 2 * ell) * (lam1 + lam2 + 2 * ell - 2), 4)
            assert act(model, "C", vector) == vector * mu


def test_casimir_eigenvalues_distinct():
    for lam1, lam2 in ((Fraction(1, 2), Fraction(7, 3)), (1, 1), (Fraction(2, 5), Fraction(11, 4))):
        mus = [
            Fraction((lam1 + lam2 + 2 * ell) * (lam1 + lam2 + 2 * ell - 2), 4)
            for ell in range(9)
        ]
        assert len(set(mus)) == len(mus)
