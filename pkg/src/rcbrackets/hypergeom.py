"""Terminating hypergeometric sums, Jacobi polynomials and Racah values.

Everything here is exact: a generalized hypergeometric series is admitted
only when some top parameter is a nonpositive integer, the sum is truncated
at the least such termination index T, and bottom parameters are checked for
poles over the summation range actually used (b + j != 0 for 0 <= j <= T-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly
from .rationals import (
    RationalLike,
    as_rational,
    binom_general,
    factorial,
    is_nonpositive_integer,
    pochhammer,
)


class NonTerminatingError(ValueError):
    """No top parameter is a nonpositive integer: the series does not stop."""


class BottomPoleError(ZeroDivisionError):
    """A bottom parameter hits zero inside the used summation range."""


@dataclass(frozen=True)
class HypSpec:
    """Parameter lists of a terminating pFq evaluated with unit-style argument."""

    top: tuple[Fraction, ...]
    bottom: tuple[Fraction, ...]

    def __init__(self, top, bottom) -> None:
        object.__setattr__(self, "top", tuple(as_rational(a) for a in top))
        object.__setattr__(self, "bottom", tuple(as_rational(b) for b in bottom))

    def termination_index(self) -> int:
        """Least T with some top parameter equal to -T."""
        candidates = [-int(a) for a in self.top if is_nonpositive_integer(a)]
        if not candidates:
            raise NonTerminatingError(f"no nonpositive-integer top parameter in {self.top}")
        return min(candidates)

    def check_bottom(self, upto: int) -> None:
        """Reject b + j = 0 for any bottom b and 0 <= j < upto."""
        for b in self.bottom:
            if b.denominator == 1 and -int(b) in range(upto):
                raise BottomPoleError(f"bottom parameter {b} vanishes at shift {-int(b)}")


def hyp_terminating_poly(spec: HypSpec, var: str = "t") -> Poly:
    """The terminating series as a polynomial: sum_j prod(top)_j / prod(bottom)_j * var^j / j!."""
    T = spec.termination_index()
    spec.check_bottom(T)
    terms = {}
    for j in range(T + 1):
        num = Fraction(1)
        for a in spec.top:
            num *= pochhammer(a, j)
        den = factorial(j)
        for b in spec.bottom:
            den *= pochhammer(b, j)
        coeff = num / den
        if coeff:
            terms[(j,)] = coeff
    return Poly((var,), terms)


def hyp_terminating_at_one(spec: HypSpec) -> Fraction:
    """Exact value of the terminating series at unit argument."""
    T = spec.termination_index()
    spec.check_bottom(T)
    total = Fraction(0)
    for j in range(T + 1):
        term = Fraction(1) / factorial(j)
        for a in spec.top:
            term *= pochhammer(a, j)
        for b in spec.bottom:
            term /= pochhammer(b, j)
        total += term
    return total


def jacobi_basis_admissible(alpha: RationalLike, beta: RationalLike) -> bool:
    """Degrees stay exact and {P_0..P_m} stays a basis when alpha, beta > -1
    or, more generally, alpha + beta is not a negative integer >= -(2m)."""
    return not is_nonpositive_integer(as_rational(alpha) + as_rational(beta) + 1)


def jacobi_poly(ell: int, alpha: RationalLike, beta: RationalLike) -> Poly:
    """Jacobi polynomial P_ell^(alpha,beta) in the variable v (finite sum form)."""
    if not isinstance(ell, int) or ell < 0:
        raise ValueError(f"jacobi degree must be a nonnegative integer, got {ell!r}")
    alpha, beta = as_rational(alpha), as_rational(beta)
    v = Poly.variable("v")
    one = Poly.const(("v",), 1)
    half = Fraction(1, 2)
    out = Poly.zero(("v",))
    for s in range(ell + 1):
        coeff = (-1) ** s * binom_general(ell + alpha, ell - s) * binom_general(ell + beta, s)
        if coeff:
            out = out + coeff * half**ell * (one - v) ** s * (one + v) ** (ell - s)
    return out


def jacobi_poly_hyp(ell: int, alpha: RationalLike, beta: RationalLike) -> Poly:
    """Same polynomial through its terminating 2F1 form (cross-check route).

    P_ell^(alpha,beta)(v) = ((alpha+1)_ell / ell!) 2F1(-ell, 1+alpha+beta+ell;
    alpha+1; (1-v)/2).  Requires alpha + 1 pole-free over the range used.
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    spec = HypSpec((-ell, 1 + alpha + beta + ell), (alpha + 1,))
    series = hyp_terminating_poly(spec, var="t")
    v = Poly.variable("v")
    argument = Fraction(1, 2) * (Poly.const(("v",), 1) - v)
    value = series.subst({"t": argument})
    return (pochhammer(alpha + 1, ell) / factorial(ell)) * value


def jacobi_two_var(ell: int, lam1: RationalLike, lam2: RationalLike) -> Poly:
    """Homogeneous two-variable Jacobi form in (x, y):

    sum_s (-1)^s C(ell+lam1-1, ell-s) C(ell+lam2-1, s) x^s y^(ell-s),
    which equals (x+y)^ell P_ell^(lam1-1,lam2-1)((y-x)/(x+y)).
    """
    if not isinstance(ell, int) or ell < 0:
        raise ValueError(f"jacobi degree must be a nonnegative integer, got {ell!r}")
    lam1, lam2 = as_rational(lam1), as_rational(lam2)
    terms = {}
    for s in range(ell + 1):
        coeff = (-1) ** s * binom_general(ell + lam1 - 1, ell - s) * binom_general(ell + lam2 - 1, s)
        if coeff:
            terms[(s, ell - s)] = coeff
    return Poly(("x", "y"), terms)


def jacobi_operator(alpha: RationalLike, beta: RationalLike, p: Poly) -> Poly:
    """Hypergeometric operator (1-v^2) d^2/dv^2 + (beta-alpha-(alpha+beta+2)v) d/dv.

    Acts in the variable v; any other variables of ``p`` ride along as
    coefficients.  Eigenvalue on P_ell^(alpha,beta): -ell(ell+alpha+beta+1).
    (The first-order coefficient is the classical one; the reversed sign of
    beta-alpha is incompatible with that eigenvalue property.)
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    if "v" not in p.vars:
        p = p.lift(p.vars + ("v",))
    v = Poly.variable("v", p.vars)
    one = Poly.const(p.vars, 1)
    second = (one - v * v) * p.diff("v", 2)
    first = (Poly.const(p.vars, beta - alpha) - (alpha + beta + 2) * v) * p.diff("v")
    return second + first


def racah_value(
    p: int,
    k: int,
    n: int,
    lam1: RationalLike,
    lam2: RationalLike,
    lam3: RationalLike,
) -> Fraction:
    """Racah-type terminating 4F3 at unit argument:

    R_{p,k} = 4F3(-p, p+lam2+lam3-1, -k, k+lam1+lam2-1;
                  lam2, lam1+lam2+lam3+n-1, -n; 1),  0 <= p, k <= n.

    Symmetric under swapping (p, lam1) with (k, lam3).  The bottom entry -n
    is harmless because the sum stops at min(p, k) <= n.
    """
    for label, idx in (("p", p), ("k", k), ("n", n)):
        if not isinstance(idx, int) or idx < 0:
            raise ValueError(f"{label} must be a nonnegative integer, got {idx!r}")
    if p > n or k > n:
        raise ValueError(f"indices out of range: p={p}, k={k}, n={n}")
    lam1, lam2, lam3 = as_rational(lam1), as_rational(lam2), as_rational(lam3)
    spec = HypSpec(
        (-p, p + lam2 + lam3 - 1, -k, k + lam1 + lam2 - 1),
        (lam2, lam1 + lam2 + lam3 + n - 1, Fraction(-n)),
    )
    return hyp_terminating_at_one(spec)
