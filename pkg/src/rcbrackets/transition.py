"""Racah-type transition coefficients between iterated-bracket bases.

``u_coefficient`` returns the coefficient U^{l1,l2;k}_{l3;n,p} expressing a
left-nested double bracket [[f1,f2]_k, f3]_{n-k} in the right-nested basis
[f1, [f2,f3]_p]_{n-p}; ``u_reverse`` is the inverse family obtained from it
by the parameter swap (l1, k) <-> (l3, p).  For fixed n the two (n+1)x(n+1)
matrices are mutually inverse.

Admissibility gate used throughout (and by the rewriter): none of
l1, l2, l3, l1+l2, l2+l3, l1+l2+l3 is a nonpositive integer.  Under the
gate every denominator Pochhammer below is provably nonzero; the vanishing
check stays in as a hard error for inadmissible use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .hypergeom import HypSpec, hyp_terminating_poly, racah_value
from .poly import Poly
from .rationals import (
    RationalLike,
    as_rational,
    binom_general,
    factorial,
    is_nonpositive_integer,
    pochhammer,
)


class InadmissibleParametersError(ValueError):
    """Weight triple fails the admissibility gate."""


class VanishingDenominatorError(ZeroDivisionError):
    """A denominator Pochhammer is zero (possible only off the gate)."""


@dataclass(frozen=True)
class ParamTriple:
    lam1: Fraction
    lam2: Fraction
    lam3: Fraction

    def __init__(self, lam1: RationalLike, lam2: RationalLike, lam3: RationalLike) -> None:
        object.__setattr__(self, "lam1", as_rational(lam1))
        object.__setattr__(self, "lam2", as_rational(lam2))
        object.__setattr__(self, "lam3", as_rational(lam3))

    @property
    def total(self) -> Fraction:
        return self.lam1 + self.lam2 + self.lam3

    def is_admissible(self) -> bool:
        values = (
            self.lam1,
            self.lam2,
            self.lam3,
            self.lam1 + self.lam2,
            self.lam2 + self.lam3,
            self.total,
        )
        return not any(is_nonpositive_integer(value) for value in values)

    def swapped_outer(self) -> ParamTriple:
        return ParamTriple(self.lam3, self.lam2, self.lam1)


@dataclass(frozen=True)
class RacahQuery:
    n: int
    k: int
    p: int

    def __post_init__(self) -> None:
        for label, idx in (("n", self.n), ("k", self.k), ("p", self.p)):
            if not isinstance(idx, int) or idx < 0:
                raise ValueError(f"{label} must be a nonnegative integer, got {idx!r}")
        if self.k > self.n or self.p > self.n:
            raise ValueError(f"need 0 <= k, p <= n, got k={self.k}, p={self.p}, n={self.n}")


def _require_admissible(params: ParamTriple) -> None:
    if not params.is_admissible():
        raise InadmissibleParametersError(
            f"weights ({params.lam1}, {params.lam2}, {params.lam3}) fail the gate: "
            "no weight or consecutive partial sum may be a nonpositive integer"
        )


def _nonzero(value: Fraction, what: str) -> Fraction:
    if not value:
        raise VanishingDenominatorError(f"denominator factor {what} vanishes")
    return value


@lru_cache(maxsize=None)
def _u_cached(
    lam1: Fraction, lam2: Fraction, lam3: Fraction, n: int, k: int, p: int
) -> Fraction:
    total = lam1 + lam2 + lam3
    numerator = (
        binom_general(Fraction(n), k)
        * pochhammer(lam2, k)
        * pochhammer(lam3, n - k)
        * pochhammer(total + n - 1, p)
    )
    denominator = (
        _nonzero(pochhammer(lam3, p), f"(l3)_{p}")
        * _nonzero(pochhammer(lam2 + lam3 + p - 1, p), f"(l2+l3+p-1)_{p}")
        * _nonzero(pochhammer(lam2 + lam3 + 2 * p, n - p), f"(l2+l3+2p)_{n - p}")
    )
    return numerator / denominator * racah_value(p, k, n, lam1, lam2, lam3)


def u_coefficient(params: ParamTriple, query: RacahQuery) -> Fraction:
    """U^{l1,l2;k}_{l3;n,p}: left-nested bracket k in the right-nested basis p."""
    _require_admissible(params)
    return _u_cached(params.lam1, params.lam2, params.lam3, query.n, query.k, query.p)


def u_reverse(params: ParamTriple, query: RacahQuery) -> Fraction:
    """Inverse family: coefficient of [[f1,f2]_k, f3]_{n-k} in [f1,[f2,f3]_p]_{n-p}.

    Equals u_coefficient with l1 <-> l3 and k <-> p swapped.
    """
    _require_admissible(params)
    return _u_cached(params.lam3, params.lam2, params.lam1, query.n, query.p, query.k)


def u_matrix(params: ParamTriple, n: int) -> list[list[Fraction]]:
    """Rows k = 0..n, columns p = 0..n."""
    return [
        [u_coefficient(params, RacahQuery(n, k, p)) for p in range(n + 1)]
        for k in range(n + 1)
    ]


def u_reverse_matrix(params: ParamTriple, n: int) -> list[list[Fraction]]:
    """Rows p = 0..n, columns k = 0..n; the exact inverse of u_matrix."""
    return [
        [u_reverse(params, RacahQuery(n, k, p)) for k in range(n + 1)]
        for p in range(n + 1)
    ]


def u_generating_poly(params: ParamTriple, n: int, p: int) -> Poly:
    """Generating polynomial G(t) = sum_k U^{..;k}_{..;n,p} t^k.

    Closed product form: the prefactor
    (l3)_n (L+n-1)_p / [(l3)_p (l2+l3+p-1)_p (l2+l3+2p)_{n-p}]   (L = l1+l2+l3)
    times 2F1(-p, l1+n-p; L+n-1; t) * 2F1(p-n, p+l2; -l3-n+1; t).
    Its value at t = 1 is 1 (row-sum normalization over k for fixed p).
    """
    _require_admissible(params)
    if not isinstance(n, int) or not isinstance(p, int) or not 0 <= p <= n:
        raise ValueError(f"need integers 0 <= p <= n, got p={p!r}, n={n!r}")
    lam1, lam2, lam3 = params.lam1, params.lam2, params.lam3
    total = params.total
    prefactor = (
        pochhammer(lam3, n)
        * pochhammer(total + n - 1, p)
        / _nonzero(pochhammer(lam3, p), f"(l3)_{p}")
        / _nonzero(pochhammer(lam2 + lam3 + p - 1, p), f"(l2+l3+p-1)_{p}")
        / _nonzero(pochhammer(lam2 + lam3 + 2 * p, n - p), f"(l2+l3+2p)_{n - p}")
    )
    first = hyp_terminating_poly(HypSpec((-p, lam1 + n - p), (total + n - 1,)), var="t")
    second = hyp_terminating_poly(HypSpec((p - n, p + lam2), (-lam3 - n + 1,)), var="t")
    return prefactor * (first * second)


# -- CMZ deformation coefficients ------------------------------------------------


def _B(x: RationalLike, m: int) -> Fraction:
    return binom_general(x, m)


@lru_cache(maxsize=None)
def _cmz_sum_cached(kappa: Fraction, lam1: Fraction, lam2: Fraction, n: int) -> Fraction:
    lead = _B(-2 * lam2, n)
    if not lead:
        raise VanishingDenominatorError(f"leading factor C(-2*l2, {n}) vanishes")
    total = Fraction(0)
    for r in range(n + 1):
        s = n - r
        denom = _B(-2 * lam1, r) * _B(2 * n + 2 * lam1 + 2 * lam2 - 2, s)
        if not denom:
            raise VanishingDenominatorError(
                f"denominator C(-2*l1, {r}) * C(2n+2*l1+2*l2-2, {s}) vanishes"
            )
        total += (
            _B(-lam1, r)
            * _B(-lam1 + kappa - 1, r)
            * _B(n + lam1 + lam2 - kappa, s)
            * _B(n + lam1 + lam2 - 1, s)
            / denom
        )
    return total / lead


def cmz_t_sum(kappa: RationalLike, lam1: RationalLike, lam2: RationalLike, n: int) -> Fraction:
    """Deformation coefficient t_n^kappa(l1, l2), binomial-sum form."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"order must be a nonnegative integer, got {n!r}")
    return _cmz_sum_cached(as_rational(kappa), as_rational(lam1), as_rational(lam2), n)


@lru_cache(maxsize=None)
def _cmz_closed_cached(kappa: Fraction, lam1: Fraction, lam2: Fraction, n: int) -> Fraction:
    half = Fraction(1, 2)
    total = Fraction(0)
    for j in range(n // 2 + 1):
        denom = (
            _B(-lam1 - half, j) * _B(-lam2 - half, j) * _B(n + lam1 + lam2 - Fraction(3, 2), j)
        )
        if not denom:
            raise VanishingDenominatorError(
                f"denominator C(-l1-1/2,{j}) C(-l2-1/2,{j}) C(n+l1+l2-3/2,{j}) vanishes"
            )
        total += (
            binom_general(Fraction(n), 2 * j)
            * _B(-half, j)
            * _B(kappa - Fraction(3, 2), j)
            * _B(half - kappa, j)
            / denom
        )
    return Fraction(-1, 4) ** n * total


def cmz_t_closed(kappa: RationalLike, lam1: RationalLike, lam2: RationalLike, n: int) -> Fraction:
    """Deformation coefficient t_n^kappa(l1, l2), closed hypergeometric-style form."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"order must be a nonnegative integer, got {n!r}")
    return _cmz_closed_cached(as_rational(kappa), as_rational(lam1), as_rational(lam2), n)
