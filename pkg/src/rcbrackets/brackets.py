"""Rankin-Cohen brackets on weighted polynomial stand-ins.

A :class:`WeightedForm` is a polynomial in z tagged with a rational weight;
the degree-n bracket of weights (a, b) is

    [f, g]_n = sum_s (-1)^s C(a+n-1, n-s) C(b+n-1, s) f^(s) g^(n-s)

with plain (unnormalized) derivatives, and the result carries weight
a + b + 2n.  Bracket expression trees (leaves = numbered function slots,
nodes = brackets with an order) evaluate bottom-up with that weight rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from .poly import Poly
from .rationals import RationalLike, as_rational, binom_general


class WeightedForm:
    """A polynomial in z tagged with the rational weight it transforms at."""

    __slots__ = ("weight", "form")

    def __init__(self, weight: RationalLike, form: Poly) -> None:
        if form.vars not in ((), ("z",)):
            raise ValueError(f"weighted forms live in the variable z, got {form.vars}")
        self.weight = as_rational(weight)
        self.form = form.lift(("z",))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedForm):
            return NotImplemented
        return self.weight == other.weight and self.form == other.form

    def __repr__(self) -> str:
        return f"WeightedForm(weight={self.weight}, form={self.form})"


def monomial_form(weight: RationalLike, degree: int, coeff: RationalLike = 1) -> WeightedForm:
    """Convenience: coeff * z^degree at the given weight."""
    return WeightedForm(weight, Poly.monomial(("z",), {"z": degree}, coeff))


@lru_cache(maxsize=None)
def bracket_coeff_row(weight1: Fraction, weight2: Fraction, n: int) -> tuple[Fraction, ...]:
    """Coefficient of f^(s) g^(n-s) in [f, g]_n, for s = 0..n."""
    return tuple(
        (-1) ** s * binom_general(weight1 + n - 1, n - s) * binom_general(weight2 + n - 1, s)
        for s in range(n + 1)
    )


def _falling(a: int, s: int) -> int:
    out = 1
    for i in range(s):
        out *= a - i
    return out


@lru_cache(maxsize=None)
def _monomial_bracket(
    weight1: Fraction, weight2: Fraction, n: int, deg1: int, deg2: int
) -> tuple[int, Fraction]:
    """Bracket of z^deg1 with z^deg2: returns (result degree, coefficient)."""
    row = bracket_coeff_row(weight1, weight2, n)
    scalar = Fraction(0)
    for s in range(n + 1):
        if s <= deg1 and n - s <= deg2:
            scalar += row[s] * _falling(deg1, s) * _falling(deg2, n - s)
    return deg1 + deg2 - n, scalar


def rc_bracket(f: WeightedForm, g: WeightedForm, n: int) -> WeightedForm:
    """The degree-n Rankin-Cohen bracket; result weight f.weight + g.weight + 2n."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"bracket order must be a nonnegative integer, got {n!r}")
    out_weight = f.weight + g.weight + 2 * n
    fterms, gterms = f.form.terms, g.form.terms
    if len(fterms) <= 1 and len(gterms) <= 1:
        # single-monomial fast path through the cached scalar form
        terms: dict[tuple[int, ...], Fraction] = {}
        for (a,), ca in fterms.items():
            for (b,), cb in gterms.items():
                deg, scalar = _monomial_bracket(f.weight, g.weight, n, a, b)
                if scalar:
                    terms[(deg,)] = ca * cb * scalar
        return WeightedForm(out_weight, Poly(("z",), terms))
    row = bracket_coeff_row(f.weight, g.weight, n)
    f_derivs = [f.form]
    g_derivs = [g.form]
    for _ in range(n):
        f_derivs.append(f_derivs[-1].diff("z"))
        g_derivs.append(g_derivs[-1].diff("z"))
    total = Poly.zero(("z",))
    for s in range(n + 1):
        if row[s]:
            total = total + row[s] * (f_derivs[s] * g_derivs[n - s])
    return WeightedForm(out_weight, total)


# -- bracket expression trees ---------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    slot: int

    def __post_init__(self) -> None:
        if not isinstance(self.slot, int) or self.slot < 1:
            raise ValueError(f"leaf slots are positive integers, got {self.slot!r}")


@dataclass(frozen=True)
class Node:
    left: BracketExpr
    right: BracketExpr
    order: int

    def __post_init__(self) -> None:
        if not isinstance(self.order, int) or self.order < 0:
            raise ValueError(f"bracket order must be a nonnegative integer, got {self.order!r}")


BracketExpr = Union[Leaf, Node]


class UnboundSlotError(KeyError):
    """A leaf slot has no binding during evaluation."""


class DuplicateSlotError(ValueError):
    """A slot index occurs twice inside one bracket expression."""


def expr_slots(expr: BracketExpr) -> tuple[int, ...]:
    """Leaf slots in left-to-right order; duplicates are rejected."""
    out: list[int] = []

    def walk(node: BracketExpr) -> None:
        if isinstance(node, Leaf):
            if node.slot in out:
                raise DuplicateSlotError(f"slot {node.slot} occurs twice")
            out.append(node.slot)
        else:
            walk(node.left)
            walk(node.right)

    walk(expr)
    return tuple(out)


def expr_total_order(expr: BracketExpr) -> int:
    """Sum of bracket orders over all internal nodes."""
    if isinstance(expr, Leaf):
        return 0
    return expr.order + expr_total_order(expr.left) + expr_total_order(expr.right)


def expr_weight(expr: BracketExpr, weights: Mapping[int, Fraction]) -> Fraction:
    """Weight carried by the expression: leaf weights plus 2x each order."""
    if isinstance(expr, Leaf):
        try:
            return as_rational(weights[expr.slot])
        except KeyError:
            raise UnboundSlotError(f"no weight bound for slot {expr.slot}") from None
    return expr_weight(expr.left, weights) + expr_weight(expr.right, weights) + 2 * expr.order


def format_expr(expr: BracketExpr) -> str:
    if isinstance(expr, Leaf):
        return f"f{expr.slot}"
    return f"[{format_expr(expr.left)},{format_expr(expr.right)}]_{expr.order}"


def eval_bracket_tree(expr: BracketExpr, leaves: Mapping[int, WeightedForm]) -> WeightedForm:
    """Evaluate bottom-up; every leaf slot must be bound."""
    if isinstance(expr, Leaf):
        try:
            return leaves[expr.slot]
        except KeyError:
            raise UnboundSlotError(f"no form bound for slot {expr.slot}") from None
    left = eval_bracket_tree(expr.left, leaves)
    right = eval_bracket_tree(expr.right, leaves)
    return rc_bracket(left, right, expr.order)
