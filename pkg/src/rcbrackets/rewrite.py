"""Rewriting of nested bracket expressions into the standard basis.

The standard basis consists of right-nested combs with leaves in ascending
slot order; a :class:`StandardTerm` records the bracket orders innermost
first, together with the ascending slot tuple.  Three elementary moves are
used:

* left-nest to right-nest expansion through the transition coefficients,
* the reverse expansion through the inverse family,
* antisymmetry on a bracket of two leaves ([u, w]_m = (-1)^m [w, u]_m).

An adjacent-leaf transposition is the literal composite (reverse expansion,
antisymmetry on the now-inner leaf pair, forward expansion).  Each move
strictly decreases the lexicographic metric (leaf inversions, sum over
internal nodes of (left-subtree leaf count - 1)), so rewriting terminates;
the two built-in strategies give identical normal forms and that is checked
by the test suite as confluence evidence.

Every rewrite site is gated by local admissibility of the weight triple it
touches; an inadmissible site raises instead of producing wrong output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .brackets import (
    BracketExpr,
    DuplicateSlotError,
    Leaf,
    Node,
    expr_slots,
    expr_weight,
    format_expr,
)
from .rationals import RationalLike, as_rational, parse_rational
from .report import VerificationReport
from .transition import ParamTriple, RacahQuery, u_coefficient, u_reverse

STRATEGIES = ("leftmost", "rightmost")


class BracketSyntaxError(ValueError):
    """Malformed bracket-expression or coefficient text; carries a position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InadmissibleLocalWeightsError(ValueError):
    """A rewrite site's weight triple fails the admissibility gate."""


@dataclass(frozen=True)
class StandardTerm:
    """Right-nested comb: orders innermost first, leaves by ascending slot."""

    orders: tuple[int, ...]
    slots: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.slots) != len(self.orders) + 1:
            raise ValueError(f"need one more slot than orders, got {self}")
        if any(a >= b for a, b in zip(self.slots, self.slots[1:])):
            raise ValueError(f"slots must be strictly ascending, got {self.slots}")


LinearCombo = dict[StandardTerm, Fraction]


# -- parsing ---------------------------------------------------------------------


def parse_bracket(src: str) -> BracketExpr:
    """Parse ``f INT`` / ``[ expr , expr ]_INT`` notation, e.g. [[f1,f2]_1,f3]_0."""
    pos = 0

    def skip_ws() -> None:
        nonlocal pos
        while pos < len(src) and src[pos].isspace():
            pos += 1

    def read_int() -> int:
        nonlocal pos
        start = pos
        while pos < len(src) and src[pos].isdigit():
            pos += 1
        if pos == start:
            raise BracketSyntaxError("expected an integer", start)
        return int(src[start:pos])

    def expr() -> BracketExpr:
        nonlocal pos
        skip_ws()
        if pos >= len(src):
            raise BracketSyntaxError("unexpected end of input", pos)
        if src[pos] == "f":
            pos += 1
            return Leaf(read_int())
        if src[pos] == "[":
            pos += 1
            left = expr()
            skip_ws()
            if pos >= len(src) or src[pos] != ",":
                raise BracketSyntaxError("expected ','", pos)
            pos += 1
            right = expr()
            skip_ws()
            if pos >= len(src) or src[pos] != "]":
                raise BracketSyntaxError("expected ']'", pos)
            pos += 1
            if pos >= len(src) or src[pos] != "_":
                raise BracketSyntaxError("expected '_' after ']'", pos)
            pos += 1
            return Node(left, right, read_int())
        raise BracketSyntaxError(f"expected 'f' or '[', found {src[pos]!r}", pos)

    out = expr()
    skip_ws()
    if pos != len(src):
        raise BracketSyntaxError(f"trailing input {src[pos]!r}", pos)
    expr_slots(out)  # raises DuplicateSlotError on repeated slots
    return out


# -- standard form ----------------------------------------------------------------


def standard_tree(term: StandardTerm) -> BracketExpr:
    """The right-nested comb denoted by a standard term."""
    node: BracketExpr = Leaf(term.slots[-1])
    for order, slot in zip(term.orders, reversed(term.slots[:-1])):
        node = Node(Leaf(slot), node, order)
    return node


def _comb_profile(tree: BracketExpr) -> tuple[list[int], list[int]] | None:
    """(slots, outermost-first orders) when tree is a right comb, else None."""
    slots: list[int] = []
    orders: list[int] = []
    node = tree
    while isinstance(node, Node):
        if not isinstance(node.left, Leaf):
            return None
        slots.append(node.left.slot)
        orders.append(node.order)
        node = node.right
    slots.append(node.slot)
    return slots, orders


def is_standard(tree: BracketExpr) -> bool:
    profile = _comb_profile(tree)
    if profile is None:
        return False
    slots, _ = profile
    return all(a < b for a, b in zip(slots, slots[1:]))


def tree_to_standard_term(tree: BracketExpr) -> StandardTerm:
    profile = _comb_profile(tree)
    if profile is None or not is_standard(tree):
        raise ValueError(f"not in standard form: {format_expr(tree)}")
    slots, orders = profile
    return StandardTerm(tuple(reversed(orders)), tuple(slots))


# -- moves --------------------------------------------------------------------------


def _gate(w1: Fraction, w2: Fraction, w3: Fraction, site: BracketExpr) -> ParamTriple:
    triple = ParamTriple(w1, w2, w3)
    if not triple.is_admissible():
        raise InadmissibleLocalWeightsError(
            f"rewrite site {format_expr(site)} has inadmissible weights "
            f"({w1}, {w2}, {w3})"
        )
    return triple


def _expand_left_nest(node: Node, weights: Mapping[int, Fraction]) -> list[tuple[BracketExpr, Fraction]]:
    # [[a,b]_k, c]_m -> sum_p U_p [a, [b,c]_p]_{n-p}, n = k+m
    inner = node.left
    a, b, c = inner.left, inner.right, node.right
    k, n = inner.order, inner.order + node.order
    triple = _gate(expr_weight(a, weights), expr_weight(b, weights), expr_weight(c, weights), node)
    out = []
    for p in range(n + 1):
        u = u_coefficient(triple, RacahQuery(n, k, p))
        if u:
            out.append((Node(a, Node(b, c, p), n - p), u))
    return out


def _expand_right_nest(node: Node, weights: Mapping[int, Fraction]) -> list[tuple[BracketExpr, Fraction]]:
    # [a, [b,c]_p]_q -> sum_k Utilde_k [[a,b]_k, c]_{n-k}, n = p+q
    inner = node.right
    a, b, c = node.left, inner.left, inner.right
    p, n = inner.order, inner.order + node.order
    triple = _gate(expr_weight(a, weights), expr_weight(b, weights), expr_weight(c, weights), node)
    out = []
    for k in range(n + 1):
        u = u_reverse(triple, RacahQuery(n, k, p))
        if u:
            out.append((Node(Node(a, b, k), c, n - k), u))
    return out


def _flip(node: Node) -> tuple[BracketExpr, Fraction]:
    return Node(node.right, node.left, node.order), Fraction(-1) ** node.order


def _transpose_adjacent(node: Node, weights: Mapping[int, Fraction]) -> list[tuple[BracketExpr, Fraction]]:
    # [fi, [fj, T]_p]_q with i > j, as the literal three-step composite
    merged: dict[BracketExpr, Fraction] = {}
    for left_nested, c1 in _expand_right_nest(node, weights):
        flipped_inner, sign = _flip(left_nested.left)
        intermediate = Node(flipped_inner, left_nested.right, left_nested.order)
        for result, c2 in _expand_left_nest(intermediate, weights):
            acc = merged.get(result, Fraction(0)) + c1 * sign * c2
            if acc:
                merged[result] = acc
            else:
                merged.pop(result, None)
    return list(merged.items())


def _find_redexes(tree: BracketExpr) -> list[tuple[tuple[str, ...], str]]:
    found: list[tuple[tuple[str, ...], str]] = []

    def walk(node: BracketExpr, path: tuple[str, ...]) -> None:
        if isinstance(node, Leaf):
            return
        if isinstance(node.left, Node):
            found.append((path, "expand"))
        elif isinstance(node.right, Leaf):
            if node.left.slot > node.right.slot:
                found.append((path, "flip"))
        elif isinstance(node.right.left, Leaf) and node.left.slot > node.right.left.slot:
            found.append((path, "transpose"))
        walk(node.left, path + ("L",))
        walk(node.right, path + ("R",))

    walk(tree, ())
    return found


def _pick_redex(
    redexes: list[tuple[tuple[str, ...], str]], strategy: str
) -> tuple[tuple[str, ...], str]:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    first = "L" if strategy == "leftmost" else "R"

    def key(entry: tuple[tuple[str, ...], str]):
        path, _ = entry
        return (-len(path), tuple(0 if step == first else 1 for step in path))

    return min(redexes, key=key)


def _subtree_at(tree: BracketExpr, path: tuple[str, ...]) -> Node:
    node = tree
    for step in path:
        node = node.left if step == "L" else node.right
    return node


def _rebuild(
    tree: BracketExpr, path: tuple[str, ...], pieces: list[tuple[BracketExpr, Fraction]]
) -> list[tuple[BracketExpr, Fraction]]:
    if not path:
        return pieces
    step, rest = path[0], path[1:]
    child = tree.left if step == "L" else tree.right
    rebuilt = _rebuild(child, rest, pieces)
    if step == "L":
        return [(Node(sub, tree.right, tree.order), c) for sub, c in rebuilt]
    return [(Node(tree.left, sub, tree.order), c) for sub, c in rebuilt]


_MOVES = {
    "expand": _expand_left_nest,
    "transpose": _transpose_adjacent,
}


def to_standard(
    expr: BracketExpr,
    weights: Mapping[int, RationalLike],
    strategy: str = "leftmost",
) -> LinearCombo:
    """Rewrite into the standard basis; exact coefficients, deterministic order."""
    weights = {slot: as_rational(w) for slot, w in weights.items()}
    for slot in expr_slots(expr):
        if slot not in weights:
            raise KeyError(f"no weight bound for slot {slot}")
    combo: dict[BracketExpr, Fraction] = {expr: Fraction(1)}
    while True:
        target = next((tree for tree in combo if not is_standard(tree)), None)
        if target is None:
            break
        coeff = combo.pop(target)
        path, kind = _pick_redex(_find_redexes(target), strategy)
        site = _subtree_at(target, path)
        if kind == "flip":
            flipped, sign = _flip(site)
            pieces = [(flipped, sign)]
        else:
            pieces = _MOVES[kind](site, weights)
        for rebuilt, c in _rebuild(target, path, pieces):
            acc = combo.get(rebuilt, Fraction(0)) + coeff * c
            if acc:
                combo[rebuilt] = acc
            else:
                combo.pop(rebuilt, None)
    return {tree_to_standard_term(tree): c for tree, c in combo.items()}


def combo_add(accum: LinearCombo, incoming: LinearCombo, scale: Fraction) -> None:
    for term, c in incoming.items():
        acc = accum.get(term, Fraction(0)) + scale * c
        if acc:
            accum[term] = acc
        else:
            accum.pop(term, None)


def format_combo(combo: LinearCombo) -> str:
    """One line per term: ``coeff  (k_1,...,k_D)`` sorted by slot/order tuples."""
    if not combo:
        return "0"
    lines = []
    for term in sorted(combo, key=lambda t: (t.slots, t.orders)):
        orders = ",".join(str(k) for k in term.orders)
        lines.append(f"{combo[term]}  ({orders})")
    return "\n".join(lines)


# -- coefficient mini-language -------------------------------------------------------


def _tokenize_coeff(src: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch == "l":
            j = i + 1
            while j < len(src) and src[j].isdigit():
                j += 1
            if j == i + 1:
                raise BracketSyntaxError("expected slot number after 'l'", i)
            tokens.append(("weight", src[i + 1 : j], i))
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            if j < len(src) and src[j] == "/":
                j += 1
                start = j
                while j < len(src) and src[j].isdigit():
                    j += 1
                if j == start:
                    raise BracketSyntaxError("missing denominator", j)
            tokens.append(("number", src[i:j], i))
            i = j
            continue
        raise BracketSyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(src)))
    return tokens


def parse_coeff(src: str):
    """Parse the coefficient language: RATIONAL | l INT | + - * | parens."""
    tokens = _tokenize_coeff(src)
    pos = 0

    def peek():
        return tokens[pos]

    def advance():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def expr():
        node = term()
        while peek()[0] in ("+", "-"):
            op = advance()[0]
            node = (op, node, term())
        return node

    def term():
        node = factor()
        while peek()[0] == "*":
            advance()
            node = ("*", node, factor())
        return node

    def factor():
        kind, text, position = advance()
        if kind == "-":
            return ("neg", factor())
        if kind == "number":
            return ("num", parse_rational(text))
        if kind == "weight":
            return ("slot", int(text))
        if kind == "(":
            node = expr()
            closing = advance()
            if closing[0] != ")":
                raise BracketSyntaxError("expected ')'", closing[2])
            return node
        raise BracketSyntaxError(f"expected a coefficient, found {text or 'end of input'!r}", position)

    out = expr()
    tok = peek()
    if tok[0] != "end":
        raise BracketSyntaxError(f"trailing input {tok[1]!r}", tok[2])
    return out


def eval_coeff(ast, weights: Mapping[int, Fraction]) -> Fraction:
    kind = ast[0]
    if kind == "num":
        return ast[1]
    if kind == "slot":
        slot = ast[1]
        if slot not in weights:
            raise KeyError(f"no weight bound for slot {slot}")
        return as_rational(weights[slot])
    if kind == "neg":
        return -eval_coeff(ast[1], weights)
    a, b = eval_coeff(ast[1], weights), eval_coeff(ast[2], weights)
    if kind == "+":
        return a + b
    if kind == "-":
        return a - b
    return a * b


# -- identity certification -----------------------------------------------------------


def check_identity(
    terms: Sequence[tuple[str, str]],
    weights: Mapping[int, RationalLike],
    identity_id: str = "bracket-identity",
    strategy: str = "leftmost",
) -> VerificationReport:
    """Certify that sum_i coeff_i * expr_i rewrites to the zero combination.

    ``terms`` holds (coefficient text, bracket expression text) pairs; the
    coefficient language admits rationals, slot weights l1, l2, ..., and
    + - * with parentheses.
    """
    weights = {slot: as_rational(w) for slot, w in weights.items()}
    total: LinearCombo = {}
    for coeff_src, expr_src in terms:
        scale = eval_coeff(parse_coeff(coeff_src), weights)
        expr = parse_bracket(expr_src)
        combo_add(total, to_standard(expr, weights, strategy), scale)
    failures = []
    if total:
        failures.append(
            {
                "weights": {str(slot): str(w) for slot, w in sorted(weights.items())},
                "residual": format_combo(total),
            }
        )
    sample = {f"l{slot}": str(w) for slot, w in sorted(weights.items())}
    return VerificationReport.checked(identity_id, [sample], 1, failures)
