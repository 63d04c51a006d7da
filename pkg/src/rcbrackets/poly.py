"""Sparse multivariate polynomials over exact rationals.

A :class:`Poly` is a map from exponent tuples to nonzero rational
coefficients, together with an explicit variable tuple drawn from the fixed
universe ``z < x < y < t < v``.  The variable tuple is always stored in that
canonical order, exponent tuples are aligned with it positionwise, and zero
coefficients are never stored, so structural equality of the term maps is
semantic equality of polynomials.

Canonical text form: terms in graded-lex order (total degree first, then
exponents compared positionwise), e.g. ``3/2*x^2*y + 1``.  The zero
polynomial prints as ``0``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .rationals import RationalLike, as_rational, parse_rational

VAR_ORDER = ("z", "x", "y", "t", "v")

Exponents = tuple[int, ...]


class VarsetMismatchError(ValueError):
    """Binary operation on polynomials over different variable tuples."""


class UnknownVariableError(ValueError):
    """A variable name is absent from the universe or the polynomial."""


def canonical_vars(names: Iterable[str]) -> tuple[str, ...]:
    """Validate names against the universe and sort them canonically."""
    seen = []
    for name in names:
        if name not in VAR_ORDER:
            raise UnknownVariableError(f"unknown variable {name!r}; universe is {VAR_ORDER}")
        if name in seen:
            raise UnknownVariableError(f"duplicate variable {name!r}")
        seen.append(name)
    return tuple(sorted(seen, key=VAR_ORDER.index))


class Poly:
    """Immutable-by-convention sparse polynomial over Fraction coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(
        self,
        vars: Sequence[str],
        terms: Mapping[Exponents, RationalLike] | None = None,
    ) -> None:
        self.vars: tuple[str, ...] = canonical_vars(vars)
        clean: dict[Exponents, Fraction] = {}
        width = len(self.vars)
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != width or any(not isinstance(e, int) or e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps!r} for variables {self.vars}")
            coeff = as_rational(coeff)
            if coeff:
                clean[exps] = coeff
        self.terms: dict[Exponents, Fraction] = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> Poly:
        return cls(vars, {})

    @classmethod
    def const(cls, vars: Sequence[str], value: RationalLike) -> Poly:
        vars = canonical_vars(vars)
        return cls(vars, {(0,) * len(vars): value})

    @classmethod
    def variable(cls, name: str, vars: Sequence[str] | None = None) -> Poly:
        vars = canonical_vars(vars if vars is not None else (name,))
        if name not in vars:
            raise UnknownVariableError(f"{name!r} not among {vars}")
        exps = tuple(1 if w == name else 0 for w in vars)
        return cls(vars, {exps: 1})

    @classmethod
    def monomial(
        cls,
        vars: Sequence[str],
        powers: Mapping[str, int],
        coeff: RationalLike = 1,
    ) -> Poly:
        vars = canonical_vars(vars)
        for name in powers:
            if name not in vars:
                raise UnknownVariableError(f"{name!r} not among {vars}")
        exps = tuple(powers.get(w, 0) for w in vars)
        return cls(vars, {exps: coeff})

    # -- ring structure --------------------------------------------------

    def _check_same_vars(self, other: Poly) -> None:
        if self.vars != other.vars:
            raise VarsetMismatchError(f"variable tuples differ: {self.vars} vs {other.vars}")

    def __add__(self, other: Poly | RationalLike) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.const(self.vars, other)
        self._check_same_vars(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            acc = terms.get(exps, Fraction(0)) + coeff
            if acc:
                terms[exps] = acc
            else:
                terms.pop(exps, None)
        out = Poly.__new__(Poly)
        out.vars = self.vars
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self) -> Poly:
        out = Poly.__new__(Poly)
        out.vars = self.vars
        out.terms = {exps: -coeff for exps, coeff in self.terms.items()}
        return out

    def __sub__(self, other: Poly | RationalLike) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other: RationalLike) -> Poly:
        return Poly.const(self.vars, other) - self

    def __mul__(self, other: Poly | RationalLike) -> Poly:
        if not isinstance(other, Poly):
            scalar = as_rational(other)
            out = Poly.__new__(Poly)
            out.vars = self.vars
            out.terms = {e: c * scalar for e, c in self.terms.items()} if scalar else {}
            return out
        self._check_same_vars(other)
        terms: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                acc = terms.get(exps, Fraction(0)) + c1 * c2
                if acc:
                    terms[exps] = acc
                else:
                    terms.pop(exps, None)
        out = Poly.__new__(Poly)
        out.vars = self.vars
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"polynomial power needs a nonnegative integer, got {n!r}")
        out = Poly.const(self.vars, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    __hash__ = None  # mutable dict inside; not usable as a dict key

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, powers: Mapping[str, int]) -> Fraction:
        exps = tuple(powers.get(w, 0) for w in self.vars)
        return self.terms.get(exps, Fraction(0))

    def total_degree(self) -> int:
        """Degree of the zero polynomial is -1 by convention here."""
        if not self.terms:
            return -1
        return max(sum(exps) for exps in self.terms)

    def degree_in(self, name: str) -> int:
        idx = self._var_index(name)
        if not self.terms:
            return -1
        return max(exps[idx] for exps in self.terms)

    def _var_index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise UnknownVariableError(f"{name!r} not among {self.vars}") from None

    # -- calculus ----------------------------------------------------------

    def diff(self, name: str, order: int = 1) -> Poly:
        """Plain (unnormalized) partial derivative d^order / d name^order."""
        if not isinstance(order, int) or order < 0:
            raise ValueError(f"derivative order must be a nonnegative integer, got {order!r}")
        idx = self._var_index(name)
        terms = self.terms
        for _ in range(order):
            nxt: dict[Exponents, Fraction] = {}
            for exps, coeff in terms.items():
                e = exps[idx]
                if e:
                    dropped = exps[:idx] + (e - 1,) + exps[idx + 1 :]
                    nxt[dropped] = nxt.get(dropped, Fraction(0)) + coeff * e
            terms = {e: c for e, c in nxt.items() if c}
        out = Poly.__new__(Poly)
        out.vars = self.vars
        out.terms = dict(terms) if terms is self.terms else terms
        return out

    def subst(self, bindings: Mapping[str, Poly]) -> Poly:
        """Substitute polynomials for every variable of ``self``.

        All bound values must share one variable tuple, which becomes the
        variable tuple of the result.  Every variable actually occurring in
        ``self`` must be bound; a leftover unbound variable is an error.
        """
        if not bindings:
            raise UnknownVariableError("substitution needs at least one binding")
        values = list(bindings.values())
        target = values[0].vars
        for value in values[1:]:
            if value.vars != target:
                raise VarsetMismatchError(
                    f"substitution values over mixed variable tuples: {target} vs {value.vars}"
                )
        for name in bindings:
            if name not in self.vars:
                raise UnknownVariableError(f"binding for {name!r} not among {self.vars}")
        unbound = [
            name
            for pos, name in enumerate(self.vars)
            if name not in bindings and any(exps[pos] for exps in self.terms)
        ]
        if unbound:
            raise UnknownVariableError(f"unbound variables remain after substitution: {unbound}")

        value_powers: dict[str, list[Poly]] = {name: [Poly.const(target, 1)] for name in bindings}
        out = Poly.zero(target)
        for exps, coeff in self.terms.items():
            piece = Poly.const(target, coeff)
            for pos, name in enumerate(self.vars):
                e = exps[pos]
                if not e:
                    continue
                powers = value_powers[name]
                while len(powers) <= e:
                    powers.append(powers[-1] * bindings[name])
                piece = piece * powers[e]
            out = out + piece
        return out

    def eval_at(self, point: Mapping[str, RationalLike]) -> Fraction:
        """Evaluate at a full rational point."""
        missing = [
            name
            for pos, name in enumerate(self.vars)
            if name not in point and any(exps[pos] for exps in self.terms)
        ]
        if missing:
            raise UnknownVariableError(f"missing values for variables: {missing}")
        values = [as_rational(point[name]) if name in point else Fraction(0) for name in self.vars]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for base, e in zip(values, exps):
                if e:
                    term *= base**e
            total += term
        return total

    def lift(self, vars: Sequence[str]) -> Poly:
        """Reinterpret over a larger variable tuple (a superset of vars)."""
        vars = canonical_vars(vars)
        for name in self.vars:
            if name not in vars:
                raise UnknownVariableError(f"{name!r} missing from target variables {vars}")
        positions = [vars.index(name) for name in self.vars]
        width = len(vars)
        terms: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            out_exps = [0] * width
            for pos, e in zip(positions, exps):
                out_exps[pos] = e
            terms[tuple(out_exps)] = coeff
        out = Poly.__new__(Poly)
        out.vars = vars
        out.terms = terms
        return out

    # -- canonical text -----------------------------------------------------

    def _sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for exps, coeff in self._sorted_terms():
            factors = []
            for name, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = "*".join([str(mag)] + factors)
            else:
                body = str(mag)
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({'*'.join(self.vars) or '-'}: {self})"

    def __iter__(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self.terms.items())


# -- parsing ------------------------------------------------------------------


class PolySyntaxError(ValueError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_CHARS = set("+-*^()")


def _tokenize_poly(src: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_CHARS:
            if ch == "*" and i + 1 < len(src) and src[i + 1] == "*":
                tokens.append(("^", "^", i))
                i += 2
                continue
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            if j < len(src) and src[j] == "/":
                k = j + 1
                while k < len(src) and src[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise PolySyntaxError("missing denominator", j)
                tokens.append(("number", src[i:k], i))
                i = k
            else:
                tokens.append(("number", src[i:j], i))
                i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(src) and src[j].isalnum():
                j += 1
            tokens.append(("name", src[i:j], i))
            i = j
            continue
        raise PolySyntaxError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", len(src)))
    return tokens


class _PolyParser:
    """Recursive descent over: expr := term (('+'|'-') term)*;
    term := factor ('*' factor)*; factor := '-' factor | atom ('^' INT)?;
    atom := NUMBER | NAME | '(' expr ')'."""

    def __init__(self, src: str, vars: tuple[str, ...]) -> None:
        self.tokens = _tokenize_poly(src)
        self.pos = 0
        self.vars = vars

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.advance()
        if tok[0] != kind:
            raise PolySyntaxError(f"expected {kind}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def parse(self) -> Poly:
        out = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError(f"trailing input {tok[1]!r}", tok[2])
        return out

    def expr(self) -> Poly:
        out = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> Poly:
        out = self.factor()
        while self.peek()[0] == "*":
            self.advance()
            out = out * self.factor()
        return out

    def factor(self) -> Poly:
        if self.peek()[0] == "-":
            self.advance()
            return -self.factor()
        out = self.atom()
        if self.peek()[0] == "^":
            self.advance()
            tok = self.expect("number")
            if "/" in tok[1]:
                raise PolySyntaxError("exponent must be an integer", tok[2])
            return out ** int(tok[1])
        return out

    def atom(self) -> Poly:
        kind, text, position = self.advance()
        if kind == "number":
            return Poly.const(self.vars, parse_rational(text))
        if kind == "name":
            if text not in self.vars:
                raise PolySyntaxError(f"unknown variable {text!r} (allowed: {self.vars})", position)
            return Poly.variable(text, self.vars)
        if kind == "(":
            out = self.expr()
            self.expect(")")
            return out
        raise PolySyntaxError(f"expected a term, found {text or 'end of input'!r}", position)


def poly_from_string(src: str, vars: Sequence[str]) -> Poly:
    """Parse canonical/handwritten polynomial text over the given variables."""
    return _PolyParser(src, canonical_vars(vars)).parse()
