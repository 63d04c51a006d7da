"""Deterministic weight-sample generation for the verification suites."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .transition import ParamTriple

BASE_VALUES = (Fraction(1, 2), Fraction(1), Fraction(7, 3))


def base_triples() -> list[ParamTriple]:
    """The 27 fixed triples over {1/2, 1, 7/3}, in lexicographic order."""
    return [ParamTriple(a, b, c) for a, b, c in product(BASE_VALUES, repeat=3)]


def seeded_triples(seed: int, count: int) -> list[ParamTriple]:
    """Reproducible positive rational triples, numerators/denominators <= 20."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        values = [Fraction(rng.randint(1, 20), rng.randint(1, 20)) for _ in range(3)]
        triple = ParamTriple(*values)
        if triple.is_admissible():
            out.append(triple)
    return out


def default_triples(seed: int = 42, count: int = 20) -> list[ParamTriple]:
    """Fixed grid plus seeded draws; every entry passes the admissibility gate."""
    return [t for t in base_triples() if t.is_admissible()] + seeded_triples(seed, count)
