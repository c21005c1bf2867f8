"""Seeded random elements for the verification suites and tests.

Every generator takes an explicit random.Random so that runs with the
same seed are reproducible byte for byte.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random
from typing import List

from .decomposition import HTriple
from .freealg import NCPoly, lyndon_basis, witt_dimension
from .walg import Composition, Tensor2, WPoly


def random_fraction(rng: Random) -> Fraction:
    # small numerators and denominators keep intermediate swell bounded
    num = rng.randint(-4, 4)
    den = rng.choice([1, 1, 2, 3])
    return Fraction(num, den)


def random_composition(rng: Random, weight: int) -> Composition:
    parts: List[int] = []
    rest = weight
    while rest > 0:
        a = rng.randint(1, rest)
        parts.append(a)
        rest -= a
    return tuple(parts)


def random_wpoly(rng: Random, max_weight: int, terms: int = 3) -> WPoly:
    out = WPoly()
    for _ in range(terms):
        w = rng.randint(0, max_weight)
        out = out + WPoly({random_composition(rng, w): random_fraction(rng)})
    return out


def random_tensor2(rng: Random, max_weight: int, terms: int = 3) -> Tensor2:
    out = Tensor2()
    for _ in range(terms):
        wl = rng.randint(0, max_weight)
        wr = rng.randint(0, max_weight - wl) if max_weight > wl else 0
        key = (random_composition(rng, wl), random_composition(rng, wr))
        out = out + Tensor2({key: random_fraction(rng)})
    return out


def random_htriple(rng: Random, max_degree: int, slots: int = 3) -> HTriple:
    a = {}
    b = {}
    z = {}
    for _ in range(slots):
        k = rng.randint(0, max_degree - 1)
        a[k] = a.get(k, Tensor2()) + random_tensor2(rng, max_degree - k - 1, 2)
        k = rng.randint(0, max_degree - 1)
        b[k] = b.get(k, Tensor2()) + random_tensor2(rng, max_degree - k - 1, 2)
        i = rng.randint(0, max_degree - 1)
        z[i] = z.get(i, WPoly()) + random_wpoly(rng, max_degree - i - 1, 2)
    return HTriple(a, b, z)


def random_cert(rng: Random, slots: int = 4) -> dict:
    return {k: random_fraction(rng) for k in range(slots) if rng.random() < 0.7}


def random_word_poly(rng: Random, degree: int, terms: int = 3) -> NCPoly:
    """Homogeneous element of V of the given degree."""
    from .freealg import word_from_letters

    out = NCPoly()
    for _ in range(terms):
        letters = [rng.randint(0, 1) for _ in range(degree)]
        out = out + NCPoly.from_word(word_from_letters(letters), random_fraction(rng))
    return out


def random_lie_element(rng: Random, degree: int, terms: int = 2) -> NCPoly:
    """Homogeneous element of the free Lie algebra of the given degree."""
    basis = lyndon_basis(degree)
    out = NCPoly()
    for _ in range(min(terms, witt_dimension(degree))):
        el = rng.choice(basis)
        out = out + el.poly.scale(random_fraction(rng))
    return out
