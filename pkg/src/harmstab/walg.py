"""The subalgebra W = Q + V*e1 in its harmonic generators, the quotient
module M = V / V*e0, and the structural operators on them.

A Composition (a1, ..., al) with ai >= 1 encodes the monomial
y[a1]...y[al], where y[a] stands for the word e0^(a-1)*e1.  The empty
composition is the unit.  The index conventions y[0] = -1 and y[a] = 0
for a < 0 are applied by :func:`ytilde` and honored by every caller.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from .freealg import (
    NCPoly,
    Word,
    word_from_letters,
    word_letters,
)

Composition = Tuple[int, ...]
Scalar = Union[int, Fraction]


def _as_fraction(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def weight(c: Composition) -> int:
    return sum(c)


class _LinComb:
    """Finitely supported rational linear combination over hashable keys."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping | None = None):
        c = {}
        if coeffs:
            for k, x in coeffs.items():
                x = _as_fraction(x)
                if x:
                    c[k] = x
        self._c = c

    @classmethod
    def _raw(cls, c: dict):
        out = cls.__new__(cls)
        out._c = c
        return out

    def coeff(self, k) -> Fraction:
        return self._c.get(k, Fraction(0))

    def items(self):
        return self._c.items()

    def support(self):
        return tuple(sorted(self._c))

    def is_zero(self) -> bool:
        return not self._c

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        c = dict(self._c)
        for k, x in other._c.items():
            y = c.get(k, 0) + x
            if y:
                c[k] = y
            else:
                c.pop(k, None)
        return type(self)._raw(c)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)._raw({k: -x for k, x in self._c.items()})

    def scale(self, c: Scalar):
        c = _as_fraction(c)
        if not c:
            return type(self)._raw({})
        return type(self)._raw({k: c * x for k, x in self._c.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        return " + ".join(
            f"({x})*{k!r}" for k, x in sorted(self._c.items(), key=lambda t: t[0])
        )


class WPoly(_LinComb):
    """Element of W as a map Composition -> Fraction."""

    @staticmethod
    def zero() -> "WPoly":
        return WPoly()

    @staticmethod
    def one() -> "WPoly":
        return WPoly({(): 1})

    @staticmethod
    def from_composition(c: Iterable[int], coeff: Scalar = 1) -> "WPoly":
        c = tuple(c)
        if any(a < 1 for a in c):
            raise ValueError(f"composition parts must be >= 1, got {c}")
        return WPoly({c: coeff})

    def __mul__(self, other):
        if isinstance(other, WPoly):
            c: dict = {}
            for u, x in self._c.items():
                for v, y in other._c.items():
                    k = u + v
                    z = c.get(k, 0) + x * y
                    if z:
                        c[k] = z
                    else:
                        c.pop(k, None)
            return WPoly._raw(c)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def weights(self) -> Tuple[int, ...]:
        return tuple(sorted({weight(k) for k in self._c}))


def ytilde(a: int) -> WPoly:
    """Generator with the extended index conventions: a scalar -1 at
    index 0 and zero at negative indices."""
    if a > 0:
        return WPoly({(a,): 1})
    if a == 0:
        return WPoly({(): -1})
    return WPoly()


def y_monomial(parts: Iterable[int]) -> WPoly:
    """Product ytilde(a1) * ... * ytilde(al); indices may be <= 0."""
    out = WPoly.one()
    for a in parts:
        out = out * ytilde(a)
        if out.is_zero():
            return out
    return out


class Tensor2(_LinComb):
    """Element of the tensor square of W, keyed by composition pairs.

    The same keys serve for the tensor square of M, read through the
    rank-1 module identification.
    """

    @staticmethod
    def zero() -> "Tensor2":
        return Tensor2()

    @staticmethod
    def one() -> "Tensor2":
        return Tensor2({((), ()): 1})

    @staticmethod
    def of(left: WPoly, right: WPoly) -> "Tensor2":
        c: dict = {}
        for u, x in left.items():
            for v, y in right.items():
                c[(u, v)] = x * y
        return Tensor2(c)

    def __mul__(self, other):
        if isinstance(other, Tensor2):
            c: dict = {}
            for (u1, v1), x in self._c.items():
                for (u2, v2), y in other._c.items():
                    k = (u1 + u2, v1 + v2)
                    z = c.get(k, 0) + x * y
                    if z:
                        c[k] = z
                    else:
                        c.pop(k, None)
            return Tensor2._raw(c)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented


class MElem(_LinComb):
    """Element of M = V / V*e0 over the basis of y-monomials acting on
    the module generator."""

    @staticmethod
    def zero() -> "MElem":
        return MElem()

    @staticmethod
    def unit() -> "MElem":
        return MElem({(): 1})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented


def act_module(w: WPoly, m: MElem) -> MElem:
    """Left action of W on the free rank-1 module M."""
    c: dict = {}
    for u, x in w.items():
        for v, y in m.items():
            k = u + v
            z = c.get(k, 0) + x * y
            if z:
                c[k] = z
            else:
                c.pop(k, None)
    return MElem._raw(c)


# -- conversions between the V picture and the W / M pictures ---------


def y_embed(c: Iterable[int]) -> NCPoly:
    """The word e0^(a1-1) e1 ... e0^(al-1) e1 of a composition."""
    letters = []
    for a in c:
        if a < 1:
            raise ValueError("composition parts must be >= 1")
        letters.extend([0] * (a - 1))
        letters.append(1)
    return NCPoly.from_word(word_from_letters(letters))


def _word_to_composition(w: Word) -> Composition:
    letters = word_letters(w)
    if letters and letters[-1] != 1:
        raise ValueError(f"word does not end in e1: {letters}")
    parts = []
    run = 0
    for a in letters:
        if a == 0:
            run += 1
        else:
            parts.append(run + 1)
            run = 0
    return tuple(parts)


def w_to_v(x: WPoly) -> NCPoly:
    out = NCPoly()
    for c, coeff in x.items():
        out = out + y_embed(c).scale(coeff)
    return out


def w_from_v(v: NCPoly) -> WPoly:
    """Inverse of w_to_v; rejects input outside Q + V*e1."""
    c: dict = {}
    for w, x in v.items():
        c[_word_to_composition(w)] = x
    return WPoly(c)


def pi(v: NCPoly) -> WPoly:
    """Projection of the positive-degree part of V onto W: the identity
    on V*e1 and zero on V*e0."""
    if v.constant_term():
        raise ValueError("input must have zero constant term")
    c: dict = {}
    for w, x in v.items():
        letters = word_letters(w)
        if letters and letters[-1] == 1:
            c[_word_to_composition(w)] = x
    return WPoly(c)


def to_m(v: NCPoly) -> MElem:
    """The canonical projection of V onto M; kills exactly V*e0."""
    c: dict = {}
    for w, x in v.items():
        letters = word_letters(w)
        if letters and letters[-1] == 0:
            continue
        k = _word_to_composition(w)
        z = c.get(k, 0) + x
        if z:
            c[k] = z
        else:
            c.pop(k, None)
    return MElem._raw(c)


# -- structural operators ---------------------------------------------


def partial(n: int, a: WPoly) -> WPoly:
    """Right strip of the generator y[n]: sends b*y[n] to b, the unit to 0."""
    if n < 1:
        raise ValueError("index must be >= 1")
    c: dict = {}
    for k, x in a.items():
        if k and k[-1] == n:
            c[k[:-1]] = x
    return WPoly(c)


def partial_prime(n: int, a: WPoly) -> WPoly:
    """Left strip of the generator y[n]: sends y[n]*b to b, the unit to 0."""
    if n < 1:
        raise ValueError("index must be >= 1")
    c: dict = {}
    for k, x in a.items():
        if k and k[0] == n:
            c[k[1:]] = x
    return WPoly(c)


def inv(a: WPoly) -> WPoly:
    """The anti-automorphism of W fixing the generators: reverses
    compositions."""
    return WPoly({k[::-1]: x for k, x in a.items()})


def epsilon(a: WPoly) -> Fraction:
    """Projection on the degree-0 part (coefficient of the unit)."""
    return a.coeff(())


def epsilon2(t: Tensor2) -> Fraction:
    """Coefficient of the unit tensor."""
    return t.coeff(((), ()))


def sigma(t: Tensor2) -> Tensor2:
    """Swap of the tensor factors."""
    return Tensor2({(v, u): x for (u, v), x in t.items()})


# -- degree functions -------------------------------------------------


def deg(a: WPoly) -> int:
    """Max last-generator index over the support; 0 for constants."""
    return max((k[-1] for k in a._c if k), default=0)


def deg_prime(a: WPoly) -> int:
    """Max first-generator index over the support; 0 for constants."""
    return max((k[0] for k in a._c if k), default=0)


def deg1(t: Tensor2) -> int:
    return max((u[-1] for (u, _) in t._c if u), default=0)


def deg2(t: Tensor2) -> int:
    return max((v[-1] for (_, v) in t._c if v), default=0)


def deg1_prime(t: Tensor2) -> int:
    return max((u[0] for (u, _) in t._c if u), default=0)


def deg2_prime(t: Tensor2) -> int:
    return max((v[0] for (_, v) in t._c if v), default=0)


def partial1(n: int, t: Tensor2) -> Tensor2:
    """partial(n) applied to the left tensor factor."""
    c: dict = {}
    for (u, v), x in t.items():
        if u and u[-1] == n:
            k = (u[:-1], v)
            z = c.get(k, 0) + x
            if z:
                c[k] = z
            else:
                c.pop(k, None)
    return Tensor2._raw(c)


def partial2(n: int, t: Tensor2) -> Tensor2:
    """partial(n) applied to the right tensor factor."""
    c: dict = {}
    for (u, v), x in t.items():
        if v and v[-1] == n:
            k = (u, v[:-1])
            z = c.get(k, 0) + x
            if z:
                c[k] = z
            else:
                c.pop(k, None)
    return Tensor2._raw(c)


def partial_both(n1: int, n2: int, t: Tensor2) -> Tensor2:
    return partial2(n2, partial1(n1, t))


def partial1_prime(n: int, t: Tensor2) -> Tensor2:
    c: dict = {}
    for (u, v), x in t.items():
        if u and u[0] == n:
            k = (u[1:], v)
            z = c.get(k, 0) + x
            if z:
                c[k] = z
            else:
                c.pop(k, None)
    return Tensor2._raw(c)


def partial2_prime(n: int, t: Tensor2) -> Tensor2:
    c: dict = {}
    for (u, v), x in t.items():
        if v and v[0] == n:
            k = (u, v[1:])
            z = c.get(k, 0) + x
            if z:
                c[k] = z
            else:
                c.pop(k, None)
    return Tensor2._raw(c)


def partial_both_prime(n1: int, n2: int, t: Tensor2) -> Tensor2:
    return partial2_prime(n2, partial1_prime(n1, t))


# -- dictionary to the signed Y-alphabet presentation -----------------


def m_to_y_alphabet(m: MElem) -> dict:
    """Expansion of an element of M over signed Y-monomials: the basis
    element of composition (n1, ..., nr) reads (-1)^r y[n1,1]...y[nr,1].
    Returns a map composition -> coefficient of the Y-monomial."""
    out = {}
    for k, x in m.items():
        out[k] = x if len(k) % 2 == 0 else -x
    return out


def m_from_y_alphabet(y: Mapping[Composition, Scalar]) -> MElem:
    """Inverse of :func:`m_to_y_alphabet`."""
    c = {}
    for k, x in y.items():
        x = _as_fraction(x)
        c[tuple(k)] = x if len(k) % 2 == 0 else -x
    return MElem(c)


# -- serialization helpers (canonical text forms) ---------------------


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def wpoly_to_json(a: WPoly) -> list:
    return [
        {"comp": list(k), "coeff": fraction_str(x)}
        for k, x in sorted(a.items(), key=lambda t: (weight(t[0]), t[0]))
    ]


def tensor2_to_json(t: Tensor2) -> list:
    return [
        {"left": list(u), "right": list(v), "coeff": fraction_str(x)}
        for (u, v), x in sorted(
            t.items(), key=lambda kv: (weight(kv[0][0]) + weight(kv[0][1]), kv[0])
        )
    ]


def melem_to_json(m: MElem) -> list:
    return [
        {"comp": list(k), "coeff": fraction_str(x)}
        for k, x in sorted(m.items(), key=lambda t: (weight(t[0]), t[0]))
    ]
