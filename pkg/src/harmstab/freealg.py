"""Exact arithmetic in the free associative algebra on two generators.

Elements are rational linear combinations of words over the two-letter
alphabet {E0, E1}.  Words are stored densely as ``(length, bits)`` pairs
with E0 = 0 and E1 = 1; the first letter occupies the highest bit, so
words of equal length sort in lexicographic order (E0 < E1) and the
degree of a word is read off in O(1).

The Lie subalgebra generated by the two letters is handled through a
Lyndon-word basis per degree and the Dynkin left-bracketing criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Tuple, Union

Word = Tuple[int, int]  # (length, bits)

EMPTY_WORD: Word = (0, 0)

Scalar = Union[int, Fraction]


def word_from_letters(letters: Iterable[int]) -> Word:
    bits = 0
    length = 0
    for a in letters:
        if a not in (0, 1):
            raise ValueError(f"letter must be 0 or 1, got {a!r}")
        bits = (bits << 1) | a
        length += 1
    return (length, bits)


def word_letters(w: Word) -> Tuple[int, ...]:
    length, bits = w
    return tuple((bits >> (length - 1 - i)) & 1 for i in range(length))


def word_from_str(s: str) -> Word:
    """Parse the canonical text form: a string over "0"/"1", "" = unit."""
    return word_from_letters(int(c) for c in s)


def word_to_str(w: Word) -> str:
    return "".join(str(a) for a in word_letters(w))


def word_concat(u: Word, v: Word) -> Word:
    lu, bu = u
    lv, bv = v
    return (lu + lv, (bu << lv) | bv)


def word_degree(w: Word) -> int:
    return w[0]


def all_words(d: int) -> Iterator[Word]:
    """All 2**d words of length d, in lexicographic order."""
    for bits in range(1 << d):
        yield (d, bits)


def _as_fraction(c: Scalar) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class NCPoly:
    """Noncommutative polynomial: finitely supported map Word -> Fraction.

    Zero coefficients are never stored, so equality is map equality.
    Instances are immutable and safe to share.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[Word, Scalar] | None = None):
        c = {}
        if coeffs:
            for w, x in coeffs.items():
                x = _as_fraction(x)
                if x:
                    c[w] = x
        self._c = c

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "NCPoly":
        return NCPoly()

    @staticmethod
    def one() -> "NCPoly":
        return NCPoly({EMPTY_WORD: 1})

    @staticmethod
    def generator(letter: int) -> "NCPoly":
        return NCPoly({word_from_letters([letter]): 1})

    @staticmethod
    def from_word(w: Word, coeff: Scalar = 1) -> "NCPoly":
        return NCPoly({w: coeff})

    # -- inspection ---------------------------------------------------

    def coeff(self, w: Word) -> Fraction:
        return self._c.get(w, Fraction(0))

    def items(self):
        return self._c.items()

    def support(self) -> Tuple[Word, ...]:
        return tuple(sorted(self._c))

    def is_zero(self) -> bool:
        return not self._c

    def constant_term(self) -> Fraction:
        return self._c.get(EMPTY_WORD, Fraction(0))

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({w[0] for w in self._c}))

    def component(self, d: int) -> "NCPoly":
        """The homogeneous component of degree d."""
        if d < 0:
            raise ValueError("degree must be >= 0")
        return NCPoly({w: x for w, x in self._c.items() if w[0] == d})

    def is_homogeneous(self) -> bool:
        return len({w[0] for w in self._c}) <= 1

    def homogeneous_degree(self) -> int:
        """Degree of a nonzero homogeneous element."""
        ds = {w[0] for w in self._c}
        if len(ds) != 1:
            raise ValueError("element is zero or not homogeneous")
        return ds.pop()

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "NCPoly") -> "NCPoly":
        c = dict(self._c)
        for w, x in other._c.items():
            y = c.get(w, 0) + x
            if y:
                c[w] = y
            else:
                c.pop(w, None)
        out = NCPoly.__new__(NCPoly)
        out._c = c
        return out

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __neg__(self) -> "NCPoly":
        out = NCPoly.__new__(NCPoly)
        out._c = {w: -x for w, x in self._c.items()}
        return out

    def scale(self, c: Scalar) -> "NCPoly":
        c = _as_fraction(c)
        if not c:
            return NCPoly()
        out = NCPoly.__new__(NCPoly)
        out._c = {w: c * x for w, x in self._c.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            c: dict = {}
            for u, x in self._c.items():
                for v, y in other._c.items():
                    w = word_concat(u, v)
                    z = c.get(w, 0) + x * y
                    if z:
                        c[w] = z
                    else:
                        c.pop(w, None)
            out = NCPoly.__new__(NCPoly)
            out._c = c
            return out
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, NCPoly) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for w in sorted(self._c, key=lambda w: (w[0], w[1])):
            x = self._c[w]
            name = word_to_str(w) or "1"
            parts.append(f"({x})*{name}")
        return " + ".join(parts)


E0 = NCPoly.generator(0)
E1 = NCPoly.generator(1)


def bracket(x: NCPoly, y: NCPoly) -> NCPoly:
    """Commutator [x, y] = xy - yx."""
    return x * y - y * x


# -- Lyndon-word basis of the free Lie algebra ------------------------


def lyndon_words(d: int) -> list:
    """Lyndon words of length d over {0, 1}, via Duval's generation."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    out = []
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == d:
            out.append(tuple(w))
        while len(w) < d:
            w.append(w[-m])
        while w and w[-1] == 1:
            w.pop()
    return [t for t in sorted(out)]


@lru_cache(maxsize=None)
def _bracketing(letters: Tuple[int, ...]) -> NCPoly:
    # standard right factorization: w = uv with v the longest proper
    # Lyndon suffix; only spans matter, a fixed choice keeps output stable
    if len(letters) == 1:
        return NCPoly.generator(letters[0])
    n = len(letters)
    split = None
    for i in range(1, n):
        if _is_lyndon(letters[i:]):
            split = i
            break
    assert split is not None
    return bracket(_bracketing(letters[:split]), _bracketing(letters[split:]))


def _is_lyndon(letters: Tuple[int, ...]) -> bool:
    n = len(letters)
    return all(letters < letters[i:] + letters[:i] for i in range(1, n))


@dataclass(frozen=True)
class LyndonElement:
    """A Lyndon word together with its standard bracketing."""

    letters: Tuple[int, ...]
    poly: NCPoly

    @property
    def word(self) -> Word:
        return word_from_letters(self.letters)


def lyndon_basis(d: int) -> list:
    """Basis of the degree-d part of the Lie algebra on the two letters."""
    return [LyndonElement(w, _bracketing(w)) for w in lyndon_words(d)]


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        else:
            p += 1
    if n > 1:
        result = -result
    return result


def witt_dimension(d: int) -> int:
    """Necklace count: dimension of the degree-d part of the free Lie
    algebra on two generators, (1/d) * sum_{e|d} mu(d/e) 2**e."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    total = sum(_mobius(d // e) * (1 << e) for e in range(1, d + 1) if d % e == 0)
    assert total % d == 0
    return total // d


def dynkin_left(x: NCPoly) -> NCPoly:
    """Left-bracketing map: a1 a2 ... ad -> [..[[a1,a2],a3]..,ad]."""
    out = NCPoly()
    for w, c in x.items():
        letters = word_letters(w)
        if not letters:
            continue
        acc = NCPoly.generator(letters[0])
        for a in letters[1:]:
            acc = bracket(acc, NCPoly.generator(a))
        out = out + acc.scale(c)
    return out


def is_lie_element(x: NCPoly) -> bool:
    """Dynkin-Specht-Wever test on a homogeneous element of degree >= 1:
    x lies in the Lie subalgebra iff left-bracketing returns d*x."""
    if x.is_zero():
        return True
    d = x.homogeneous_degree()
    if d < 1:
        raise ValueError("expected homogeneous input of positive degree")
    return dynkin_left(x) == x.scale(d)
