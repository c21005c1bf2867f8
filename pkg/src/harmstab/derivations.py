"""Derivations of V, W and M attached to a positive-degree element v,
the Ihara-type bracket they induce, the correction map theta, and the
two actions on the harmonic coproducts.

The defining rule for the basic derivation is e0 -> [v, e0], e1 -> 0,
extended by Leibniz.  The (10)-variants add right multiplication by v
and descend to the quotient module M.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Tuple

from .coproducts import delta_m, delta_w
from .freealg import (
    E0,
    NCPoly,
    Word,
    bracket,
    word_from_letters,
    word_letters,
)
from .walg import (
    MElem,
    Tensor2,
    WPoly,
    to_m,
    y_embed,
)


def theta(x: NCPoly) -> NCPoly:
    """Linear correction x - (x|e0) e0 + sum_n (1/n) (x|e0^(n-1) e1) e1^n."""
    out = x - E0.scale(x.coeff(word_from_letters([0])))
    for w, c in x.items():
        letters = word_letters(w)
        n = len(letters)
        if n >= 1 and letters[-1] == 1 and all(a == 0 for a in letters[:-1]):
            e1n = NCPoly.from_word(word_from_letters([1] * n))
            out = out + e1n.scale(Fraction(c, n))
    return out


def der_v1(v: NCPoly, a: NCPoly) -> NCPoly:
    """The derivation of V with e0 -> [v, e0], e1 -> 0, applied to a."""
    image_e0 = bracket(v, E0)
    out = NCPoly()
    for w, c in a.items():
        letters = word_letters(w)
        for i, letter in enumerate(letters):
            if letter != 0:
                continue
            prefix = NCPoly.from_word(word_from_letters(letters[:i]))
            suffix = NCPoly.from_word(word_from_letters(letters[i + 1 :]))
            out = out + (prefix * image_e0 * suffix).scale(c)
    return out


def der_v10(v: NCPoly, a: NCPoly) -> NCPoly:
    """der_v1 plus right multiplication by v; preserves V*e0."""
    return der_v1(v, a) + a * v


def der_m10(v: NCPoly, m: MElem) -> MElem:
    """The endomorphism of M induced by der_v10 through the projection."""
    out = MElem()
    for c, x in m.items():
        lifted = y_embed(c)
        out = out + to_m(der_v10(v, lifted)).scale(x)
    return out


# -- the restriction of der_v1 to W, in harmonic generators -----------


def _parse_v0_word(w: Word) -> Tuple[int, ...]:
    """Exponent sequence (a0, ..., al) of a basis word of V0, read as
    e0^(a0-1) e1 ... e1 e0^(al-1)."""
    letters = word_letters(w)
    if not letters:
        raise ValueError("the empty word is not in V0")
    parts = []
    run = 0
    for a in letters:
        if a == 0:
            run += 1
        else:
            parts.append(run + 1)
            run = 0
    parts.append(run + 1)
    return tuple(parts)


def _der_w_gen(parts: Tuple[int, ...], n: int) -> WPoly:
    # closed form on y[n] for a single basis word of v: the two boundary
    # concatenations with shifted outer indices
    head = parts[:-1]
    tail = parts[1:]
    left = WPoly({head + (parts[-1] - 1 + n,): 1})
    right = WPoly({(parts[0] - 1 + n,) + tail: 1})
    return left - right


def der_w1(v: NCPoly, a: WPoly) -> WPoly:
    """Restriction of der_v1 to W, evaluated in the generator basis by
    the closed form on y[n] and the Leibniz rule."""
    gen_images = {}

    def image(n: int) -> WPoly:
        img = gen_images.get(n)
        if img is None:
            img = WPoly()
            for w, c in v.items():
                img = img + _der_w_gen(_parse_v0_word(w), n).scale(c)
            gen_images[n] = img
        return img

    out = WPoly()
    for comp, x in a.items():
        for i, n in enumerate(comp):
            prefix = WPoly({comp[:i]: 1})
            suffix = WPoly({comp[i + 1 :]: 1})
            out = out + (prefix * image(n) * suffix).scale(x)
    return out


def der_w1_tensor(v: NCPoly, t: Tensor2) -> Tensor2:
    """(der (x) id + id (x) der) on the tensor square of W."""
    out = Tensor2()
    for (u, w), x in t.items():
        left = der_w1(v, WPoly({u: 1}))
        right = der_w1(v, WPoly({w: 1}))
        out = out + Tensor2.of(left, WPoly({w: 1})).scale(x)
        out = out + Tensor2.of(WPoly({u: 1}), right).scale(x)
    return out


def der_m10_tensor(v: NCPoly, t: Tensor2) -> Tensor2:
    """(der (x) id + id (x) der) for the module variant, on M tensor M."""
    out = Tensor2()
    for (u, w), x in t.items():
        left = der_m10(v, MElem({u: 1}))
        right = der_m10(v, MElem({w: 1}))
        out = out + Tensor2.of(WPoly(dict(left.items())), WPoly({w: 1})).scale(x)
        out = out + Tensor2.of(WPoly({u: 1}), WPoly(dict(right.items()))).scale(x)
    return out


# -- the Ihara-type bracket -------------------------------------------


def ihara_bracket(v: NCPoly, vp: NCPoly) -> NCPoly:
    """der_v(v') - der_v'(v) + [v', v] on positive-degree elements."""
    if v.constant_term() or vp.constant_term():
        raise ValueError("inputs must have zero constant term")
    return der_v1(v, vp) - der_v1(vp, v) + bracket(vp, v)


# -- actions on the coproducts ----------------------------------------


def act_on_hom(
    v: NCPoly, h: Callable[[WPoly], Tensor2], w: WPoly
) -> Tensor2:
    """Action of v on an arbitrary linear map h: W -> W (x) W, evaluated
    at w: (der (x) id + id (x) der) o h - h o der."""
    return der_w1_tensor(v, h(w)) - h(der_w1(v, w))


def act_w(v: NCPoly, w: WPoly) -> Tensor2:
    """The action of v on the harmonic coproduct of W, evaluated at w."""
    if v.constant_term():
        raise ValueError("input must have zero constant term")
    return der_w1_tensor(v, delta_w(w)) - delta_w(der_w1(v, w))


def act_m_v0(v: NCPoly, m: MElem) -> Tensor2:
    # action at the level of V0, without theta; internal entry point
    return der_m10_tensor(v, delta_m(m)) - delta_m(der_m10(v, m))


def act_m(x: NCPoly, m: MElem) -> Tensor2:
    """The action of a Lie element x on the module harmonic coproduct,
    evaluated at m; theta is applied internally."""
    return act_m_v0(theta(x), m)


# -- tagged handle API ------------------------------------------------


@dataclass(frozen=True)
class DerivationHandle:
    """A defining element v of positive degree plus an action variant
    tag: "V1", "W1", "V10" act on V or W, "M10" on M."""

    v: NCPoly
    tag: str

    def __post_init__(self):
        if self.tag not in ("V1", "W1", "V10", "M10"):
            raise ValueError(f"unknown tag {self.tag!r}")
        if self.v.constant_term():
            raise ValueError("defining element must have zero constant term")


def apply_derivation(h: DerivationHandle, a):
    """Apply the derivation selected by the handle's tag; the argument
    kind must match the tag."""
    if h.tag == "V1":
        if not isinstance(a, NCPoly):
            raise TypeError("tag V1 expects an element of V")
        return der_v1(h.v, a)
    if h.tag == "V10":
        if not isinstance(a, NCPoly):
            raise TypeError("tag V10 expects an element of V")
        return der_v10(h.v, a)
    if h.tag == "W1":
        if not isinstance(a, WPoly):
            raise TypeError("tag W1 expects an element of W")
        return der_w1(h.v, a)
    if not isinstance(a, MElem):
        raise TypeError("tag M10 expects an element of M")
    return der_m10(h.v, a)
