"""Decomposition of the coproduct action into slot maps.

A positive-degree element v is sent by H to a triple of finitely
supported sequences (a, b, z): two sequences of tensors collecting the
boundary coproduct defects of v's basis words, and one sequence in W
collecting the index-shifted mixing terms.  The map h turns a triple
into a sequence of tensors indexed by n > 0, and the map i extends such
a sequence to a coproduct derivation of W.  The composite i o h o H
recovers the action of v on the harmonic coproduct, and the kernel of h
is exactly the image of the scalar embedding j, which turns membership
of H(v) in Im j into a finite, exact stabilizer criterion.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from .coproducts import delta_seq, delta_w
from .derivations import _parse_v0_word
from .freealg import NCPoly
from .walg import (
    Composition,
    Tensor2,
    WPoly,
    deg,
    deg1,
    deg1_prime,
    deg2,
    deg2_prime,
    deg_prime,
    epsilon2,
    tensor2_to_json,
    wpoly_to_json,
    y_monomial,
)


def coproduct_defect(w: WPoly) -> Tensor2:
    """delta_w(w) - w (x) 1 - 1 (x) w."""
    return delta_w(w) - Tensor2.of(w, WPoly.one()) - Tensor2.of(WPoly.one(), w)


def map_L(k: int, v: NCPoly) -> Tensor2:
    """Coproduct defect of the left truncation, on words whose last
    exponent equals k."""
    if k < 1:
        raise ValueError("slot index must be >= 1")
    if v.constant_term():
        raise ValueError("input must have zero constant term")
    out = Tensor2()
    for w, c in v.items():
        parts = _parse_v0_word(w)
        if parts[-1] == k:
            out = out + coproduct_defect(WPoly({parts[:-1]: 1})).scale(c)
    return out


def map_R(k: int, v: NCPoly) -> Tensor2:
    """Coproduct defect of the right truncation, on words whose first
    exponent equals k."""
    if k < 1:
        raise ValueError("slot index must be >= 1")
    if v.constant_term():
        raise ValueError("input must have zero constant term")
    out = Tensor2()
    for w, c in v.items():
        parts = _parse_v0_word(w)
        if parts[0] == k:
            out = out + coproduct_defect(WPoly({parts[1:]: 1})).scale(c)
    return out


def map_Mi(i: int, v: NCPoly) -> WPoly:
    """Mixing term: shift the outer exponents down by i and take the
    difference of the two boundary monomials (index conventions apply)."""
    if i < 1:
        raise ValueError("slot index must be >= 1")
    if v.constant_term():
        raise ValueError("input must have zero constant term")
    out = WPoly()
    for w, c in v.items():
        parts = _parse_v0_word(w)
        left = y_monomial(parts[:-1] + (parts[-1] - i,))
        right = y_monomial((parts[0] - i,) + parts[1:])
        out = out + (left - right).scale(c)
    return out


@dataclass(frozen=True)
class HTriple:
    """Finitely supported slot sequences (a_k), (b_k) in the tensor
    square of W and (z_i) in W; zero slots are not stored."""

    a: Mapping[int, Tensor2] = field(default_factory=dict)
    b: Mapping[int, Tensor2] = field(default_factory=dict)
    z: Mapping[int, WPoly] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "a", {k: t for k, t in self.a.items() if not t.is_zero()})
        object.__setattr__(self, "b", {k: t for k, t in self.b.items() if not t.is_zero()})
        object.__setattr__(self, "z", {i: w for i, w in self.z.items() if not w.is_zero()})

    def __add__(self, other: "HTriple") -> "HTriple":
        a = dict(self.a)
        for k, t in other.a.items():
            a[k] = a.get(k, Tensor2()) + t
        b = dict(self.b)
        for k, t in other.b.items():
            b[k] = b.get(k, Tensor2()) + t
        z = dict(self.z)
        for i, w in other.z.items():
            z[i] = z.get(i, WPoly()) + w
        return HTriple(a, b, z)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HTriple)
            and self.a == other.a
            and self.b == other.b
            and self.z == other.z
        )

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.z)

    def to_json(self) -> dict:
        return {
            "a": [{"k": k, "tensor": tensor2_to_json(t)} for k, t in sorted(self.a.items())],
            "b": [{"k": k, "tensor": tensor2_to_json(t)} for k, t in sorted(self.b.items())],
            "z": [{"i": i, "wpoly": wpoly_to_json(w)} for i, w in sorted(self.z.items())],
        }


def map_H(v: NCPoly) -> HTriple:
    """Assemble all slots: slot k of a is map_L(k+1, v), slot k of b is
    map_R(k+1, v), slot i of z is map_Mi(i+1, v)."""
    if v.constant_term():
        raise ValueError("input must have zero constant term")
    if v.is_zero():
        return HTriple()
    max_part = 0
    for w in v.support():
        parts = _parse_v0_word(w)
        max_part = max(max_part, parts[0], parts[-1])
    a = {k: map_L(k + 1, v) for k in range(max_part)}
    b = {k: map_R(k + 1, v) for k in range(max_part)}
    z = {i: map_Mi(i + 1, v) for i in range(max_part)}
    return HTriple(a, b, z)


class DeltaDerivationSeq:
    """Lazy sequence n -> tensor in the square of W, with a memo table.

    Under the extension map it determines a coproduct derivation; exact
    equality decisions always go through the Im j certificate, finite
    windows are cross-checks only.
    """

    def __init__(self, fn):
        self._fn = fn
        self._memo: Dict[int, Tensor2] = {}

    def __call__(self, n: int) -> Tensor2:
        if n < 1:
            raise ValueError("index must be >= 1")
        t = self._memo.get(n)
        if t is None:
            t = self._fn(n)
            self._memo[n] = t
        return t


def map_h_eval(t: HTriple, n: int) -> Tensor2:
    """Value at n of the sequence attached to a triple:
    sum_k (a_k D(n+k) - D(n+k) b_k) + sum_i (z_i (x) y[n+i] + y[n+i] (x) z_i)."""
    if n < 1:
        raise ValueError("index must be >= 1")
    out = Tensor2()
    for k, ak in t.a.items():
        out = out + ak * delta_seq(n + k)
    for k, bk in t.b.items():
        out = out - delta_seq(n + k) * bk
    for i, zi in t.z.items():
        yni = WPoly({(n + i,): 1})
        out = out + Tensor2.of(zi, yni) + Tensor2.of(yni, zi)
    return out


def map_h(t: HTriple) -> DeltaDerivationSeq:
    return DeltaDerivationSeq(lambda n: map_h_eval(t, n))


def map_i_eval(s, c: Composition) -> Tensor2:
    """Extension of a sequence to a coproduct derivation, evaluated on
    the monomial of a composition: sum over positions of
    delta_w(prefix) * s(n_i) * delta_w(suffix)."""
    out = Tensor2()
    for i, n in enumerate(c):
        prefix = delta_w(WPoly({c[:i]: 1}))
        suffix = delta_w(WPoly({c[i + 1 :]: 1}))
        out = out + prefix * s(n) * suffix
    return out


def map_i_eval_w(s, w: WPoly) -> Tensor2:
    out = Tensor2()
    for c, x in w.items():
        out = out + map_i_eval(s, c).scale(x)
    return out


def map_j(c: Union[Mapping[int, Fraction], Iterable[Fraction]]) -> HTriple:
    """Scalar embedding: a_k = b_k = c_k * 1 (x) 1, z = 0."""
    if not isinstance(c, Mapping):
        c = {k: x for k, x in enumerate(c)}
    unit = Tensor2.one()
    a = {k: unit.scale(x) for k, x in c.items() if x}
    b = {k: unit.scale(x) for k, x in c.items() if x}
    return HTriple(a, b, {})


def in_im_j(t: HTriple) -> Tuple[bool, Optional[Dict[int, Fraction]]]:
    """Exact membership in the image of the scalar embedding: every a_k
    and b_k a scalar multiple of the unit tensor with equal scalars, and
    z = 0.  By exactness of (j, h) this decides vanishing of the
    attached sequence with no truncation."""
    if t.z:
        return False, None
    cert: Dict[int, Fraction] = {}
    unit_key = ((), ())
    for k, ak in t.a.items():
        if set(ak.items()) != {(unit_key, ak.coeff(unit_key))}:
            return False, None
        cert[k] = ak.coeff(unit_key)
    for k, bk in t.b.items():
        if set(bk.items()) != {(unit_key, bk.coeff(unit_key))}:
            return False, None
        if cert.get(k, Fraction(0)) != bk.coeff(unit_key):
            return False, None
    if set(cert) != set(t.b):
        return False, None
    return True, cert


def bound_N(t: HTriple) -> int:
    """Stabilization bound from the b and z slots."""
    vals = [0]
    vals += [deg1(bk) for bk in t.b.values()]
    vals += [deg2(bk) for bk in t.b.values()]
    vals += [deg(zi) for zi in t.z.values()]
    return max(vals)


def bound_N_prime(t: HTriple) -> int:
    """Opposite-side stabilization bound, from the a and z slots."""
    vals = [0]
    vals += [deg1_prime(ak) for ak in t.a.values()]
    vals += [deg2_prime(ak) for ak in t.a.values()]
    vals += [deg_prime(zi) for zi in t.z.values()]
    return max(vals)


def verify_decomposition(v: NCPoly, n_max: int) -> bool:
    """Check act_w(v, y[n]) == (i o h o H)(v) at y[n] for 1 <= n <= n_max,
    with both sides computed independently."""
    from .derivations import act_w

    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    s = map_h(map_H(v))
    for n in range(1, n_max + 1):
        if act_w(v, WPoly({(n,): 1})) != s(n):
            return False
    return True


def stabilization_report(t: HTriple, k_max: int, window: int = 3) -> dict:
    """Verify the three eventually-constant sequences attached to a
    triple beyond their explicit bounds, for slots k <= k_max.

    Checks, for n past the bound (up to ``window`` further terms):
      * left strip pair at (n, n+k) of the value at 2n equals
        a_k - eps2(b_k) * unit,
      * the primed analogue equals -b_k + eps2(a_k) * unit,
      * the z-only sequence recovers z_i.
    """
    from .walg import partial_both, partial_both_prime

    n0 = bound_N(t)
    n0p = bound_N_prime(t)
    unit = Tensor2.one()
    results = {"bound": n0, "bound_prime": n0p, "left": True, "right": True, "z": True}
    for k in range(k_max + 1):
        ak = t.a.get(k, Tensor2())
        bk = t.b.get(k, Tensor2())
        left_limit = ak - unit.scale(epsilon2(bk))
        right_limit = -bk + unit.scale(epsilon2(ak))
        # the opposite-side slots can still leak into the strip pair at
        # n <= k, so the window starts past max(bound, k)
        start = max(n0, k) + 1
        for n in range(start, start + window):
            if partial_both(n, n + k, map_h_eval(t, 2 * n)) != left_limit:
                results["left"] = False
        start = max(n0p, k) + 1
        for n in range(start, start + window):
            if partial_both_prime(n, n + k, map_h_eval(t, 2 * n)) != right_limit:
                results["right"] = False
    z_only = HTriple({}, {}, dict(t.z))
    nz = bound_N(z_only)
    for i in sorted(t.z) + [max(t.z, default=-1) + 1]:
        if i < 0:
            continue
        zi = t.z.get(i, WPoly())
        for n in range(nz + 1, nz + 1 + window):
            val = map_h_eval(z_only, n)
            # ((eps o partial_{n+i}) (x) id): keep terms whose left factor
            # strips to the unit
            recovered = WPoly(
                {
                    right: c
                    for (left, right), c in val.items()
                    if left == (n + i,)
                }
            )
            if recovered != zi:
                results["z"] = False
    results["ok"] = results["left"] and results["right"] and results["z"]
    return results
