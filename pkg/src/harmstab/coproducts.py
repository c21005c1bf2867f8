"""The harmonic coproducts on W and on M, and primitive elements of M.

On the generator y[n] the coproduct is the negated full convolution
sum with the index-0 convention, i.e.

    delta_w(y[n]) = y[n] (x) 1 + 1 (x) y[n] - sum_{i=1}^{n-1} y[i] (x) y[n-i],

extended to all of W as the unique algebra morphism.  The coproduct on
M is induced through the free rank-1 module structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List

from . import linalg
from .walg import (
    Composition,
    MElem,
    Tensor2,
    WPoly,
    weight,
    y_monomial,
)


@lru_cache(maxsize=None)
def _delta_gen(n: int) -> Tensor2:
    if n < 1:
        raise ValueError("generator index must be >= 1")
    out = Tensor2.of(ytilde_pos(n), WPoly.one()) + Tensor2.of(WPoly.one(), ytilde_pos(n))
    for i in range(1, n):
        out = out - Tensor2.of(ytilde_pos(i), ytilde_pos(n - i))
    return out


def ytilde_pos(a: int) -> WPoly:
    return WPoly({(a,): 1})


@lru_cache(maxsize=None)
def _delta_monomial(c: Composition) -> Tensor2:
    if not c:
        return Tensor2.one()
    if len(c) == 1:
        return _delta_gen(c[0])
    return _delta_monomial(c[:-1]) * _delta_gen(c[-1])


def delta_w(a: WPoly) -> Tensor2:
    """Harmonic coproduct on W (multiplicative over composition parts)."""
    out = Tensor2.zero()
    for c, x in a.items():
        out = out + _delta_monomial(c).scale(x)
    return out


def delta_seq(n: int) -> Tensor2:
    """The tensor -delta_w(y[n]) = sum_{i=0}^{n} y[i] (x) y[n-i]."""
    if n < 1:
        raise ValueError("index must be >= 1")
    return -_delta_gen(n)


def delta_seq_direct(n: int) -> Tensor2:
    """Independent evaluation of the defining convolution sum, kept as a
    cross-check oracle for delta_seq."""
    out = Tensor2.zero()
    for i in range(0, n + 1):
        out = out + Tensor2.of(y_monomial([i]), y_monomial([n - i]))
    return out


def delta_m(m: MElem) -> Tensor2:
    """Module harmonic coproduct; keys are read in the tensor square of M."""
    return delta_w(WPoly(dict(m.items())))


def primitive_defect(m: MElem) -> Tensor2:
    """delta_m(m) - m (x) 1 - 1 (x) m; zero exactly on primitives."""
    as_w = WPoly(dict(m.items()))
    return (
        delta_m(m)
        - Tensor2.of(as_w, WPoly.one())
        - Tensor2.of(WPoly.one(), as_w)
    )


def m_basis(d: int) -> List[Composition]:
    """Compositions of weight d in graded lexicographic order: the
    monomial basis of the degree-d part of M (and of W for d >= 1)."""
    if d == 0:
        return [()]

    def rec(rest):
        if rest == 0:
            yield ()
            return
        for first in range(1, rest + 1):
            for tail in rec(rest - first):
                yield (first,) + tail

    return sorted(rec(d))


@dataclass(frozen=True)
class PrimitiveBasis:
    """Echelonized basis of the primitive part of M in one degree."""

    degree: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        from .walg import melem_to_json

        return {
            "degree": self.degree,
            "dim": self.dim,
            "basis": [melem_to_json(m) for m in self.basis],
        }


def primitives_basis(d: int) -> PrimitiveBasis:
    """Exact rational nullspace of the primitivity condition in degree d,
    echelonized over the graded lexicographic composition basis."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    comps = m_basis(d)
    columns = [dict(primitive_defect(MElem({c: 1})).items()) for c in comps]
    kernel = linalg.kernel_basis(columns, len(comps))
    basis = tuple(
        MElem({comps[j]: x for j, x in vec.items()}) for vec in kernel
    )
    return PrimitiveBasis(degree=d, basis=basis)
