"""Per-degree stabilizer subspaces of the two harmonic coproducts and
the graded equality check between them.

The system of record for the W-side stabilizer is exact: v stabilizes
the coproduct iff its slot triple H(v) (after theta, on the Lie side)
lies in the image of the scalar embedding j.  For homogeneous v of
degree d only the certificate scalar at slot d can be nonzero, so the
membership condition is one auxiliary variable adjoined to a sparse
rational kernel computation.  The M-side stabilizer is the primitivity
kernel intersected with the degree-2 filter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from . import linalg
from .coproducts import primitive_defect
from .decomposition import HTriple, map_H
from .derivations import theta
from .freealg import NCPoly, all_words, lyndon_basis
from .walg import fraction_str, to_m


def _flatten_triple(t: HTriple) -> Dict[tuple, Fraction]:
    out: Dict[tuple, Fraction] = {}
    for k, ak in t.a.items():
        for (u, v), x in ak.items():
            out[("a", k, u, v)] = x
    for k, bk in t.b.items():
        for (u, v), x in bk.items():
            out[("b", k, u, v)] = x
    for i, zi in t.z.items():
        for c, x in zi.items():
            out[("z", i, c)] = x
    return out


@dataclass(frozen=True)
class GradedSubspace:
    """A subspace of one graded component, stored as echelonized
    coordinate vectors over a fixed ambient basis.  The echelon normal
    form is unique, so equality of subspaces is equality of fields."""

    degree: int
    ambient: str  # "v0-words" or "lyndon"
    ambient_dim: int
    vectors: Tuple[Dict[int, Fraction], ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedSubspace)
            and self.degree == other.degree
            and self.ambient == other.ambient
            and list(self.vectors) == list(other.vectors)
        )

    def contains(self, vec: Dict[int, Fraction]) -> bool:
        return linalg.in_span(vec, list(self.vectors))

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "ambient": self.ambient,
            "ambient_dim": self.ambient_dim,
            "dim": self.dim,
            "basis": [
                {str(j): fraction_str(x) for j, x in sorted(vec.items())}
                for vec in self.vectors
            ],
        }


def _stab_kernel(
    columns: List[Dict[tuple, Fraction]], degree: int
) -> List[Dict[int, Fraction]]:
    """Kernel of v -> H-image mod Im j: adjoin the one admissible
    certificate scalar as an extra variable and project the kernel back
    to the ambient coordinates.  For homogeneous degree-d input the
    slots carry weight d-k, so only the k=d scalar can be nonzero."""
    cert_col = {
        ("a", degree, (), ()): Fraction(-1),
        ("b", degree, (), ()): Fraction(-1),
    }
    n = len(columns)
    kernel = linalg.kernel_basis(columns + [cert_col], n + 1)
    projected = []
    for vec in kernel:
        p = {j: x for j, x in vec.items() if j < n}
        if p:
            projected.append(p)
    return linalg.echelonize(projected)


def stab_w_v0(d: int) -> GradedSubspace:
    """Stabilizer of the W coproduct inside the degree-d word component
    of V0, decided exactly through the Im j certificate."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    words = list(all_words(d))
    columns = [_flatten_triple(map_H(NCPoly.from_word(w))) for w in words]
    vectors = _stab_kernel(columns, d)
    return GradedSubspace(d, "v0-words", len(words), tuple(vectors))


def stab_w_lie(d: int) -> GradedSubspace:
    """Stabilizer of the W coproduct inside the degree-d Lie component,
    as the theta-preimage condition over the Lyndon basis."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    basis = lyndon_basis(d)
    columns = [_flatten_triple(map_H(theta(el.poly))) for el in basis]
    vectors = _stab_kernel(columns, d)
    return GradedSubspace(d, "lyndon", len(basis), tuple(vectors))


def stab_m_lie(d: int) -> GradedSubspace:
    """Stabilizer of the M coproduct inside the degree-d Lie component:
    zero in degree 2, otherwise the primitivity kernel of theta pushed
    to M."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    basis = lyndon_basis(d)
    if d == 2:
        return GradedSubspace(d, "lyndon", len(basis), ())
    columns = [
        dict(primitive_defect(to_m(theta(el.poly))).items()) for el in basis
    ]
    vectors = linalg.kernel_basis(columns, len(basis))
    return GradedSubspace(d, "lyndon", len(basis), tuple(vectors))


def subspace_element(space: GradedSubspace, vec: Dict[int, Fraction]) -> NCPoly:
    """Expand a coordinate vector of a stabilizer subspace back into V."""
    if space.ambient == "v0-words":
        words = list(all_words(space.degree))
        out = NCPoly()
        for j, x in vec.items():
            out = out + NCPoly.from_word(words[j]).scale(x)
        return out
    basis = lyndon_basis(space.degree)
    out = NCPoly()
    for j, x in vec.items():
        out = out + basis[j].poly.scale(x)
    return out


def check_inclusion_aux(d: int) -> bool:
    """Every element of the degree-d W-side V0 stabilizer projects to a
    primitive element of M."""
    space = stab_w_v0(d)
    for vec in space.vectors:
        v = subspace_element(space, vec)
        if not primitive_defect(to_m(v)).is_zero():
            return False
    return True


def verify_main_equality(d: int) -> dict:
    """Compare the two Lie stabilizers in degree d: equality of echelon
    normal forms plus the independent one-directional inclusion of the
    M side into the W side."""
    sw = stab_w_lie(d)
    sm = stab_m_lie(d)
    equal = list(sw.vectors) == list(sm.vectors)
    inclusion = all(sw.contains(vec) for vec in sm.vectors)
    return {
        "degree": d,
        "dim_stab_w": sw.dim,
        "dim_stab_m": sm.dim,
        "equal": equal,
        "inclusion_m_in_w": inclusion,
        "basis_w": sw,
        "basis_m": sm,
    }


def stab_report_json(d: int) -> dict:
    rep = verify_main_equality(d)
    return {
        "degree": d,
        "dim_stab_w": rep["dim_stab_w"],
        "dim_stab_m": rep["dim_stab_m"],
        "equal": rep["equal"],
        "basis_w": [
            {str(j): fraction_str(x) for j, x in sorted(v.items())}
            for v in rep["basis_w"].vectors
        ],
        "basis_m": [
            {str(j): fraction_str(x) for j, x in sorted(v.items())}
            for v in rep["basis_m"].vectors
        ],
        "inclusion_aux": check_inclusion_aux(d),
    }
