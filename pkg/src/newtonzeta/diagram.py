"""Newton-diagram facets of a deformation germ and its zeta functions.

For an index set I containing 0, the restricted Newton diagram is the
union of compact faces of conv(support) + R_+^I.  Only the faces of
dimension |I| - 1 that admit a strictly positive primitive inner normal
contribute a factor (1 - t^m)^(sign * nvol); lower-dimensional faces
carry normalized volume 0, so the product over all strictly positive
covectors collapses to a finite product over these facets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .factored import FactoredZeta, factor, product
from .germ import (
    GermSeries,
    index_sets_with_zero,
    make_germ,
    restrict_support,
    support,
    suspend_germ,
)
from .lattice import (
    LatticePolytope,
    convex_hull,
    minimizing_face,
    mixed_volume,
    normalized_volume,
    normalized_volume_at,
    orthocomplement_line,
    _dot,
    _neg,
    _sub,
)


class IdentityInapplicable(ValueError):
    """A reduction identity does not apply to the given face."""


@dataclass(frozen=True)
class DiagramFacet:
    """A top-dimensional compact face of a restricted Newton diagram.

    ``normal`` is the unique strictly positive primitive inner normal,
    ``m`` its component in the deformation direction, ``nvol`` the
    normalized (|I|-1)-dimensional lattice volume of the face.
    """
    index_set: tuple[int, ...]
    normal: tuple[int, ...]
    m: int
    face: LatticePolytope
    nvol: int


def _normalize_index_set(F: GermSeries, I) -> tuple[int, ...]:
    idx = tuple(sorted(set(int(i) for i in I)))
    if not idx or idx[0] != 0:
        raise ValueError("index set must contain 0")
    if idx[-1] >= F.num_vars:
        raise ValueError("index set out of range")
    return idx


def diagram_facets(F: GermSeries, I) -> list[DiagramFacet]:
    """The (|I|-1)-dimensional compact faces with strictly positive normal.

    Returns one facet record per face, sorted by normal; empty when the
    restricted support is empty or too low-dimensional.
    """
    idx = _normalize_index_set(F, I)
    d = len(idx)
    S = sorted(restrict_support(support(F), idx))
    if not S:
        return []
    _, dim, hull_facets = convex_hull(S)
    out = []
    if dim == d:
        for hf in hull_facets:
            a = hf.inner_normal
            if all(x > 0 for x in a):
                face_pts = [p for p in S if _dot(a, p) == hf.offset]
                face = LatticePolytope.from_points(face_pts)
                out.append(DiagramFacet(idx, a, a[0], face,
                                        normalized_volume(face)))
    elif dim == d - 1:
        # the whole hull is the only candidate; it is a diagram facet iff
        # one of the two primitive normals of its affine span is positive
        base = S[0]
        w = orthocomplement_line([_sub(p, base) for p in S[1:]], d)
        for a in (w, _neg(w)):
            if all(x > 0 for x in a):
                face = LatticePolytope.from_points(S)
                out.append(DiagramFacet(idx, a, a[0], face,
                                        normalized_volume(face)))
                break
    out.sort(key=lambda f: f.normal)
    return out


def _face_sign(l: int) -> int:
    # (-1)^(l-1); l = 0 gives -1, matching the conventions for the
    # pure-deformation axis where a nonempty restricted diagram
    # contributes (1-t)^-1
    return -1 if (l - 1) % 2 else 1


def zeta_I(F: GermSeries, I) -> FactoredZeta:
    """Factored zeta contribution of one index set."""
    idx = _normalize_index_set(F, I)
    sign = _face_sign(len(idx) - 1)
    return product(factor(f.m, sign * f.nvol) for f in diagram_facets(F, idx))


def zeta_torus(F: GermSeries) -> FactoredZeta:
    """Monodromy zeta function of the deformed hypersurface in the torus.

    Valid for germs that are nondegenerate for their Newton diagram; the
    formula is evaluated unconditionally (see nondegeneracy_check).
    """
    return zeta_I(F, range(F.num_vars))


def zeta_full(F: GermSeries) -> FactoredZeta:
    """Monodromy zeta function of the deformed hypersurface in affine space.

    (1 - t) times the product of the torus contributions over all index
    sets containing the deformation direction.
    """
    n = F.num_vars - 1
    return factor(1, 1) * product(zeta_I(F, I) for I in index_sets_with_zero(n))


def zeta_classical(f: GermSeries) -> FactoredZeta:
    """Ordinary monodromy zeta function of a germ f(z), via F = f - sigma."""
    return zeta_full(suspend_germ(f))


def face_polynomial(F: GermSeries, alpha) -> GermSeries:
    """Sub-germ supported on the face where the positive covector is minimal."""
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != F.num_vars:
        raise ValueError("covector dimension mismatch")
    if any(a <= 0 for a in alpha):
        raise ValueError("covector must be strictly positive in all components")
    best = min(_dot(alpha, e) for e in F.terms)
    return make_germ(F.num_vars,
                     [(e, c) for e, c in F.terms.items() if _dot(alpha, e) == best])


def euler_char_torus_hypersurface(P: LatticePolytope) -> int:
    """Euler characteristic of a generic torus hypersurface with Newton
    polytope P (full-dimensional in Z^n): (-1)^(n-1) n! V_n(P)."""
    n = P.ambient_dim
    if n < 1:
        raise ValueError("ambient dimension must be positive")
    if P.is_empty or P.affine_dim != n:
        raise ValueError("polytope is not full-dimensional in its ambient space")
    sign = 1 if (n - 1) % 2 == 0 else -1
    return sign * normalized_volume(P)


# ---------------------------------------------------------------------------
# reduction identities used as internal oracles

def cone_reduction_identity(f: GermSeries, I, facet: DiagramFacet) -> bool:
    """Check a facet of F = f - sigma against its base face in f's diagram.

    Such a facet is a cone of height one over a face of f's diagram: its
    normalized volume must equal the normalized volume of the base face,
    and its deformation exponent m must equal the minimum of the normal
    over f's restricted support.
    """
    idx = _normalize_index_set(f, I)
    l = len(idx) - 1
    if l < 1:
        raise IdentityInapplicable("the identity concerns faces of dimension at least 1")
    apex = (1,) + (0,) * l
    if apex not in facet.face.vertices:
        raise IdentityInapplicable("facet is not a cone with the deformation apex")
    alpha_z = facet.normal[1:]
    S = sorted(restrict_support(support(f), idx[1:]))
    if not S:
        raise IdentityInapplicable("the function germ has empty restricted support")
    m_expected = min(_dot(alpha_z, p) for p in S)
    base_face = minimizing_face(S, alpha_z)
    return (facet.nvol == normalized_volume_at(base_face, l - 1)
            and facet.m == m_expected)


def cayley_mixed_volume_identity(f0: GermSeries, f1: GermSeries, I,
                                 facet: DiagramFacet) -> bool:
    """Check a facet of F = f0 - sigma*f1 against the mixed-volume sum.

    The facet is the hull of the two corresponding faces of f0 and f1
    placed at heights 0 and 1; for l = |I|-1 > 1 its volume satisfies
    l * V_l = sum over j of the (l-1)-dimensional mixed volumes of the two
    base faces, and m is the difference of the two support minima.
    """
    idx = _normalize_index_set(f0, I)
    l = len(idx) - 1
    if l <= 1:
        raise IdentityInapplicable("the identity is stated for faces of dimension above 1")
    alpha_z = facet.normal[1:]
    J = idx[1:]
    S0 = sorted(restrict_support(support(f0), J))
    S1 = sorted(restrict_support(support(f1), J))
    if not S0 or not S1:
        raise IdentityInapplicable("a base support is empty; the facet is not of hull type")
    face0 = minimizing_face(S0, alpha_z)
    face1 = minimizing_face(S1, alpha_z)
    expected = LatticePolytope.from_points(
        [(0,) + v for v in face0.vertices] + [(1,) + v for v in face1.vertices])
    if expected.vertices != facet.face.vertices:
        raise IdentityInapplicable("facet is not the hull of the two base faces")
    m_expected = (min(_dot(alpha_z, p) for p in S0)
                  - min(_dot(alpha_z, p) for p in S1))
    lhs = Fraction(facet.nvol, factorial(l - 1))  # = l * V_l(facet)
    rhs = sum(mixed_volume([face0] * (l - 1 - j) + [face1] * j)
              for j in range(l))
    return lhs == rhs and facet.m == m_expected
