"""Shared generators and small independent oracles for the test suite."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

from newtonzeta.factored import FactoredZeta, factor, one
from newtonzeta.germ import GermSeries, make_germ
from newtonzeta.lattice import int_det, mat_rank
from newtonzeta.randomized import (  # noqa: F401 (re-exported for tests)
    random_convenient_germ,
    random_nonzero_fraction,
    random_z_germ,
)


def random_lattice_simplex(rng, d, l, coord_bound=6):
    """l-dimensional simplex in Z^d: l+1 affinely independent points."""
    while True:
        pts = [tuple(rng.randint(-coord_bound, coord_bound) for _ in range(d))
               for _ in range(l + 1)]
        diffs = [tuple(x - y for x, y in zip(p, pts[0])) for p in pts[1:]]
        if mat_rank(diffs) == l:
            return pts


def random_unimodular(rng, d, steps=8):
    """Random unimodular integer matrix built from elementary operations."""
    M = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    for _ in range(steps):
        i, j = rng.sample(range(d), 2) if d > 1 else (0, 0)
        op = rng.randrange(3)
        if op == 0 and d > 1:
            q = rng.randint(-2, 2)
            M[i] = [x + q * y for x, y in zip(M[i], M[j])]
        elif op == 1 and d > 1:
            M[i], M[j] = M[j], M[i]
        else:
            M[i] = [-x for x in M[i]]
    assert abs(int_det(M)) == 1
    return M


def apply_matrix(M, p):
    return tuple(sum(M[i][j] * p[j] for j in range(len(p))) for i in range(len(M)))


def simplex_nvol_oracle(pts):
    """Normalized volume of a lattice simplex via the gcd of maximal minors.

    Independent of the Smith-normal-form / triangulation path: the l-th
    determinantal divisor of the edge matrix equals the index of the edge
    lattice in its saturation, which is the normalized simplex volume.
    """
    edges = [tuple(x - y for x, y in zip(p, pts[0])) for p in pts[1:]]
    l = len(edges)
    d = len(pts[0])
    g = 0
    for cols in itertools.combinations(range(d), l):
        minor = [[e[c] for c in cols] for e in edges]
        g = gcd(g, abs(int_det(minor)))
    return g


def random_deformation_germ(rng, n, max_exp=5, terms_count=4) -> GermSeries:
    """Random germ involving both sigma and the z-variables."""
    terms = {}
    while len(terms) < terms_count:
        e = [rng.randint(0, 2)] + [rng.randint(0, max_exp) for _ in range(n)]
        if any(e):
            terms[tuple(e)] = random_nonzero_fraction(rng)
    return make_germ(n + 1, terms.items())


def permutation_zeta(cycle_lengths) -> FactoredZeta:
    """Zeta function of a permutation of a finite set, from its cycle type.

    For a finite fibre the monodromy acts on 0-th homology by the
    permutation matrix, and det(Id - t P) is the product of (1 - t^c) over
    the cycle lengths c.
    """
    z = one()
    for c in cycle_lengths:
        z = z * factor(c, 1)
    return z


def _euler_phi(d):
    out, n, p = d, d, 2
    while p * p <= n:
        if n % p == 0:
            out -= out // p
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out -= out // n
    return out


def _mobius(n):
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    if n > 1:
        out = -out
    return out


def _primitive_root_product(d) -> FactoredZeta:
    # prod over primitive d-th roots w of (1 - t*w), written in the
    # (1-t^m) basis via Moebius inversion of 1-t^d = prod_{e|d} Phi-parts
    z = one()
    for e in range(1, d + 1):
        if d % e == 0:
            mu = _mobius(d // e)
            if mu:
                z = z * factor(e, mu)
    return z


def brieskorn_zeta(exponents) -> FactoredZeta:
    """Zeta function of z1^a1 + ... + zn^an from its monodromy eigenvalues.

    The middle homology of the Milnor fibre has eigenvalue multiset
    {exp(2 pi i sum(k_j/a_j)) : 1 <= k_j <= a_j - 1}; zero-th homology
    contributes 1 - t.  Entirely independent of the Newton-diagram code.
    """
    from collections import Counter

    n = len(exponents)
    counts = Counter()
    for ks in itertools.product(*[range(1, a) for a in exponents]):
        r = sum(Fraction(k, a) for k, a in zip(ks, exponents)) % 1
        counts[r.denominator] += 1
    sign = 1 if (n - 1) % 2 == 0 else -1
    z = factor(1, 1)
    for d, c in counts.items():
        assert c % _euler_phi(d) == 0
        z = z * _primitive_root_product(d) ** (sign * (c // _euler_phi(d)))
    return z


def nvol_boundary_recursion(points) -> int:
    """Normalized volume via lattice distances to boundary facets.

    l! Vol(P) = sum over facets F of |a_F . q - c_F| * nvol(F) for any
    fixed vertex q, with primitive inner normals a_F; facets recurse in
    the saturation lattices of their direction spaces.  Independent of the
    fan-triangulation decomposition used by the library.
    """
    from newtonzeta.lattice import convex_hull, coords_in_basis, saturation_basis

    def to_full_dim(pts):
        base = pts[0]
        diffs = [tuple(x - y for x, y in zip(p, base)) for p in pts[1:]]
        B = saturation_basis(diffs)
        return [coords_in_basis(B, tuple(x - y for x, y in zip(p, base)))
                for p in pts]

    def rec(pts, l):
        if l == 0:
            return 1
        verts, dim, facets = convex_hull(pts)
        assert dim == l
        if l == 1:
            return max(p[0] for p in verts) - min(p[0] for p in verts)
        q = verts[0]
        total = 0
        for f in facets:
            dist = sum(a * x for a, x in zip(f.inner_normal, q)) - f.offset
            if dist == 0:
                continue
            fpts = [p for p in verts
                    if sum(a * x for a, x in zip(f.inner_normal, p)) == f.offset]
            total += dist * rec(to_full_dim(fpts), l - 1)
        return total

    pts = sorted(set(tuple(p) for p in points))
    _, dim, _ = convex_hull(pts)
    if dim == 0:
        return 1
    return rec(to_full_dim(pts), dim)
