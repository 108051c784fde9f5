"""Deterministic builders for the named complexes used by the harness.

Families
--------
simplex(d)            -- the full d-simplex on {1..d+1}
simplex_boundary(d)   -- boundary of the d-simplex, a (d-1)-sphere
cross_polytope(d)     -- d-fold join of 0-spheres (antipodal pairs 2t-1, 2t)
cycle(n)              -- the n-cycle graph, n >= 3
grid_torus(p, q)      -- diagonally triangulated p x q torus grid (flag for
                         p, q >= 4)
csaszar_torus()       -- the 7-vertex torus with a complete 1-skeleton
rp2_6()               -- the 6-vertex real projective plane
random_complex(n, dmax, seed) -- seeded random facet family, reproducible
banner3_sphere(d)     -- a (d-1)-sphere with banner index 3 (not flag),
                         built by subdividing a join of a triangle boundary
                         with a simplex boundary everywhere except on the
                         triangle's edges
banner_step_complex(d, i) -- minimal (d-1)-dimensional complex that is
                         (i+1)-banner but not i-banner: a simplex glued to
                         a simplex skeleton along a common face
"""

from __future__ import annotations

import random
from itertools import combinations

from .complexes import SimplicialComplex, from_facets, join, revlex_key


def simplex(d: int) -> SimplicialComplex:
    if d < 0:
        raise ValueError("d must be >= 0")
    return from_facets([range(1, d + 2)])


def simplex_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-simplex: all d-subsets of {1..d+1}."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return from_facets(combinations(range(1, d + 2), d))


def cross_polytope(d: int) -> SimplicialComplex:
    """d-dimensional cross-polytope boundary; facets pick one vertex from
    each antipodal pair {2t-1, 2t}."""
    if d < 1:
        raise ValueError("d must be >= 1")
    facets = [[]]
    for t in range(d):
        facets = [f + [v] for f in facets for v in (2 * t + 1, 2 * t + 2)]
    return from_facets(facets)


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_facets([[v, v % n + 1] for v in range(1, n + 1)])


def grid_torus(p: int, q: int) -> SimplicialComplex:
    """Doubly periodic grid with each square cut along one diagonal."""
    if p < 3 or q < 3:
        raise ValueError("grid torus needs p, q >= 3")

    def v(i, j):
        return (i % p) * q + (j % q) + 1

    facets = []
    for i in range(p):
        for j in range(q):
            facets.append([v(i, j), v(i + 1, j), v(i, j + 1)])
            facets.append([v(i + 1, j), v(i, j + 1), v(i + 1, j + 1)])
    return from_facets(facets)


_CSASZAR_SHIFTS = ((0, 1, 3), (0, 2, 3))


def csaszar_torus() -> SimplicialComplex:
    """7-vertex torus: every vertex pair is an edge, 14 triangles."""
    facets = [
        [(i + a) % 7 + 1 for a in shift]
        for i in range(7)
        for shift in _CSASZAR_SHIFTS
    ]
    return from_facets(facets)


_RP2_FACETS = (
    (1, 2, 3), (1, 2, 4), (1, 3, 5), (1, 4, 6), (1, 5, 6),
    (2, 3, 6), (2, 4, 5), (2, 5, 6), (3, 4, 5), (3, 4, 6),
)


def rp2_6() -> SimplicialComplex:
    """Minimal 6-vertex triangulation of the real projective plane."""
    return from_facets(_RP2_FACETS)


def random_complex(n: int, dmax: int, seed: int) -> SimplicialComplex:
    """Random facet family on up to n vertices, facet size <= dmax+1;
    bit-exact reproducible from the seed."""
    if n < 1 or dmax < 0:
        raise ValueError("need n >= 1 and dmax >= 0")
    rng = random.Random(seed)
    n_facets = rng.randint(1, max(2, n))
    facets = []
    for _ in range(n_facets):
        size = rng.randint(1, min(dmax + 1, n))
        facets.append(rng.sample(range(1, n + 1), size))
    return from_facets(facets)


def banner3_sphere(d: int) -> SimplicialComplex:
    """(d-1)-sphere with banner index 3 and a single size-3 missing clique.

    Start from the join of a triangle boundary (vertices 1, 2, 3) with the
    boundary of a (d-2)-simplex, then stellarly subdivide every
    positive-dimensional face of the original join except the triangle's
    three edges, working from the top dimension down and rev-lex within a
    dimension.  Fresh vertices are labeled consecutively in subdivision
    order, so the output is deterministic.
    """
    if d < 3:
        raise ValueError("d must be >= 3")
    t = cycle(3)
    s = simplex_boundary(d - 2).relabel(
        {v: v + 3 for v in range(1, d)}
    )
    base = join(t, s)
    t_edges = {frozenset(e) for e in ((1, 2), (1, 3), (2, 3))}
    cur = base
    label = d + 3
    for k in range(base.dim, 0, -1):
        for f in sorted(base.faces(k), key=revlex_key):
            if f in t_edges:
                continue
            cur = cur.stellar_subdivision(f, label)
            label += 1
    return cur


def banner_step_complex(d: int, i: int) -> SimplicialComplex:
    """(d-1)-simplex glued to the (i-1)-skeleton of an i-simplex along a
    common (i-1)-face; (i+1)-banner but not i-banner.  Non-pure for i < d;
    for i = d it collapses to the boundary of the d-simplex."""
    if not 2 <= i <= d:
        raise ValueError(f"need 2 <= i <= d, got i={i}, d={d}")
    facets = [tuple(range(1, d + 1))]
    facets += list(combinations(range(d - i + 1, d + 2), i))
    return from_facets(facets)


FAMILIES = {
    "simplex": (simplex, 1),
    "simplex_boundary": (simplex_boundary, 1),
    "cross_polytope": (cross_polytope, 1),
    "cycle": (cycle, 1),
    "grid_torus": (grid_torus, 2),
    "csaszar_torus": (csaszar_torus, 0),
    "rp2_6": (rp2_6, 0),
    "random_complex": (random_complex, 3),
    "banner3_sphere": (banner3_sphere, 1),
    "banner_step_complex": (banner_step_complex, 2),
}


def generate(family: str, *params: int) -> SimplicialComplex:
    """Dispatch a family name plus integer parameters."""
    try:
        fn, arity = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    if len(params) != arity:
        raise ValueError(f"{family} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)
