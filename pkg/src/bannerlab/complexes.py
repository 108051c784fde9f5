"""Immutable abstract simplicial complexes on positive-integer vertices.

A complex is stored by its facets (the inclusion-maximal faces); all other
faces are implied by downward closure and enumerated lazily per dimension.
Faces are exposed as frozensets; subset tests run on integer bitmasks, which
work for any vertex count since Python ints are unbounded.

Two degenerate complexes are distinguished: the *empty* complex, whose only
face is the empty set, and the *void* complex, which has no faces at all
(``from_facets([])`` gives the empty complex; the void complex only arises
through explicit construction, e.g. a compressed complex with zero facets).
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Iterable

Face = frozenset


def revlex_key(face: Iterable[int]) -> tuple[int, ...]:
    """Sort key realizing the reverse-lexicographic order on vertex sets.

    For equal-size sets, comparing these keys is equivalent to asking whether
    the maximum of the symmetric difference lies in the other set.
    """
    return tuple(sorted(face, reverse=True))


def size_revlex_key(face: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Sort key ordering faces by size first, then rev-lex."""
    t = tuple(sorted(face, reverse=True))
    return (len(t), t)


def face_mask(face: Iterable[int]) -> int:
    return sum(1 << v for v in face)


def _check_vertices(vs) -> None:
    for v in vs:
        if not isinstance(v, int) or v < 1:
            raise ValueError(f"vertex labels must be positive integers, got {v!r}")


class SimplicialComplex:
    """A finite simplicial complex given by its facet family.

    Instances are immutable; the per-dimension face index and the adjacency
    structure are built lazily with single-assignment semantics, so shared
    reads are safe and every operation is a pure function of its inputs.
    """

    def __init__(self, facets: tuple[Face, ...], _internal: bool = False):
        if not _internal:
            raise TypeError("use from_facets() or the named constructors")
        self._facets = facets
        self._facet_masks = [face_mask(f) for f in facets]
        vs: set[int] = set()
        for f in facets:
            vs |= f
        self._vertices = tuple(sorted(vs))
        self._faces_by_dim: dict[int, tuple[Face, ...]] = {}
        self._adjacency: dict[int, frozenset[int]] | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def void() -> "SimplicialComplex":
        """The complex with no faces at all (not even the empty face)."""
        return SimplicialComplex((), _internal=True)

    @staticmethod
    def empty() -> "SimplicialComplex":
        """The complex whose single face is the empty set."""
        return SimplicialComplex((Face(),), _internal=True)

    # -- basic queries -----------------------------------------------------

    @property
    def facets(self) -> tuple[Face, ...]:
        return self._facets

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def is_void(self) -> bool:
        return not self._facets

    @property
    def is_empty(self) -> bool:
        return self._facets == (Face(),)

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex, -2 for the void complex."""
        if self.is_void:
            return -2
        return max(len(f) for f in self._facets) - 1

    @property
    def is_pure(self) -> bool:
        sizes = {len(f) for f in self._facets}
        return len(sizes) <= 1

    def has_face(self, face: Iterable[int]) -> bool:
        m = face_mask(face)
        return any(m & fm == m for fm in self._facet_masks)

    __contains__ = has_face

    def faces(self, k: int) -> tuple[Face, ...]:
        """All k-dimensional faces (size k+1), in rev-lex order."""
        if self.is_void or k < -1 or k > self.dim:
            return ()
        cached = self._faces_by_dim.get(k)
        if cached is None:
            out = {
                Face(c)
                for f in self._facets
                if len(f) >= k + 1
                for c in combinations(sorted(f), k + 1)
            }
            cached = tuple(sorted(out, key=revlex_key))
            self._faces_by_dim[k] = cached
        return cached

    def all_faces(self):
        """All faces including the empty one, size-then-rev-lex order."""
        for k in range(-1, self.dim + 1):
            yield from self.faces(k)

    def n_faces(self, k: int) -> int:
        return len(self.faces(k))

    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_dim); (0,) for the void complex."""
        if self.is_void:
            return (0,)
        return tuple(self.n_faces(k) for k in range(-1, self.dim + 1))

    def h_vector(self, d: int | None = None) -> tuple[int, ...]:
        """Coefficients (h_0, ..., h_d) of sum_j f_{j-1} (x-1)^(d-j).

        ``d`` defaults to dim+1 and must be at least that.
        """
        if self.is_void:
            raise ValueError("void complex has no h-vector")
        if d is None:
            d = self.dim + 1
        if d < self.dim + 1:
            raise ValueError(f"ambient parameter d={d} below dim+1={self.dim + 1}")
        fv = self.f_vector()

        def f(i):  # f_{i-1}
            return fv[i] if 0 <= i < len(fv) else 0

        return tuple(
            sum((-1) ** (j - i) * comb(d - i, j - i) * f(i) for i in range(j + 1))
            for j in range(d + 1)
        )

    def adjacency(self) -> dict[int, frozenset[int]]:
        """Neighbor sets of the 1-skeleton graph."""
        if self._adjacency is None:
            adj: dict[int, set[int]] = {v: set() for v in self._vertices}
            for e in self.faces(1):
                u, v = sorted(e)
                adj[u].add(v)
                adj[v].add(u)
            self._adjacency = {v: frozenset(ns) for v, ns in adj.items()}
        return self._adjacency

    # -- constructions -----------------------------------------------------

    def skeleton(self, j: int) -> "SimplicialComplex":
        """All faces of dimension at most j."""
        if j < -1:
            raise ValueError("skeleton dimension must be >= -1")
        if self.is_void or j >= self.dim:
            return self
        if j == -1:
            return SimplicialComplex.empty()
        small = [f for f in self._facets if len(f) <= j + 1]
        return from_facets(list(self.faces(j)) + small)

    def link(self, face: Iterable[int]) -> "SimplicialComplex":
        """Faces disjoint from ``face`` whose union with it is a face."""
        f = Face(face)
        if not self.has_face(f):
            raise ValueError(f"{sorted(f)} is not a face")
        return from_facets(g - f for g in self._facets if f <= g)

    def restriction(self, w: Iterable[int]) -> "SimplicialComplex":
        """Faces contained in the vertex set ``w`` (which must be a subset of V)."""
        ws = frozenset(w)
        if not ws <= set(self._vertices):
            raise ValueError("restriction set must be a subset of the vertex set")
        if self.is_void:
            return self
        return from_facets(f & ws for f in self._facets)

    def deletion(self, w: Iterable[int]) -> "SimplicialComplex":
        """Faces avoiding ``w``; ``w`` need not be a subset of the vertices."""
        ws = frozenset(w)
        if self.is_void:
            return self
        return from_facets(f - ws for f in self._facets)

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        missing = set(self._vertices) - set(mapping)
        if missing:
            raise ValueError(f"mapping misses vertices {sorted(missing)}")
        imgs = [mapping[v] for v in self._vertices]
        _check_vertices(imgs)
        if len(set(imgs)) != len(imgs):
            raise ValueError("relabeling must be injective")
        return from_facets(Face(mapping[v] for v in f) for f in self._facets)

    def stellar_subdivision(self, sigma: Iterable[int], new_vertex: int | None = None) -> "SimplicialComplex":
        """Subdivide at the positive-dimensional face ``sigma``.

        Removes every face containing sigma and adds tau + {new_vertex} for
        each tau not containing sigma with tau + sigma a face.  The new
        vertex defaults to max label + 1.
        """
        s = Face(sigma)
        if len(s) < 2:
            raise ValueError("subdivision face must be positive-dimensional")
        if not self.has_face(s):
            raise ValueError(f"{sorted(s)} is not a face")
        if new_vertex is None:
            new_vertex = max(self._vertices) + 1
        else:
            _check_vertices([new_vertex])
            if new_vertex in self._vertices:
                raise ValueError(f"new vertex {new_vertex} already in use")
        keep = [f for f in self._facets if not s <= f]
        star = [f for f in self._facets if s <= f]
        added = [(f - {x}) | {new_vertex} for f in star for x in sorted(s)]
        return from_facets(keep + added)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self._facets) == set(other._facets)

    def __hash__(self) -> int:
        return hash(frozenset(self._facets))

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(void)"
        return f"SimplicialComplex(dim={self.dim}, f={self.f_vector()})"


def from_facets(family: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex from a facet family; non-maximal members are dropped.

    An empty family yields the empty complex.  Duplicate vertices inside one
    facet (detectable on sequence input) are rejected.
    """
    fs: list[Face] = []
    for f in family:
        lst = list(f)
        _check_vertices(lst)
        if not isinstance(f, (set, frozenset)) and len(set(lst)) != len(lst):
            raise ValueError(f"duplicate vertex in facet {lst}")
        fs.append(Face(lst))
    if not fs:
        return SimplicialComplex.empty()
    # inclusion reduction on bitmasks, largest first
    uniq = sorted(set(fs), key=lambda f: (-len(f), revlex_key(f)))
    kept: list[Face] = []
    kept_masks: list[int] = []
    for f in uniq:
        m = face_mask(f)
        if any(m & km == m for km in kept_masks):
            continue
        kept.append(f)
        kept_masks.append(m)
    kept.sort(key=revlex_key)
    return SimplicialComplex(tuple(kept), _internal=True)


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Join of two complexes; the right operand is shifted by the left's
    maximum label if the vertex sets collide."""
    if a.is_void or b.is_void:
        return SimplicialComplex.void()
    if set(a.vertices) & set(b.vertices):
        off = max(a.vertices, default=0)
        b = b.relabel({v: v + off for v in b.vertices})
    return from_facets(f | g for f in a.facets for g in b.facets)


def suspension(cx: SimplicialComplex) -> SimplicialComplex:
    """Join with a 0-sphere on two fresh vertices (max+1, max+2)."""
    base = max(cx.vertices, default=0)
    poles = from_facets([[base + 1], [base + 2]])
    return join(cx, poles)


def missing_faces(cx: SimplicialComplex) -> tuple[Face, ...]:
    """Minimal non-faces, in size-then-rev-lex order.

    Candidates are built as face-plus-vertex extensions, which covers every
    set all of whose proper subsets are faces; singletons are always faces.
    """
    out: list[Face] = []
    for s in range(2, cx.dim + 3):
        cands: set[Face] = set()
        for f in cx.faces(s - 2):
            for v in cx.vertices:
                if v not in f:
                    cands.add(f | {v})
        for cand in cands:
            if cx.has_face(cand):
                continue
            if all(cx.has_face(cand - {v}) for v in cand):
                out.append(cand)
    return tuple(sorted(out, key=size_revlex_key))


def is_connected(cx: SimplicialComplex) -> bool:
    """Graph connectivity of the 1-skeleton (at most one component)."""
    vs = cx.vertices
    if len(vs) <= 1:
        return True
    parent = {v: v for v in vs}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in cx.faces(1):
        u, v = e
        parent[find(u)] = find(v)
    return len({find(v) for v in vs}) == 1
