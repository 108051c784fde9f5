"""Cliques, critical cliques, banner testing, and the b-invariants.

A clique is a vertex set pairwise joined by edges; it is *critical* when
dropping some vertex leaves a face.  A complex is i-banner when every
critical clique of size at least i+1 is itself a face; flag complexes are
exactly the 1-banner (equivalently 2-banner) ones, and every complex of
dimension d-1 is (d+1)-banner.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import Face, SimplicialComplex, missing_faces, size_revlex_key


@dataclass(frozen=True)
class BannerReport:
    """Outcome of checking the banner condition at one index."""

    queried_i: int
    holds: bool
    violations: tuple[Face, ...]


@dataclass(frozen=True)
class BInvariants:
    values: tuple[int, ...]
    witnesses: dict[int, Face | None] = field(compare=False, default_factory=dict)


def cliques(cx: SimplicialComplex, sizes) -> tuple[Face, ...]:
    """All cliques of the 1-skeleton with size in ``sizes``.

    ``sizes`` is an exact size or an inclusive ``(lo, hi)`` pair (``hi`` may
    be None for unbounded).  Output is size-then-rev-lex sorted.
    """
    if isinstance(sizes, int):
        lo, hi = sizes, sizes
    else:
        lo, hi = sizes
    if hi is None:
        hi = cx.n_vertices
    adj = cx.adjacency()
    out: list[Face] = []
    if lo <= 0:
        out.append(Face())

    def grow(base: tuple[int, ...], cand: frozenset[int]):
        for v in sorted(cand):
            cur = base + (v,)
            if lo <= len(cur) <= hi:
                out.append(Face(cur))
            if len(cur) < hi:
                grow(cur, cand & adj[v] & frozenset(x for x in adj[v] if x > v))

    if hi >= 1:
        grow((), frozenset(cx.vertices))
    return tuple(sorted(out, key=size_revlex_key))


def _violation_scan(cx: SimplicialComplex, i: int, collect_all: bool):
    """Critical cliques of size >= i+1 that are not faces.

    Every such clique is a face F of size >= i extended by one vertex
    adjacent to all of F, so only face-plus-vertex extensions are scanned.
    """
    adj = cx.adjacency()
    bad: set[Face] = set()
    for s in range(max(i, 1), cx.dim + 2):
        for f in cx.faces(s - 1):
            common: frozenset[int] | None = None
            for v in f:
                common = adj[v] if common is None else common & adj[v]
                if not common:
                    break
            if not common:
                continue
            for v in sorted(common - f):
                t = f | {v}
                if t not in bad and not cx.has_face(t):
                    if not collect_all:
                        return (t,)
                    bad.add(t)
    return tuple(sorted(bad, key=size_revlex_key))


def banner_violations(cx: SimplicialComplex, i: int) -> BannerReport:
    if i < 1:
        raise ValueError("banner index must be >= 1")
    viol = _violation_scan(cx, i, collect_all=True)
    return BannerReport(i, not viol, viol)


def is_i_banner(cx: SimplicialComplex, i: int) -> bool:
    if i < 1:
        raise ValueError("banner index must be >= 1")
    return not _violation_scan(cx, i, collect_all=False)


def is_flag(cx: SimplicialComplex) -> bool:
    """All missing faces have size 2 (independent of the banner scan)."""
    return all(len(m) <= 2 for m in missing_faces(cx))


def banner_index(cx: SimplicialComplex) -> int:
    """Least i >= 1 for which the complex is i-banner (at most dim+2)."""
    top = max(cx.dim + 2, 1)
    for i in range(1, top + 1):
        if is_i_banner(cx, i):
            return i
    raise AssertionError("unreachable: every complex is (dim+2)-banner")


def _banner_or_low(cx: SimplicialComplex, j: int) -> bool:
    # j-banner for j <= 1 coincides with 1-banner: critical cliques of size
    # at most 2 are automatically faces.
    return is_i_banner(cx, max(j, 1))


def b_invariants(cx: SimplicialComplex) -> BInvariants:
    """For each 0 <= i <= d-1, the least s such that every size-s face has a
    link that is (d-s-i)-banner or of dimension exactly i.

    Evaluated literally over all faces of each size, so non-pure complexes
    (where link dimension varies per face) are handled as stated.  For each
    positive b_i a witness face of size b_i - 1 whose link fails both
    clauses is recorded.
    """
    if cx.dim < 0:
        raise ValueError("b-invariants need dimension >= 0")
    d = cx.dim + 1
    links: dict[Face, SimplicialComplex] = {}

    def lk(f: Face) -> SimplicialComplex:
        got = links.get(f)
        if got is None:
            got = links[f] = cx.link(f)
        return got

    values: list[int] = []
    witnesses: dict[int, Face | None] = {}
    for i in range(d):
        wit: Face | None = None
        for s in range(0, d + 2):
            failing = None
            for f in cx.faces(s - 1):
                lf = lk(f)
                if lf.dim == i:
                    continue
                if _banner_or_low(lf, d - s - i):
                    continue
                failing = f
                break
            if failing is None:
                values.append(s)
                witnesses[i] = wit if s > 0 else None
                break
            wit = failing
        else:
            raise AssertionError("unreachable: condition is vacuous above top size")
    return BInvariants(tuple(values), witnesses)
