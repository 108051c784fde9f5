"""Cohen-Macaulay, Buchsbaum, and connectivity verification.

CM-ness is tested by the link criterion: every face's link (including the
empty face's) must have vanishing reduced homology below its expected top
degree.  The q-versions sweep every vertex subset of size at most q-1
exhaustively, in size-then-rev-lex order, and stop at the first failure so
the reported witness is the least one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import Face, SimplicialComplex, is_connected, size_revlex_key
from .homology import FieldSpec, reduced_betti


@dataclass(frozen=True)
class CMReport:
    holds: bool
    failing_face: Face | None
    failing_degree: int | None
    field: FieldSpec


@dataclass(frozen=True)
class QReport:
    """Outcome of a q-sweep; ``reason`` separates dimension drops from
    failures of the swept predicate."""

    q: int
    holds: bool
    mode: str  # "cm" | "buchsbaum" | "connectivity"
    failing_W: frozenset[int] | None = None
    reason: str | None = None  # "dimension" | "predicate"
    field: FieldSpec | None = None


def _reisner_scan(cx: SimplicialComplex, field: FieldSpec, require_top_one: bool):
    """Shared scan behind is_cm and the homology-sphere test.

    Returns (CMReport, top_ok): homology must vanish below degree
    d - |F| - 1 for every face F; with ``require_top_one`` the top degree
    must additionally carry exactly one dimension of homology.
    """
    if cx.is_void:
        return CMReport(True, None, None, field), False
    d = cx.dim + 1
    for s in range(0, d + 1):
        for f in cx.faces(s - 1):
            bv = reduced_betti(cx.link(f), field)
            top = d - s - 1
            for r in range(-1, top):
                if bv[r] != 0:
                    return CMReport(False, f, r, field), False
            if require_top_one and bv[top] != 1:
                return CMReport(True, None, None, field), False
    return CMReport(True, None, None, field), True


def is_cm(cx: SimplicialComplex, field=2) -> CMReport:
    """Reisner-style criterion over the given field."""
    fs = FieldSpec.coerce(field)
    report, _ = _reisner_scan(cx, fs, require_top_one=False)
    return report


def is_homology_sphere(cx: SimplicialComplex, field=2) -> bool:
    """CM with one-dimensional top homology in every face link."""
    fs = FieldSpec.coerce(field)
    if cx.is_void:
        return False
    report, top_ok = _reisner_scan(cx, fs, require_top_one=True)
    return report.holds and top_ok


def is_buchsbaum(cx: SimplicialComplex, field=2) -> bool:
    """Pure with every vertex link CM."""
    fs = FieldSpec.coerce(field)
    if not cx.is_pure:
        return False
    return all(is_cm(cx.link(Face({v})), fs).holds for v in cx.vertices)


def is_homology_manifold(cx: SimplicialComplex, field=2) -> bool:
    """Pure with every vertex link a homology sphere."""
    fs = FieldSpec.coerce(field)
    if not cx.is_pure:
        return False
    return all(is_homology_sphere(cx.link(Face({v})), fs) for v in cx.vertices)


def subsets_upto(vertices, max_size: int):
    """Vertex subsets of size 0..max_size in size-then-rev-lex order."""
    vs = sorted(vertices)
    for s in range(0, max_size + 1):
        for w in sorted(
            (frozenset(c) for c in combinations(vs, s)), key=size_revlex_key
        ):
            yield w


def _q_sweep(cx: SimplicialComplex, q: int, mode: str, predicate, field) -> QReport:
    d0 = cx.dim
    for w in subsets_upto(cx.vertices, min(q - 1, cx.n_vertices)):
        sub = cx.deletion(w)
        if mode != "connectivity" and sub.dim != d0:
            return QReport(q, False, mode, w, "dimension", field)
        if not predicate(sub):
            return QReport(q, False, mode, w, "predicate", field)
    return QReport(q, True, mode, field=field)


def is_q_cm(cx: SimplicialComplex, q: int, field=2) -> QReport:
    """Exhaustive deletion sweep for q-CM-ness.

    A 0-dimensional complex is q-CM exactly when it has at least q vertices;
    that base case short-circuits the sweep (and agrees with it).
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    fs = FieldSpec.coerce(field)
    if cx.dim == 0:
        if cx.n_vertices >= q:
            return QReport(q, True, "cm", field=fs)
        return QReport(q, False, "cm", frozenset(cx.vertices), "dimension", fs)
    return _q_sweep(cx, q, "cm", lambda sub: is_cm(sub, fs).holds, fs)


def is_q_buchsbaum(cx: SimplicialComplex, q: int, field=2) -> QReport:
    if q < 1:
        raise ValueError("q must be >= 1")
    fs = FieldSpec.coerce(field)
    return _q_sweep(cx, q, "buchsbaum", lambda sub: is_buchsbaum(sub, fs), fs)


def deletion_connected(cx: SimplicialComplex, q: int) -> QReport:
    """Graph connectivity of every deletion by at most q-1 vertices."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return _q_sweep(cx, q, "connectivity", is_connected, None)


def alexander_duality_holds(cx: SimplicialComplex, w, field=2) -> bool:
    """For a homology sphere, deleting W and restricting to W give Betti
    numbers mirrored around the middle degree (over a field, cohomology and
    homology dimensions agree, so only Betti numbers are compared)."""
    fs = FieldSpec.coerce(field)
    ws = frozenset(w)
    d = cx.dim + 1
    left = reduced_betti(cx.deletion(ws), fs)
    right = reduced_betti(cx.restriction(ws & set(cx.vertices)), fs)
    return all(left[r] == right[d - r - 2] for r in range(-1, d + 1))
