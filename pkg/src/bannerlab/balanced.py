"""Rev-lex compression machinery and balanced-complex synthesis.

A set is d-permissible when its elements have pairwise distinct residues
mod d.  Initial segments of the rev-lex order on d-permissible (k+1)-sets
generate compressed complexes; a complex built from such segments is
d-colorable by residues.  ``balanced_companion`` uses those segments to
build, for an i-banner complex, a balanced complex on the same number of
vertices with the same face numbers from dimension i-1 up.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, count, islice

from .banner import is_i_banner
from .complexes import Face, SimplicialComplex, from_facets


class SynthesisInvariantError(RuntimeError):
    """A compression candidate failed a property the construction
    guarantees; this firing indicates a bug, never an input problem."""


@dataclass(frozen=True)
class PermissibleFamily:
    """First ``m`` d-permissible (k+1)-subsets in rev-lex order."""

    d: int
    k: int
    members: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.members)

    def member_sets(self) -> tuple[Face, ...]:
        return tuple(Face(m) for m in self.members)


@dataclass(frozen=True)
class ColoredComplex:
    complex: SimplicialComplex
    colors: dict[int, int]

    def color_classes(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {}
        for v, c in sorted(self.colors.items()):
            out.setdefault(c, []).append(v)
        return {c: tuple(vs) for c, vs in out.items()}


def validate_coloring(cc: ColoredComplex) -> bool:
    """True when every face meets each color class at most once."""
    cx, colors = cc.complex, cc.colors
    if set(colors) != set(cx.vertices):
        return False
    for f in cx.facets:
        seen = [colors[v] for v in f]
        if len(set(seen)) != len(seen):
            return False
    return True


def revlex_precedes(a, b) -> bool:
    """Strict rev-lex order on equal-size sets: the maximum element of the
    symmetric difference lies in ``b``."""
    sa, sb = frozenset(a), frozenset(b)
    if len(sa) != len(sb):
        raise ValueError("rev-lex compares equal-size sets")
    if sa == sb:
        return False
    return max(sa ^ sb) in sb


def _bounded_revlex(size: int, maxval: int):
    # size-subsets of {1..maxval} as ascending tuples, rev-lex order
    if size == 0:
        yield ()
        return
    for m in range(size, maxval + 1):
        for rest in _bounded_revlex(size - 1, m - 1):
            yield rest + (m,)


def revlex_subsets(size: int):
    """All size-subsets of the positive integers in rev-lex order (lazy)."""
    if size == 0:
        yield ()
        return
    for m in count(size):
        for rest in _bounded_revlex(size - 1, m - 1):
            yield rest + (m,)


def is_permissible(s, d: int) -> bool:
    t = tuple(s)
    return len({x % d for x in t}) == len(t)


def residue_colors(vertices, d: int) -> dict[int, int]:
    """Color class = residue mod d, as colors 1..d."""
    return {v: ((v - 1) % d) + 1 for v in vertices}


def permissible_family(d: int, k: int, m: int) -> PermissibleFamily:
    """The family of the first ``m`` d-permissible (k+1)-sets.

    Needs k+1 <= d whenever m > 0 (larger sets repeat a residue), except
    k = -1 where only the empty set exists (so m <= 1).
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if m < 0:
        raise ValueError("m must be >= 0")
    if k < -1:
        raise ValueError("k must be >= -1")
    if m > 0 and k + 1 > d:
        raise ValueError(f"no {d}-permissible sets of size {k + 1} exist")
    gen = (s for s in revlex_subsets(k + 1) if is_permissible(s, d))
    members = tuple(islice(gen, m))
    if len(members) < m:
        raise ValueError(f"only {len(members)} {d}-permissible sets of size {k + 1} exist")
    return PermissibleFamily(d, k, members)


def compressed_complex(d: int, k: int, m: int) -> ColoredComplex:
    """Pure k-dimensional complex whose facets are the first m permissible
    (k+1)-sets, colored by residues; m = 0 gives the void complex."""
    fam = permissible_family(d, k, m)
    if m == 0:
        return ColoredComplex(SimplicialComplex.void(), {})
    cx = from_facets(fam.members)
    return ColoredComplex(cx, residue_colors(cx.vertices, d))


def ffk_feasible(a: int, b: int, k: int, d: int) -> bool:
    """Whether the compressed (k-1)-complex with b facets together with the
    first a permissible (k+1)-sets forms a simplicial complex; this is the
    composability criterion for consecutive face numbers of d-colorable
    complexes."""
    if a < 0 or b < 0 or k < 0:
        raise ValueError("a, b, k must be >= 0")
    if a == 0:
        return True
    upper = permissible_family(d, k, a).members
    if k == 0:
        return b >= 1
    lower = set(permissible_family(d, k - 1, b).members)
    return all(
        sub in lower for s in upper for sub in combinations(s, k)
    )


# -- multipartite clique counts ---------------------------------------------


def _part_sizes(n: int, d: int) -> list[int]:
    return [n // d + (1 if t < n % d else 0) for t in range(d)]


def _elementary_symmetric(sizes, j: int) -> int:
    if j < 0:
        return 0
    poly = [1]
    for s in sizes:
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] += c
            nxt[i + 1] += c * s
        poly = nxt
    return poly[j] if j < len(poly) else 0


def turan_count(n: int, j: int, d: int) -> int:
    """Number of j-cliques of the balanced complete multipartite graph on n
    vertices and d parts.  The degenerate zero-part graph (n = 0, d = 0) has
    one clique, the empty one."""
    if n < 0 or d < 0 or (d == 0 and n > 0):
        raise ValueError("need n >= 0 and d >= 1 (d = 0 only with n = 0)")
    sizes = [] if d == 0 else _part_sizes(n, d)
    return _elementary_symmetric(sizes, j)


def multipartite_graph(n: int, d: int) -> SimplicialComplex:
    """Balanced complete multipartite graph as a 1-complex; parts are the
    residue classes mod d on {1..n}."""
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    facets: list[list[int]] = [[v] for v in range(1, n + 1)]
    facets += [
        [u, v]
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if u % d != v % d
    ]
    return from_facets(facets)


def turan_recursion_holds(n: int, i: int, d: int) -> bool:
    """Pascal-style recursion for multipartite clique counts: splitting the
    i-cliques by whether they use a fixed vertex of a largest part."""
    if n < 1 or d < 1 or i < 1:
        raise ValueError("need n, i, d >= 1")
    top = -(-n // d)  # ceil
    lhs = turan_count(n - top, i - 1, d - 1)
    return lhs + turan_count(n - 1, i, d) == turan_count(n, i, d)


def max_cliques_over_partitions(n: int, j: int, d: int) -> int:
    """Maximum j-clique count over complete multipartite graphs with at most
    d parts on n vertices (every d-colorable graph is a subgraph of one, so
    this bounds all d-colorable graphs)."""
    best = 0

    def rec(remaining: int, max_part: int, sizes: list[int]):
        nonlocal best
        if len(sizes) > d:
            return
        if remaining == 0:
            best = max(best, _elementary_symmetric(sizes, j))
            return
        if len(sizes) == d:
            return
        for s in range(min(remaining, max_part), 0, -1):
            rec(remaining - s, s, sizes + [s])

    rec(n, n, [])
    return best


# -- colorings ---------------------------------------------------------------


def find_coloring(cx: SimplicialComplex, d: int) -> ColoredComplex | None:
    """Proper d-coloring of the 1-skeleton by backtracking, largest-degree
    vertices first; deterministic, None when no coloring exists."""
    if d < 0:
        raise ValueError("d must be >= 0")
    adj = cx.adjacency()
    order = sorted(cx.vertices, key=lambda v: (-len(adj[v]), v))
    colors: dict[int, int] = {}

    def assign(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        used = {colors[u] for u in adj[v] if u in colors}
        for c in range(1, d + 1):
            if c in used:
                continue
            colors[v] = c
            if assign(idx + 1):
                return True
            del colors[v]
        return False

    if not assign(0):
        return None
    return ColoredComplex(cx, dict(colors))


def is_balanced(cx: SimplicialComplex) -> bool:
    """(dim+1)-colorable."""
    return find_coloring(cx, cx.dim + 1) is not None


@dataclass(frozen=True)
class ABalanceSpec:
    """Relaxed balancedness caps: part k may meet a face a_k times.

    The caps must sum to dim+1, matching the all-ones case being ordinary
    balancedness.
    """

    caps: tuple[int, ...]

    def __post_init__(self):
        if not self.caps or any(a < 1 for a in self.caps):
            raise ValueError("caps must be positive")


def is_a_balanced(cx: SimplicialComplex, spec: ABalanceSpec) -> bool:
    """Search for a vertex partition V_1..V_r with |F visits V_k| <= a_k for
    every face; parts with equal caps are interchangeable, so a fresh part
    index within a cap group is only opened in ascending order."""
    caps = spec.caps
    if sum(caps) != cx.dim + 1:
        raise ValueError(
            f"caps sum {sum(caps)} must equal dim+1 = {cx.dim + 1}"
        )
    r = len(caps)
    adj = cx.adjacency()
    order = sorted(cx.vertices, key=lambda v: (-len(adj[v]), v))
    facets = [frozenset(f) for f in cx.facets]
    counts = [[0] * r for _ in facets]
    assignment: dict[int, int] = {}
    group_of: dict[int, list[int]] = {}
    for t, a in enumerate(caps):
        group_of.setdefault(a, []).append(t)

    def may_open(t: int, used: set[int]) -> bool:
        for g in group_of[caps[t]]:
            if g == t:
                return True
            if g not in used:
                return False
        return True

    def assign(idx: int, used: set[int]) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        touching = [fi for fi, f in enumerate(facets) if v in f]
        for t in range(r):
            if t not in used and not may_open(t, used):
                continue
            if any(counts[fi][t] >= caps[t] for fi in touching):
                continue
            for fi in touching:
                counts[fi][t] += 1
            assignment[v] = t
            newly = t not in used
            if newly:
                used.add(t)
            if assign(idx + 1, used):
                return True
            if newly:
                used.remove(t)
            del assignment[v]
            for fi in touching:
                counts[fi][t] -= 1
        return False

    return assign(0, set())


# -- companion constructions --------------------------------------------------


def colorable_companion(cx: SimplicialComplex, i: int, k: int) -> ColoredComplex:
    """d-colorable complex matching the k-1 and k face numbers of an
    i-banner complex of dimension d-1 (needs i <= k <= d-1).

    The candidate is the compressed complex on the lower level together with
    the initial segment on the upper level; the theory guarantees it is a
    complex, so a failed verification raises SynthesisInvariantError.
    """
    d = cx.dim + 1
    if not 1 <= i <= k <= d - 1:
        raise ValueError(f"need 1 <= i <= k <= {d - 1}, got i={i}, k={k}")
    if not is_i_banner(cx, i):
        raise ValueError(f"complex is not {i}-banner")
    b, a = cx.n_faces(k - 1), cx.n_faces(k)
    if not ffk_feasible(a, b, k, d):
        raise SynthesisInvariantError(
            f"compression candidate for (f_{k - 1}, f_{k}) = ({b}, {a}) "
            f"with d = {d} is not a complex"
        )
    lower = permissible_family(d, k - 1, b).members
    upper = permissible_family(d, k, a).members
    gamma = from_facets(list(lower) + list(upper))
    if gamma.n_faces(k - 1) != b or gamma.n_faces(k) != a:
        raise SynthesisInvariantError("companion face numbers drifted")
    cc = ColoredComplex(gamma, residue_colors(gamma.vertices, d))
    if not validate_coloring(cc):
        raise SynthesisInvariantError("residue coloring failed")
    return cc


def balanced_companion(cx: SimplicialComplex, i: int) -> ColoredComplex:
    """Balanced complex with the same number of vertices as the i-banner
    input and the same face numbers in all dimensions >= i-1 (needs
    2 <= i <= d).

    Built as the compressed complex at level i-1 plus the initial segments
    at levels i..d-1, padded with fresh isolated vertices (colored
    round-robin by residue) up to the input's vertex count.
    """
    d = cx.dim + 1
    if not 2 <= i <= d:
        raise ValueError(f"need 2 <= i <= {d}, got i={i}")
    if not is_i_banner(cx, i):
        raise ValueError(f"complex is not {i}-banner")
    n = cx.n_vertices
    for j in range(i, d):
        if not ffk_feasible(cx.n_faces(j), cx.n_faces(j - 1), j, d):
            raise SynthesisInvariantError(
                f"face numbers (f_{j - 1}, f_{j}) are not d-composable"
            )
    facets: list[tuple[int, ...]] = list(
        permissible_family(d, i - 1, cx.n_faces(i - 1)).members
    )
    for j in range(i, d):
        facets += permissible_family(d, j, cx.n_faces(j)).members
    core = from_facets(facets)
    if core.n_vertices > n:
        raise SynthesisInvariantError(
            f"companion needs {core.n_vertices} vertices but only {n} are available"
        )
    base = max(core.vertices, default=0)
    pad = [[base + t + 1] for t in range(n - core.n_vertices)]
    gamma = from_facets([list(f) for f in core.facets] + pad)
    cc = ColoredComplex(gamma, residue_colors(gamma.vertices, d))
    if not validate_coloring(cc):
        raise SynthesisInvariantError("residue coloring failed")
    for k in range(i, d + 1):
        if gamma.n_faces(k - 1) != cx.n_faces(k - 1):
            raise SynthesisInvariantError(
                f"face number f_{k - 1} mismatch: "
                f"{gamma.n_faces(k - 1)} != {cx.n_faces(k - 1)}"
            )
    if gamma.n_vertices != n:
        raise SynthesisInvariantError("vertex count mismatch after padding")
    return cc


def turan_bound_holds(cx: SimplicialComplex, i: int) -> bool:
    """Face-count bound for i-banner complexes: the number of (i-1)-faces is
    at most the i-clique count of the balanced multipartite graph on the
    same vertices with dim+1 parts."""
    if not is_i_banner(cx, i):
        raise ValueError(f"complex is not {i}-banner")
    d = cx.dim + 1
    return cx.n_faces(i - 1) <= turan_count(cx.n_vertices, i, d)
