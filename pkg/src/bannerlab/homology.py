"""Reduced simplicial homology over prime fields or the rationals.

Betti numbers come from exact ranks of the boundary maps of the augmented
chain complex (the empty face is a (-1)-chain generator, so the map in
degree 0 is the augmentation).  All arithmetic is exact: modular for prime
characteristic, fraction-free integer elimination for characteristic 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernel
from .complexes import SimplicialComplex


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 (rationals) or a prime p."""

    characteristic: int

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"characteristic must be 0 or a prime, got {c}")

    @staticmethod
    def coerce(field) -> "FieldSpec":
        if isinstance(field, FieldSpec):
            return field
        return FieldSpec(int(field))

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


RATIONALS = FieldSpec(0)
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)

#: fields used by default in the verification suites
DEFAULT_FIELDS = (GF2, GF3, RATIONALS)


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers indexed from degree -1; 0 outside the range."""

    values: tuple[int, ...]
    start: int = -1

    def __getitem__(self, k: int) -> int:
        i = k - self.start
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0

    def __iter__(self):
        return iter(self.values)

    def degrees(self) -> range:
        return range(self.start, self.start + len(self.values))

    def total(self) -> int:
        return sum(self.values)


def _boundary_columns(cx: SimplicialComplex, k: int):
    """Sparse columns of the degree-k boundary map (rows: (k-1)-faces)."""
    lower = cx.faces(k - 1)
    index = {f: i for i, f in enumerate(lower)}
    cols = []
    for f in cx.faces(k):
        vs = sorted(f)
        col = []
        for j, v in enumerate(vs):
            col.append((index[f - {v}], 1 if j % 2 == 0 else -1))
        cols.append(col)
    return cols, len(lower)


def boundary_rank(cx: SimplicialComplex, k: int, field=2) -> int:
    """Exact rank of the k-th boundary map (augmentation at k=0)."""
    fs = FieldSpec.coerce(field)
    if cx.is_void:
        return 0
    if not -1 <= k <= cx.dim:
        raise ValueError(f"degree {k} outside -1..{cx.dim}")
    if k == -1:
        return 0
    cols, nrows = _boundary_columns(cx, k)
    if fs.characteristic == 0:
        return _kernel.rank_char0(cols, nrows)
    return _kernel.rank_mod_p(cols, nrows, fs.characteristic)


def reduced_betti(cx: SimplicialComplex, field=2) -> BettiVector:
    """Reduced Betti numbers in degrees -1..dim."""
    fs = FieldSpec.coerce(field)
    if cx.is_void:
        return BettiVector(())
    d = cx.dim
    ranks = {k: boundary_rank(cx, k, fs) for k in range(0, d + 1)}
    ranks[-1] = 0
    ranks[d + 1] = 0
    values = tuple(
        cx.n_faces(k) - ranks[k] - ranks[k + 1] for k in range(-1, d + 1)
    )
    return BettiVector(values)


def betti_number(cx: SimplicialComplex, k: int, field=2) -> int:
    return reduced_betti(cx, field)[k]


def euler_characteristic(cx: SimplicialComplex) -> int:
    """Alternating face-count sum over dimensions >= 0."""
    fv = cx.f_vector()
    return sum((-1) ** j * fv[j + 1] for j in range(0, cx.dim + 1))
