"""Pure-Python exact rank kernels.

Matrices arrive as sparse columns: ``cols[j]`` is a list of ``(row, coeff)``
pairs.  Elimination is column-major with pivoting by position (smallest row
index), which is all that is needed for integer incidence matrices; no
floating point is involved anywhere.
"""

from __future__ import annotations

from math import gcd


def rank_mod_p(cols, nrows: int, p: int) -> int:
    """Rank over GF(p), p prime."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in cols:
        cur: dict[int, int] = {}
        for r, v in col:
            nv = (cur.get(r, 0) + v) % p
            if nv:
                cur[r] = nv
            else:
                cur.pop(r, None)
        while cur:
            r = min(cur)
            piv = pivots.get(r)
            if piv is None:
                inv = pow(cur[r], p - 2, p)
                pivots[r] = {rr: vv * inv % p for rr, vv in cur.items()}
                rank += 1
                break
            f = cur.pop(r)
            for rr, vv in piv.items():
                if rr == r:
                    continue
                nv = (cur.get(rr, 0) - f * vv) % p
                if nv:
                    cur[rr] = nv
                else:
                    cur.pop(rr, None)
    return rank


def _normalize(vec: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return vec
    return {r: v // g for r, v in vec.items()}


def rank_char0(cols, nrows: int) -> int:
    """Rank over the rationals via fraction-free integer elimination.

    Rows are combined by cross-multiplication and re-normalized by their
    content, so all arithmetic stays in (exact) Python integers.
    """
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in cols:
        cur: dict[int, int] = {}
        for r, v in col:
            nv = cur.get(r, 0) + v
            if nv:
                cur[r] = nv
            else:
                cur.pop(r, None)
        while cur:
            r = min(cur)
            piv = pivots.get(r)
            if piv is None:
                pivots[r] = _normalize(cur)
                rank += 1
                break
            pv = piv[r]
            f = cur.pop(r)
            nxt = {rr: vv * pv for rr, vv in cur.items()}
            for rr, vv in piv.items():
                if rr == r:
                    continue
                nv = nxt.get(rr, 0) - f * vv
                if nv:
                    nxt[rr] = nv
                else:
                    nxt.pop(rr, None)
            cur = _normalize(nxt) if nxt else nxt
    return rank
