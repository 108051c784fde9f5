"""Rank-kernel selection: compiled extension when built, pure Python otherwise.

Set ``BANNERLAB_PURE=1`` in the environment to force the pure kernel (used by
the benchmark and the kernel-agreement tests).
"""

from __future__ import annotations

import os

from . import _rankpure

_compiled = None
if not os.environ.get("BANNERLAB_PURE"):
    try:
        from . import _rankcore as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

USING_COMPILED = _compiled is not None

# The compiled kernel only handles moduli below 2**31; larger primes fall
# back to the pure implementation.
_COMPILED_MAX_P = 1 << 31


def rank_mod_p(cols, nrows: int, p: int) -> int:
    if _compiled is not None and p < _COMPILED_MAX_P:
        return _compiled.rank_mod_p(cols, nrows, p)
    return _rankpure.rank_mod_p(cols, nrows, p)


rank_char0 = _rankpure.rank_char0


def kernel_name() -> str:
    return "compiled" if USING_COMPILED else "pure"
