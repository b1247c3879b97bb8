"""Hot combinatorial kernels with an optional compiled backend.

The pure-Python definitions below are the reference implementations.  When
the ``hookgh._speedups`` extension is importable (and ``HOOKGH_PURE`` is not
set in the environment) the public names are rebound to the compiled
versions; ``PURE`` always keeps the Python ones so both backends can be
compared and benchmarked side by side.

Words are sequences of distinct integers in 1..n.  Row words are read left
to right, column words bottom to top.
"""

from __future__ import annotations

import os
from types import SimpleNamespace


def row_inv_exponents(word, n: int) -> tuple[int, ...]:
    """Exponent vector over 1..n counting, for each letter, the row
    inversions in which it is the smaller (right-hand) member."""
    out = [0] * n
    for j, wj in enumerate(word):
        if not 1 <= wj <= n:
            raise ValueError(f"letter {wj} outside 1..{n}")
        c = 0
        for i in range(j):
            if word[i] > wj:
                c += 1
        out[wj - 1] = c
    return tuple(out)


def col_inv_exponents(word, n: int) -> tuple[int, ...]:
    """Exponent vector over 1..n counting, for each letter, the column
    inversions in which it is the larger (upper) member."""
    out = [0] * n
    for j, wj in enumerate(word):
        if not 1 <= wj <= n:
            raise ValueError(f"letter {wj} outside 1..{n}")
        c = 0
        for i in range(j):
            if word[i] < wj:
                c += 1
        out[wj - 1] = c
    return tuple(out)


def row_inv_count(word) -> int:
    """Number of descents-at-a-distance: pairs i < j with word[i] > word[j]."""
    c = 0
    for j in range(len(word)):
        for i in range(j):
            if word[i] > word[j]:
                c += 1
    return c


def col_inv_count(word) -> int:
    """Number of pairs i < j with word[j] > word[i] (word read bottom to top)."""
    c = 0
    for j in range(len(word)):
        for i in range(j):
            if word[i] < word[j]:
                c += 1
    return c


def any_dominates(vecs, target) -> bool:
    """True if some vector in vecs is componentwise >= target."""
    for v in vecs:
        ok = True
        for a, b in zip(v, target):
            if a < b:
                ok = False
                break
        if ok:
            return True
    return False


PURE = SimpleNamespace(
    row_inv_exponents=row_inv_exponents,
    col_inv_exponents=col_inv_exponents,
    row_inv_count=row_inv_count,
    col_inv_count=col_inv_count,
    any_dominates=any_dominates,
)

_BACKEND = "pure-python"
if not os.environ.get("HOOKGH_PURE"):
    try:
        from hookgh._speedups import (  # noqa: F811
            any_dominates,
            col_inv_count,
            col_inv_exponents,
            row_inv_count,
            row_inv_exponents,
        )
        _BACKEND = "compiled"
    except ImportError:
        pass


def backend() -> str:
    """Which kernel implementation is active: "compiled" or "pure-python"."""
    return _BACKEND
