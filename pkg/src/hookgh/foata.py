"""Block-shuffling word maps and the monomial-preserving filling bijection.

arm and leg cut a word into blocks around a pivot letter and rotate one
letter to a block edge; bump slides a hook filling one cell around its
corner.  theta composes the three into a bijection from the fillings with
corner below the last row entry onto the fillings of the partner shape with
column top below the corner, preserving the inversion monomial phi.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .fillings import Monomial, StandardFilling, phi, split_fillings
from .shapes import HookShape


def _checked_word(pivot: int, word: Sequence[int]) -> tuple[int, ...]:
    w = tuple(word)
    if not w:
        raise ValueError("empty word")
    if any(not isinstance(x, int) or x < 1 for x in w):
        raise ValueError(f"letters must be positive integers: {w}")
    if len(set(w)) != len(w):
        raise ValueError(f"letters must be distinct: {w}")
    if pivot in w:
        raise ValueError(f"pivot {pivot} occurs in the word")
    return w


def arm(u: int, word: Sequence[int]) -> tuple[int, ...]:
    """Shuffle forward around pivot u; the last letter must exceed u.

    Cut before every letter < u that starts the word or follows a letter
    > u; in each block so begun, the first letter > u rotates to the front.
    Letters > u keep their relative order, as do letters < u.

    >>> arm(5, (4, 9, 2, 6, 3, 1, 8, 7))
    (9, 4, 6, 2, 8, 3, 1, 7)
    """
    w = _checked_word(u, word)
    if w[-1] < u:
        raise ValueError(f"last letter {w[-1]} must exceed the pivot {u}")
    m = len(w)
    bars = [p for p in range(m) if w[p] < u and (p == 0 or w[p - 1] > u)]
    if not bars:
        return w
    out = list(w[:bars[0]])
    for b, e in zip(bars, bars[1:] + [m]):
        block = list(w[b:e])
        z = None
        for i, x in enumerate(block):
            if x > u:
                z = i
                break
        assert z is not None, "every cut block ends with a letter > u"
        assert all(x < u for x in block[:z]), \
            "the rotated letter only jumps letters below the pivot"
        out += [block[z]] + block[:z] + block[z + 1:]
    return tuple(out)


def leg(v: int, word: Sequence[int]) -> tuple[int, ...]:
    """Shuffle backward around pivot v; the first letter must be below v.

    Cut after every letter > v that ends the word or precedes a letter < v;
    in each block so ended, the last letter < v rotates to the end.

    >>> leg(5, (4, 8, 7, 3, 1, 9, 2, 6))
    (8, 7, 4, 3, 9, 1, 6, 2)
    """
    w = _checked_word(v, word)
    if w[0] > v:
        raise ValueError(f"first letter {w[0]} must be below the pivot {v}")
    m = len(w)
    bars = [p for p in range(m) if w[p] > v and (p == m - 1 or w[p + 1] < v)]
    if not bars:
        return w
    out: list[int] = []
    start = 0
    for p in bars:
        block = list(w[start:p + 1])
        z = None
        for i in range(len(block) - 1, -1, -1):
            if block[i] < v:
                z = i
                break
        assert z is not None, "every cut block starts with a letter < v"
        assert all(x > v for x in block[z + 1:]), \
            "the rotated letter only jumps letters above the pivot"
        out += block[:z] + block[z + 1:] + [block[z]]
        start = p + 1
    out += list(w[start:])
    return tuple(out)


def bump(S: StandardFilling) -> StandardFilling:
    """Slide the filling one step around its corner: the corner entry joins
    the column bottom, row entries shift one cell left; (a,1^l) becomes
    (a-1,1^(l+1)).  Needs arm >= 2."""
    if S.shape.arm < 2:
        raise ValueError("bump needs at least two row cells")
    return StandardFilling(HookShape(S.shape.arm - 1, S.shape.leg + 1),
                           S.row[1:], (S.row[0],) + S.col)


def theta(S: StandardFilling) -> StandardFilling:
    """Transport a corner-below-last filling across the corner, preserving
    phi.  With u the corner entry and v the first row entry above u: bump,
    then arm_u on the new row, then leg_v on the new column."""
    if S.shape.arm < 2:
        raise ValueError("theta needs at least two row cells")
    u = S.row[0]
    if not u < S.row[-1]:
        raise ValueError("theta needs corner < last row entry")
    v = next(x for x in S.row[1:] if x > u)
    B = bump(S)
    new_row = arm(u, B.row)
    new_col = leg(v, B.col)
    assert new_row[0] == v, "arm moves the pivot successor to the corner"
    T = StandardFilling(B.shape, new_row, new_col)
    assert T.col[-1] < T.row[0], "image lands in the corner-above class"
    return T


@lru_cache(maxsize=None)
def _phi_table(mu: HookShape) -> dict[Monomial, StandardFilling]:
    """phi -> filling over the corner-below-last class of mu; built once per
    shape and shared read-only thereafter."""
    less, _ = split_fillings(mu, "mu")
    return {phi(S): S for S in less}


def theta_inverse(T: StandardFilling) -> StandardFilling:
    """Inverse of theta, by lookup of phi(T) in the source class."""
    if T.shape.leg < 1:
        raise ValueError("theta_inverse needs at least one column cell")
    if not T.col[-1] < T.row[0]:
        raise ValueError("theta_inverse needs column top < corner")
    mu = HookShape(T.shape.arm + 1, T.shape.leg - 1)
    table = _phi_table(mu)
    key = phi(T)
    if key not in table:
        raise ValueError(f"no preimage found for {T}")
    return table[key]
