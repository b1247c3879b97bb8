"""Standard fillings of hook shapes and their inversion statistics.

A standard filling places 1..n bijectively on the cells of a hook.  Row
inversions are pairs (t, r) with t > r and t left of r in row 1; column
inversions are pairs (d, c) with d > c and d above c in column 1, the corner
entry counting as the bottom of the column.  The monomial phi attached to a
filling records, per letter, how many row inversions it is the smaller
member of (a y exponent) and how many column inversions it is the larger
member of (an x exponent).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from itertools import permutations

from .kernels import col_inv_exponents, row_inv_exponents
from .shapes import Cell, HookShape

Pair = tuple[int, int]


@total_ordering
class Monomial:
    """Monomial in x_1..x_n, y_1..y_n, stored as sorted (index, exponent)
    pairs with positive exponents.  Total order is graded lexicographic on
    the concatenated x-then-y exponent vector."""

    __slots__ = ("x", "y", "degree", "_hash")

    def __init__(self, x=(), y=()):
        self.x = tuple(sorted((int(i), int(e)) for i, e in x if e))
        self.y = tuple(sorted((int(i), int(e)) for i, e in y if e))
        for i, e in self.x + self.y:
            if i < 1 or e < 0:
                raise ValueError(f"bad (index, exponent) pair ({i}, {e})")
        self.degree = sum(e for _, e in self.x) + sum(e for _, e in self.y)
        self._hash = hash((self.x, self.y))

    @classmethod
    def from_vectors(cls, x_exps, y_exps) -> Monomial:
        return cls(
            ((i, e) for i, e in enumerate(x_exps, start=1) if e),
            ((i, e) for i, e in enumerate(y_exps, start=1) if e),
        )

    @classmethod
    def _from_sorted(cls, x: tuple[Pair, ...], y: tuple[Pair, ...]) -> Monomial:
        """Trusted constructor for already-sorted positive pairs."""
        m = object.__new__(cls)
        m.x = x
        m.y = y
        m.degree = sum(e for _, e in x) + sum(e for _, e in y)
        m._hash = hash((x, y))
        return m

    def bump(self, kind: str, index: int) -> Monomial:
        """Multiply by x_index or y_index."""
        pairs = self.x if kind == "x" else self.y
        new = None
        for pos, (i, e) in enumerate(pairs):
            if i == index:
                new = pairs[:pos] + ((i, e + 1),) + pairs[pos + 1:]
                break
            if i > index:
                new = pairs[:pos] + ((index, 1),) + pairs[pos:]
                break
        if new is None:
            new = pairs + ((index, 1),)
        if kind == "x":
            return Monomial._from_sorted(new, self.y)
        return Monomial._from_sorted(self.x, new)

    def x_degree(self) -> int:
        return sum(e for _, e in self.x)

    def y_degree(self) -> int:
        return sum(e for _, e in self.y)

    def x_map(self) -> dict[int, int]:
        return dict(self.x)

    def y_map(self) -> dict[int, int]:
        return dict(self.y)

    def dense(self, n: int) -> tuple[int, ...]:
        """Concatenated x-then-y exponent vector of length 2n."""
        out = [0] * (2 * n)
        for i, e in self.x:
            out[i - 1] = e
        for i, e in self.y:
            out[n + i - 1] = e
        return tuple(out)

    def divides(self, other: Monomial) -> bool:
        ox, oy = other.x_map(), other.y_map()
        return all(ox.get(i, 0) >= e for i, e in self.x) and \
               all(oy.get(i, 0) >= e for i, e in self.y)

    def __mul__(self, other: Monomial) -> Monomial:
        x = self.x_map()
        for i, e in other.x:
            x[i] = x.get(i, 0) + e
        y = self.y_map()
        for i, e in other.y:
            y[i] = y.get(i, 0) + e
        return Monomial(x.items(), y.items())

    def quotient(self, other: Monomial) -> Monomial:
        """self / other; other must divide self."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        x = self.x_map()
        for i, e in other.x:
            x[i] -= e
        y = self.y_map()
        for i, e in other.y:
            y[i] -= e
        return Monomial(x.items(), y.items())

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.x == other.x and self.y == other.y

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        if self.degree != other.degree:
            return self.degree < other.degree
        c = _sparse_lex_cmp(self.x, other.x)
        if c:
            return c < 0
        return _sparse_lex_cmp(self.y, other.y) < 0

    def __str__(self):
        parts = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in self.x]
        parts += [f"y{i}" if e == 1 else f"y{i}^{e}" for i, e in self.y]
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return f"Monomial({self})"


UNIT = Monomial()


def _sparse_lex_cmp(p: tuple[Pair, ...], q: tuple[Pair, ...]) -> int:
    """Lexicographic comparison of sparse exponent vectors; a nonzero
    exponent at an earlier index wins."""
    ia = ib = 0
    while ia < len(p) and ib < len(q):
        (i1, e1), (i2, e2) = p[ia], q[ib]
        if i1 == i2:
            if e1 != e2:
                return -1 if e1 < e2 else 1
            ia += 1
            ib += 1
        elif i1 < i2:
            return 1
        else:
            return -1
    if ia < len(p):
        return 1
    if ib < len(q):
        return -1
    return 0


@dataclass(frozen=True)
class StandardFilling:
    """Bijective labeling of a hook's cells by 1..n.

    row holds positions (1,1)..(1,arm) left to right; col holds positions
    (2,1)..(leg+1,1) bottom to top, so row[0] is the shared corner entry.
    """

    shape: HookShape
    row: tuple[int, ...]
    col: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "row", tuple(self.row))
        object.__setattr__(self, "col", tuple(self.col))
        if len(self.row) != self.shape.arm or len(self.col) != self.shape.leg:
            raise ValueError(f"entry counts {len(self.row)}+{len(self.col)} do "
                             f"not fit shape ({self.shape.arm},1^{self.shape.leg})")
        if sorted(self.row + self.col) != list(range(1, self.shape.n + 1)):
            raise ValueError(f"entries {self.row + self.col} are not a "
                             f"permutation of 1..{self.shape.n}")

    def entry(self, i: int, j: int) -> int:
        """The label in cell (i, j)."""
        if i == 1 and 1 <= j <= self.shape.arm:
            return self.row[j - 1]
        if j == 1 and 2 <= i <= self.shape.leg + 1:
            return self.col[i - 2]
        raise ValueError(f"cell ({i}, {j}) not in shape")

    def position_of(self, k: int) -> Cell:
        """The cell holding label k."""
        if k in self.row:
            return Cell(1, self.row.index(k) + 1)
        if k in self.col:
            return Cell(self.col.index(k) + 2, 1)
        raise ValueError(f"label {k} not in filling")

    def column_word(self) -> tuple[int, ...]:
        """Column entries bottom to top, corner included."""
        return (self.row[0],) + self.col

    def reading_word(self) -> tuple[int, ...]:
        return self.row + self.col

    def diagram(self) -> str:
        """Multi-line picture, column top-down above the row."""
        width = len(str(self.shape.n))
        lines = [str(e).rjust(width) for e in reversed(self.col)]
        lines.append(" ".join(str(e).rjust(width) for e in self.row))
        return "\n".join(lines)


def enumerate_fillings(s: HookShape) -> list[StandardFilling]:
    """All standard fillings, lexicographic by reading word row+col."""
    a = s.arm
    return [StandardFilling(s, p[:a], p[a:])
            for p in permutations(range(1, s.n + 1))]


@dataclass(frozen=True)
class InversionSet:
    row_pairs: frozenset[Pair]  # (t, r): t > r, t left of r in row 1
    col_pairs: frozenset[Pair]  # (d, c): d > c, d above c in column 1


def inversions(S: StandardFilling) -> InversionSet:
    row = S.row
    rp = {(row[i], row[j])
          for j in range(len(row)) for i in range(j) if row[i] > row[j]}
    cw = S.column_word()
    cp = {(cw[j], cw[i])
          for j in range(len(cw)) for i in range(j) if cw[j] > cw[i]}
    return InversionSet(frozenset(rp), frozenset(cp))


def phi(S: StandardFilling) -> Monomial:
    """Inversion monomial: x_d per column inversion won from above, y_r per
    row inversion lost from the right."""
    n = S.shape.n
    return Monomial.from_vectors(col_inv_exponents(S.column_word(), n),
                                 row_inv_exponents(S.row, n))


def split_fillings(s: HookShape, role: str) -> tuple[list[StandardFilling],
                                                     list[StandardFilling]]:
    """Split SF(s) into (SF_<, SF_>) in enumeration order.

    role "mu" compares the corner with the last row entry (needs arm >= 2);
    role "rho" compares the column top with the corner (needs leg >= 1).
    """
    if role == "mu":
        if s.arm < 2:
            raise ValueError("mu split undefined: need arm >= 2")
        test = lambda S: S.row[0] < S.row[-1]
    elif role == "rho":
        if s.leg < 1:
            raise ValueError("rho split undefined: need leg >= 1")
        test = lambda S: S.col[-1] < S.row[0]
    else:
        raise ValueError(f"role must be 'mu' or 'rho', got {role!r}")
    lo, hi = [], []
    for S in enumerate_fillings(s):
        (lo if test(S) else hi).append(S)
    return lo, hi


def signature_monomial(S: StandardFilling) -> Monomial:
    """Y-monomial dividing phi(S) but no phi(T) for T on the row-corner-
    removed partner shape.  Defined for row fillings with corner > last
    entry: with r the last row entry, t_1..t_k the other row entries below
    the corner entry, and j of them above r, the monomial is
    y_r^(arm-k-1+j) * y_{t_1}...y_{t_k}."""
    a = S.shape.arm
    if a < 2 or not S.row[0] > S.row[-1]:
        raise ValueError("signature needs a filling with corner > last row entry")
    leader, r = S.row[0], S.row[-1]
    ts = [e for e in S.row[1:-1] if e < leader]
    j = sum(1 for e in ts if e > r)
    y = {r: a - len(ts) - 1 + j}
    for t in ts:
        y[t] = y.get(t, 0) + 1
    return Monomial((), y.items())


def dual_signature_monomial(T: StandardFilling) -> Monomial:
    """Mirror of signature_monomial with rows and columns (and x and y)
    swapped: defined for column fillings with top > corner, using the
    interior column entries above the corner entry."""
    l = T.shape.leg
    if l < 1 or not T.col[-1] > T.row[0]:
        raise ValueError("dual signature needs a filling with column top > corner")
    cw = T.column_word()
    bottom, top = cw[0], cw[-1]
    ts = [e for e in cw[1:-1] if e > bottom]
    j = sum(1 for e in ts if e < top)
    x = {top: l - len(ts) + j}
    for t in ts:
        x[t] = x.get(t, 0) + 1
    return Monomial(x.items(), ())


def complement(S: StandardFilling) -> StandardFilling:
    """Replace every entry e by n+1-e."""
    n = S.shape.n
    return StandardFilling(S.shape,
                           tuple(n + 1 - e for e in S.row),
                           tuple(n + 1 - e for e in S.col))


def filling_to_json(S: StandardFilling) -> dict:
    return {"shape": {"a": S.shape.arm, "leg": S.shape.leg},
            "row": list(S.row), "col": list(S.col)}


def filling_from_json(data: dict) -> StandardFilling:
    shape = HookShape(int(data["shape"]["a"]), int(data["shape"]["leg"]))
    return StandardFilling(shape, tuple(data["row"]), tuple(data["col"]))
