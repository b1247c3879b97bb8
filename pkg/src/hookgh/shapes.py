"""Hook partition shapes in French notation.

A hook (a, 1^l) has a cells in row 1 and l further cells stacked above the
corner in column 1.  Cells are (row, col) pairs, 1-indexed, row 1 at the
bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True, order=True)
class HookShape:
    """Hook (arm, 1^leg): arm >= 1 row cells, leg >= 0 column cells above."""

    arm: int
    leg: int

    def __post_init__(self):
        if self.arm < 1 or self.leg < 0:
            raise ValueError(f"not a hook: arm={self.arm}, leg={self.leg}")

    @property
    def n(self) -> int:
        return self.arm + self.leg


def cells(s: HookShape) -> list[Cell]:
    """Cells in reading order: row 1 left to right, then up the column."""
    row = [Cell(1, j) for j in range(1, s.arm + 1)]
    column = [Cell(i, 1) for i in range(2, s.leg + 2)]
    return row + column


def row_lengths(s: HookShape) -> list[int]:
    return [s.arm] + [1] * s.leg


def conjugate(s: HookShape) -> HookShape:
    """Transpose across the diagonal: (a, 1^l) -> (l+1, 1^(a-1))."""
    return HookShape(s.leg + 1, s.arm - 1)


def b_stat(s: HookShape) -> int:
    """Sum over cells of (row index - 1); equals leg*(leg+1)/2 for a hook."""
    return sum((i - 1) * length for i, length in enumerate(row_lengths(s), start=1))


def removable_cells(s: HookShape) -> list[Cell]:
    """Corner cells whose removal leaves a partition shape."""
    found = []
    if s.arm > 1 or s.leg == 0:
        found.append(Cell(1, s.arm))
    if s.leg > 0:
        found.append(Cell(s.leg + 1, 1))
    return found


def remove_corner(s: HookShape, which: str) -> HookShape:
    """Remove the row corner (1, arm) or the column corner (leg+1, 1).

    which is "row" or "column".  The result must still be a nonempty hook,
    so the row corner needs arm >= 2 and the column corner needs leg >= 1.
    """
    if which == "row":
        if s.arm < 2:
            raise ValueError(f"row corner of {format_shape(s)} is not removable")
        return HookShape(s.arm - 1, s.leg)
    if which == "column":
        if s.leg < 1:
            raise ValueError(f"column corner of {format_shape(s)} is not removable")
        return HookShape(s.arm, s.leg - 1)
    raise ValueError(f"which must be 'row' or 'column', got {which!r}")


def parse_shape(text: str) -> HookShape:
    """Parse "a", "a,1" or "a,1^l" (extra ",1" parts accumulate the leg).

    >>> parse_shape("5,1^4")
    HookShape(arm=5, leg=4)
    """
    parts = [p.strip() for p in text.strip().split(",")]
    if not parts or not parts[0]:
        raise ValueError(f"empty shape string {text!r}")
    try:
        arm = int(parts[0])
    except ValueError:
        raise ValueError(f"bad arm in shape string {text!r}") from None
    leg = 0
    for p in parts[1:]:
        if p == "1":
            leg += 1
        elif p.startswith("1^"):
            leg += int(p[2:])
        else:
            raise ValueError(f"bad column part {p!r} in shape string {text!r}")
    return HookShape(arm, leg)


def format_shape(s: HookShape) -> str:
    """Inverse of parse_shape: "a", "a,1" or "a,1^l"."""
    if s.leg == 0:
        return str(s.arm)
    if s.leg == 1:
        return f"{s.arm},1"
    return f"{s.arm},1^{s.leg}"


def shape_to_json(s: HookShape) -> dict:
    return {"a": s.arm, "leg": s.leg}


def shape_from_json(data: dict) -> HookShape:
    return HookShape(int(data["a"]), int(data["leg"]))
