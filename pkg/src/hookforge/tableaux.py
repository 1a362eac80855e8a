"""Standard Young tableaux: exhaustive enumeration and the row-insertion
bijection between (tableau, corner) pairs and (smaller tableau, letter) pairs.

Reverse row-insertion starts in a removable corner and bumps upward: in each
row above, the moving entry displaces the largest entry smaller than it, and
the value pushed out of row 1 is the ejected letter.  Forward row-insertion
is the exact inverse.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import chain

from .partitions import Cell, Partition, removable_cells


@dataclass(frozen=True)
class StandardTableau:
    """Rows of entries forming a bijective filling of a partition shape by
    1..n, strictly increasing along rows and down columns."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        n = sum(len(r) for r in self.rows)
        seen = sorted(chain.from_iterable(self.rows))
        if seen != list(range(1, n + 1)):
            raise ValueError(f"entries must be a bijection onto 1..{n}")
        for r, row in enumerate(self.rows):
            for c, v in enumerate(row):
                if c + 1 < len(row) and row[c + 1] <= v:
                    raise ValueError("rows must strictly increase")
                if r + 1 < len(self.rows) and c < len(self.rows[r + 1]):
                    if self.rows[r + 1][c] <= v:
                        raise ValueError("columns must strictly increase")
        Partition(tuple(len(r) for r in self.rows))  # validates the shape

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def entry(self, cell: Cell) -> int:
        return self.rows[cell.row - 1][cell.col - 1]

    def reading_word(self) -> tuple[int, ...]:
        """Row-by-row concatenation, used as the deterministic sort key."""
        return tuple(chain.from_iterable(self.rows))

    def serialize(self) -> str:
        return "/".join(" ".join(str(v) for v in row) for row in self.rows)

    @classmethod
    def parse(cls, text: str) -> "StandardTableau":
        text = text.strip()
        if not text:
            return cls(())
        return cls(
            tuple(tuple(int(v) for v in row.split()) for row in text.split("/"))
        )

    def __str__(self):
        return self.serialize()


def enumerate_syt(shape: Partition) -> list[StandardTableau]:
    """All standard tableaux of the given shape, sorted by reading word.

    Values 1..n are placed in increasing order; a cell is available once the
    cells above and to its left are filled, which is exactly the standard
    condition.
    """
    n = shape.n
    if n == 0:
        return [StandardTableau(())]
    rows = [[0] * p for p in shape.parts]
    fill = [0] * len(shape.parts)  # filled prefix length per row
    found: list[StandardTableau] = []

    def place(v: int):
        if v > n:
            found.append(StandardTableau(tuple(tuple(r) for r in rows)))
            return
        for r, row in enumerate(rows):
            c = fill[r]
            if c < len(row) and (r == 0 or fill[r - 1] > c):
                row[c] = v
                fill[r] += 1
                place(v + 1)
                fill[r] -= 1
        return

    place(1)
    found.sort(key=StandardTableau.reading_word)
    return found


def enumerate_syt_of_size(n: int) -> list[StandardTableau]:
    """All standard tableaux with n cells, over every shape of n."""
    from .partitions import partitions_of

    return [t for lam in partitions_of(n) for t in enumerate_syt(lam)]


def reverse_row_insert(tab: StandardTableau, cell: Cell) -> tuple[StandardTableau, int]:
    """Delete the corner cell by upward bumping and eject a letter.

    Returns the size n-1 tableau (entries above the ejected letter shifted
    down by one) together with the ejected letter i in 1..n.
    """
    if cell not in removable_cells(tab.shape):
        raise ValueError(f"cell {tuple(cell)} is not a removable corner")
    rows = [list(r) for r in tab.rows]
    moving = rows[cell.row - 1].pop()
    if not rows[cell.row - 1]:
        rows.pop()
    for r in range(cell.row - 2, -1, -1):
        row = rows[r]
        pos = bisect_left(row, moving) - 1  # rightmost entry below the mover
        row[pos], moving = moving, row[pos]
    ejected = moving
    out = tuple(
        tuple(v - 1 if v > ejected else v for v in row) for row in rows
    )
    return StandardTableau(out), ejected


def forward_row_insert(tab: StandardTableau, value: int) -> tuple[StandardTableau, Cell]:
    """Insert a letter by downward bumping; inverse of reverse_row_insert.

    Entries >= value are first shifted up by one so that value is fresh.
    Returns the grown tableau and the newly created cell.
    """
    n = tab.n + 1
    if not 1 <= value <= n:
        raise ValueError(f"insertion value must lie in 1..{n}")
    rows = [[v + 1 if v >= value else v for v in row] for row in tab.rows]
    moving = value
    for r, row in enumerate(rows):
        pos = bisect_right(row, moving)
        if pos == len(row):
            row.append(moving)
            return StandardTableau(tuple(tuple(x) for x in rows)), Cell(r + 1, len(row))
        row[pos], moving = moving, row[pos]
    rows.append([moving])
    return StandardTableau(tuple(tuple(x) for x in rows)), Cell(len(rows), 1)
