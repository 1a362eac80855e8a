"""Partition shapes: cells, hooks, contents, corners, and the hook-length
counting formula.

Diagrams use the English (matrix) convention with 1-based cells, so the cell
in row i and column j has content j - i.  "Outer corners" are the positions
where a cell may be added (there are d of them) and "inner corners" are the
removable cells of hook length 1 (there are d - 1, interlacing the outer
corners by content).  Note that some of the literature swaps these two terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cache
from typing import Iterator, NamedTuple


class Cell(NamedTuple):
    row: int
    col: int


def content(c: Cell) -> int:
    """Diagonal content col - row."""
    return c.col - c.row


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; the empty tuple is the shape of 0."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        prev = None
        for p in self.parts:
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers: {self.parts}")
            if prev is not None and p > prev:
                raise ValueError(f"parts must be weakly decreasing: {self.parts}")
            prev = p

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        return Partition(_conjugate_parts(self.parts))

    def cells(self) -> Iterator[Cell]:
        for r, length in enumerate(self.parts, start=1):
            for c in range(1, length + 1):
                yield Cell(r, c)

    def contains(self, cell: Cell) -> bool:
        return 1 <= cell.row <= len(self.parts) and 1 <= cell.col <= self.parts[cell.row - 1]

    def serialize(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "-"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("-", ""):
            return cls(())
        return cls(tuple(int(p) for p in text.split(",")))

    def __str__(self):
        return self.serialize()


@cache
def _conjugate_parts(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    out = [0] * parts[0]
    for p in parts:
        for j in range(p):
            out[j] += 1
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse-lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return [Partition(())]
    out = []
    parts = [n]
    while True:
        out.append(Partition(tuple(parts)))
        # rightmost part exceeding 1 shrinks; the tail is repacked greedily
        i = len(parts) - 1
        while i >= 0 and parts[i] == 1:
            i -= 1
        if i < 0:
            return out
        rest = len(parts) - i
        parts[i] -= 1
        del parts[i + 1 :]
        while rest > 0:
            nxt = min(parts[-1], rest)
            parts.append(nxt)
            rest -= nxt


def hook_length(lam: Partition, cell: Cell) -> int:
    """Arm + leg + 1 of a cell inside the shape."""
    if not lam.contains(cell):
        raise ValueError(f"cell {tuple(cell)} outside shape {lam}")
    arm = lam.parts[cell.row - 1] - cell.col
    leg = _conjugate_parts(lam.parts)[cell.col - 1] - cell.row
    return arm + leg + 1


def hooks(lam: Partition) -> list[int]:
    """Hook lengths of every cell, row by row."""
    conj = _conjugate_parts(lam.parts)
    return [
        length - c + conj[c - 1] - r + 1
        for r, length in enumerate(lam.parts, start=1)
        for c in range(1, length + 1)
    ]


def f_lambda(lam: Partition) -> int:
    """Number of standard fillings: n! divided by the product of all hooks.

    The quotient is asserted to be an exact integer.
    """
    prod = 1
    for h in hooks(lam):
        prod *= h
    quot, rem = divmod(math.factorial(lam.n), prod)
    if rem:
        raise ArithmeticError(f"hook product does not divide n! for {lam}")
    return quot


@dataclass(frozen=True)
class CornerProfile:
    """Outer and inner corner cells with their contents, both ordered by
    strictly decreasing content (top-right to bottom-left).

    The contents strictly interlace: x_1 > y_1 > x_2 > ... > y_{d-1} > x_d.
    """

    outer_cells: tuple[Cell, ...]
    inner_cells: tuple[Cell, ...]
    outer_contents: tuple[int, ...]
    inner_contents: tuple[int, ...]


def addable_cells(lam: Partition) -> list[Cell]:
    """Positions where a cell may be added, by decreasing content."""
    out = []
    for r, length in enumerate(lam.parts, start=1):
        if r == 1 or length < lam.parts[r - 2]:
            out.append(Cell(r, length + 1))
    out.append(Cell(len(lam.parts) + 1, 1))
    return out


def removable_cells(lam: Partition) -> list[Cell]:
    """Cells of hook length 1, by decreasing content."""
    out = []
    for r, length in enumerate(lam.parts, start=1):
        below = lam.parts[r] if r < len(lam.parts) else 0
        if length > below:
            out.append(Cell(r, length))
    return out


def corner_profile(lam: Partition) -> CornerProfile:
    outer = tuple(addable_cells(lam))
    inner = tuple(removable_cells(lam))
    return CornerProfile(
        outer_cells=outer,
        inner_cells=inner,
        outer_contents=tuple(content(c) for c in outer),
        inner_contents=tuple(content(c) for c in inner),
    )


def add_cell(lam: Partition, cell: Cell) -> Partition:
    if cell not in addable_cells(lam):
        raise ValueError(f"cell {tuple(cell)} is not addable to {lam}")
    parts = list(lam.parts)
    if cell.row == len(parts) + 1:
        parts.append(1)
    else:
        parts[cell.row - 1] += 1
    return Partition(tuple(parts))


def remove_cell(lam: Partition, cell: Cell) -> Partition:
    if cell not in removable_cells(lam):
        raise ValueError(f"cell {tuple(cell)} is not removable from {lam}")
    parts = list(lam.parts)
    parts[cell.row - 1] -= 1
    if parts and parts[-1] == 0:
        parts.pop()
    return Partition(tuple(parts))
