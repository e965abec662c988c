"""Diagrams, Kohnert moves and the closure KD(D).

A diagram is stored as one occupied-row bitmask per column: bit ``r - 1`` of
``cols[c - 1]`` is set when the cell (row r, column c) is present.  Rows are
numbered from 1 at the bottom, columns from 1 at the left.  Kohnert moves only
push cells down inside a column, so the packed form stays small and is a
canonical hash key.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import InputError, ResourceError

Cell = tuple[int, int]

DEFAULT_MAX_STATES = 10**7


def _trim(cols: Iterable[int]) -> tuple[int, ...]:
    cols = list(cols)
    while cols and not cols[-1]:
        cols.pop()
    return tuple(cols)


def _bits(mask: int) -> list[int]:
    """Row indices (1-based, ascending) of the set bits of ``mask``."""
    rows = []
    r = 1
    while mask:
        if mask & 1:
            rows.append(r)
        mask >>= 1
        r += 1
    return rows


@dataclass(frozen=True, slots=True)
class Diagram:
    cols: tuple[int, ...] = ()

    def __post_init__(self):
        if self.cols and not self.cols[-1]:
            object.__setattr__(self, "cols", _trim(self.cols))

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> Diagram:
        cols: list[int] = []
        for r, c in cells:
            if r < 1 or c < 1:
                raise InputError(f"cell {(r, c)} outside the first quadrant")
            if len(cols) < c:
                cols.extend([0] * (c - len(cols)))
            bit = 1 << (r - 1)
            if cols[c - 1] & bit:
                raise InputError(f"duplicate cell {(r, c)}")
            cols[c - 1] |= bit
        return cls(_trim(cols))

    @property
    def cells(self) -> tuple[Cell, ...]:
        """Cells sorted by (row, col)."""
        out = [(r, c) for c, mask in enumerate(self.cols, 1) for r in _bits(mask)]
        out.sort()
        return tuple(out)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __len__(self) -> int:
        return sum(m.bit_count() for m in self.cols)

    def __contains__(self, cell: Cell) -> bool:
        r, c = cell
        return 1 <= c <= len(self.cols) and r >= 1 and bool(self.cols[c - 1] >> (r - 1) & 1)

    def __lt__(self, other: Diagram) -> bool:
        return self.cells < other.cells

    def column(self, c: int) -> int:
        return self.cols[c - 1] if 1 <= c <= len(self.cols) else 0

    def column_rows(self, c: int) -> list[int]:
        return _bits(self.column(c))

    @property
    def n_cols(self) -> int:
        return len(self.cols)

    @property
    def max_row(self) -> int:
        return max((m.bit_length() for m in self.cols), default=0)

    def row(self, r: int) -> list[int]:
        """Columns occupied in row ``r``, ascending."""
        bit = 1 << (r - 1)
        return [c for c, m in enumerate(self.cols, 1) if m & bit]

    def add(self, cell: Cell) -> Diagram:
        r, c = cell
        if cell in self:
            raise InputError(f"cell {cell} already present")
        cols = list(self.cols) + [0] * max(0, c - len(self.cols))
        cols[c - 1] |= 1 << (r - 1)
        return Diagram(tuple(cols))

    def remove(self, cell: Cell) -> Diagram:
        r, c = cell
        if cell not in self:
            raise InputError(f"cell {cell} not present")
        cols = list(self.cols)
        cols[c - 1] &= ~(1 << (r - 1))
        return Diagram(_trim(cols))

    def to_json(self) -> dict:
        return {"cells": [list(x) for x in self.cells]}

    @classmethod
    def from_json(cls, data: dict | str) -> Diagram:
        try:
            if isinstance(data, str):
                data = json.loads(data)
            cells = [(int(r), int(c)) for r, c in data["cells"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad diagram JSON: {exc}") from None
        return cls.from_cells(cells)

    def ascii(self, width: int | None = None, height: int | None = None) -> str:
        """Top row first, ``O`` for a cell and ``.`` for an empty position."""
        width = max(self.n_cols, width or 0)
        height = max(self.max_row, height or 0)
        lines = []
        for r in range(height, 0, -1):
            bit = 1 << (r - 1)
            lines.append("".join("O" if self.column(c) & bit else "." for c in range(1, width + 1)))
        return "\n".join(lines)

    def __str__(self) -> str:
        return "{" + ", ".join(f"({r},{c})" for r, c in self.cells) + "}"


def weight(d: Diagram, n: int | None = None) -> tuple[int, ...]:
    """Per-row cell counts; padded to length ``n`` when given."""
    size = max(d.max_row, n or 0)
    counts = [0] * size
    for mask in d.cols:
        for r in _bits(mask):
            counts[r - 1] += 1
    return tuple(counts)


def _move_target(mask: int, r: int) -> int:
    """Highest empty row strictly below ``r`` in a column, or 0 if none."""
    free = ~mask & ((1 << (r - 1)) - 1)
    return free.bit_length()


def kohnert_move(d: Diagram, r: int) -> Diagram | None:
    """Drop the rightmost cell of row ``r`` to the first empty spot below it.

    Returns None when row ``r`` is empty or its rightmost cell is blocked all
    the way down.
    """
    move = _kohnert_move_cols(d.cols, r)
    if move is None:
        return None
    return Diagram(move[0])


def _kohnert_move_cols(cols: tuple[int, ...], r: int):
    bit = 1 << (r - 1)
    for ci in range(len(cols) - 1, -1, -1):
        if cols[ci] & bit:
            dest = _move_target(cols[ci], r)
            if not dest:
                return None
            new = list(cols)
            new[ci] = (cols[ci] & ~bit) | (1 << (dest - 1))
            return tuple(new), ci + 1, dest
    return None


class Move(NamedTuple):
    """One Kohnert move: the cell in ``col`` dropped from ``src`` to ``dst``."""

    col: int
    src: int
    dst: int


def successors(d: Diagram) -> Iterator[tuple[Move, Diagram]]:
    """All diagrams one Kohnert move away, by increasing source row."""
    for r in range(1, d.max_row + 1):
        move = _kohnert_move_cols(d.cols, r)
        if move is not None:
            cols, c, dst = move
            yield Move(c, r, dst), Diagram(cols)


def kd_closure(
    base: Diagram,
    max_states: int = DEFAULT_MAX_STATES,
    with_parents: bool = False,
):
    """Breadth-first closure of ``base`` under Kohnert moves.

    Returns a set of diagrams, or with ``with_parents`` a dict mapping each
    diagram to ``(parent, Move)`` (``None`` for the base itself).
    """
    seen: dict[tuple[int, ...], object] = {base.cols: None}
    queue = deque([base.cols])
    while queue:
        cols = queue.popleft()
        top = max((m.bit_length() for m in cols), default=0)
        for r in range(2, top + 1):
            move = _kohnert_move_cols(cols, r)
            if move is None:
                continue
            new, c, dst = move
            new = _trim(new)
            if new in seen:
                continue
            if len(seen) >= max_states:
                raise ResourceError(f"Kohnert closure exceeded {max_states} states")
            seen[new] = (cols, Move(c, r, dst)) if with_parents else None
            queue.append(new)
    if not with_parents:
        return {Diagram(k) for k in seen}
    return {
        Diagram(k): None if v is None else (Diagram(v[0]), v[1])
        for k, v in seen.items()
    }


def sorted_closure(base: Diagram, max_states: int = DEFAULT_MAX_STATES) -> list[Diagram]:
    return sorted(kd_closure(base, max_states), key=lambda d: d.cells)


def is_southwest(d: Diagram) -> bool:
    cells = d.cells
    for r1, c1 in cells:
        for r2, c2 in cells:
            if r1 > r2 and c1 < c2 and (r2, c1) not in d:
                return False
    return True


def columns_inclusion_ordered(d: Diagram, c: int) -> bool:
    a, b = d.column(c), d.column(c + 1)
    return a & b == a or a & b == b
