"""The column swap bijection KD(D) -> KD(s_c D).

Every cell of a base diagram is labeled with its row in that base.  A
derivation of T from the base is a list of Kohnert moves, each recorded only
as (label of the moving cell, source row, destination row).  Replaying the
same records on the column-swapped base, moving a cell that carries the
recorded label, gives the image of T.

``column_swap_pairing`` computes the same map without any search, from the
two columns of T alone; the test suites use each route to check the other.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .diagrams import DEFAULT_MAX_STATES, Diagram, _bits, _kohnert_move_cols, _trim
from .errors import ContractError, IntegrityError, ResourceError

TIE_BREAKS = ("rightmost-backtrack", "rightmost", "leftmost")
# Which candidate cell a replay step moves when several carry the label.
REPLAY_TIE_BREAK = "rightmost-backtrack"


class MoveRecord(NamedTuple):
    label: int
    src: int
    dst: int


@dataclass(frozen=True)
class Derivation:
    base: Diagram
    moves: tuple[MoveRecord, ...]
    result: Diagram
    columns: tuple[int, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "moves": [{"label": m.label, "from": m.src, "to": m.dst} for m in self.moves],
        }


def column_swap_base(d: Diagram, c: int) -> Diagram:
    if c < 1:
        raise ContractError("column index must be >= 1")
    a, b = d.column(c), d.column(c + 1)
    if a & b != a and a & b != b:
        raise ContractError(f"columns {c}, {c + 1} of {d} are not ordered by inclusion")
    cols = list(d.cols) + [0] * max(0, c + 1 - d.n_cols)
    cols[c - 1], cols[c] = b, a
    return Diagram(_trim(cols))


def _dominates(cols: tuple[int, ...], target: list[list[int]]) -> bool:
    """Per column, sorted rows of ``cols`` are componentwise >= the target's."""
    for ci, want in enumerate(target):
        have = _bits(cols[ci]) if ci < len(cols) else []
        if len(have) != len(want):
            return False
        if any(h < t for h, t in zip(have, want)):
            return False
    return True


def _labeled_path(base: Diagram, path: list[tuple[int, int, int]]) -> Derivation:
    labels = {cell: cell[0] for cell in base.cells}
    records = []
    cols = []
    for c, src, dst in path:
        lab = labels.pop((src, c))
        labels[(dst, c)] = lab
        records.append(MoveRecord(lab, src, dst))
        cols.append(c)
    result = Diagram.from_cells(labels)
    return Derivation(base, tuple(records), result, tuple(cols))


def find_derivation(
    base: Diagram, target: Diagram, max_states: int = DEFAULT_MAX_STATES
) -> Derivation:
    """A shortest sequence of Kohnert moves from ``base`` to ``target``."""
    width = max(base.n_cols, target.n_cols)
    want = [target.column_rows(c) for c in range(1, width + 1)]
    if not _dominates(base.cols, want):
        raise ContractError(f"{target} is not a Kohnert diagram of {base}")
    parent: dict[tuple[int, ...], tuple | None] = {base.cols: None}
    queue = deque([base.cols])
    goal = target.cols
    while queue:
        cols = queue.popleft()
        if cols == goal:
            break
        top = max((m.bit_length() for m in cols), default=0)
        for r in range(2, top + 1):
            move = _kohnert_move_cols(cols, r)
            if move is None:
                continue
            new, c, dst = move
            new = _trim(new)
            if new in parent or not _dominates(new, want):
                continue
            if len(parent) >= max_states:
                raise ResourceError(f"derivation search exceeded {max_states} states")
            parent[new] = (cols, (c, r, dst))
            queue.append(new)
    if goal not in parent:
        raise ContractError(f"{target} is not a Kohnert diagram of {base}")
    path = []
    node = goal
    while parent[node] is not None:
        node, step = parent[node]
        path.append(step)
    path.reverse()
    return _labeled_path(base, path)


def all_derivations(base: Diagram, target: Diagram) -> Iterator[Derivation]:
    """Every move sequence from ``base`` to ``target``; exponential, for tests."""
    width = max(base.n_cols, target.n_cols)
    want = [target.column_rows(c) for c in range(1, width + 1)]
    path: list[tuple[int, int, int]] = []

    def rec(cols):
        if cols == target.cols:
            yield _labeled_path(base, path)
            return
        top = max((m.bit_length() for m in cols), default=0)
        for r in range(2, top + 1):
            move = _kohnert_move_cols(cols, r)
            if move is None:
                continue
            new, c, dst = move
            new = _trim(new)
            if not _dominates(new, want):
                continue
            path.append((c, r, dst))
            yield from rec(new)
            path.pop()

    if _dominates(base.cols, want):
        yield from rec(base.cols)


def replay_steps(base: Diagram, moves, tie_break: str | None = None) -> list[tuple[int, int, int]]:
    """Replay labeled move records on ``base``; return the (col, src, dst) steps taken.

    Cells of ``base`` are labeled by their row.  Each record moves a cell in
    row ``src`` carrying ``label`` to row ``dst`` of its column, which must be
    empty.  When several cells qualify:

    ``rightmost``            take the rightmost one
    ``leftmost``             take the leftmost one
    ``rightmost-backtrack``  take the rightmost one, but if a later record then
                             has no candidate, retry with the next one leftward
    """
    tie_break = tie_break or REPLAY_TIE_BREAK
    if tie_break not in TIE_BREAKS:
        raise ValueError(f"unknown tie-break {tie_break!r}")
    labels = {cell: cell[0] for cell in base.cells}
    moves = list(moves)
    backtrack = tie_break == "rightmost-backtrack"
    taken: list[tuple[int, int, int]] = []

    def candidates(lab, src, dst):
        cands = sorted(
            c for (r, c), v in labels.items()
            if r == src and v == lab and (dst, c) not in labels
        )
        if tie_break != "leftmost":
            cands.reverse()
        return cands if backtrack else cands[:1]

    def step(k: int) -> bool:
        if k == len(moves):
            return True
        lab, src, dst = moves[k]
        for c in candidates(lab, src, dst):
            labels[(dst, c)] = labels.pop((src, c))
            taken.append((c, src, dst))
            if step(k + 1):
                return True
            taken.pop()
            labels[(src, c)] = labels.pop((dst, c))
        return False

    if not step(0):
        raise IntegrityError(f"labeled moves {moves} cannot be replayed on {base}")
    return taken


def replay(base: Diagram, moves, tie_break: str | None = None) -> Diagram:
    """The diagram reached by ``replay_steps``."""
    cols = list(base.cols)
    for c, src, dst in replay_steps(base, moves, tie_break):
        cols += [0] * max(0, c - len(cols))
        cols[c - 1] = cols[c - 1] & ~(1 << (src - 1)) | (1 << (dst - 1))
    return Diagram(_trim(cols))


def column_swap_pairing(t: Diagram, c: int) -> Diagram:
    """Derivation-free column swap by bracket pairing of columns c, c+1.

    Rows occupied in both columns stay put.  Reading the remaining rows top to
    bottom, a cell in column c opens a bracket and a cell in column c+1 closes
    one.  The unmatched rows read as m closers then k openers; they are
    rewritten as k closers then m openers.  The map preserves row weights and
    is its own inverse.
    """
    a, b = t.column(c), t.column(c + 1)
    top = max(a.bit_length(), b.bit_length())
    stack: list[int] = []
    closers: list[int] = []
    for r in range(top, 0, -1):
        in_a, in_b = a >> (r - 1) & 1, b >> (r - 1) & 1
        if in_a and not in_b:
            stack.append(r)
        elif in_b and not in_a:
            if stack:
                stack.pop()
            else:
                closers.append(r)
    unmatched = closers + stack  # top to bottom
    k = len(stack)
    for i, r in enumerate(unmatched):
        bit = 1 << (r - 1)
        a &= ~bit
        b &= ~bit
        if i < k:
            b |= bit
        else:
            a |= bit
    cols = list(t.cols) + [0] * max(0, c + 1 - t.n_cols)
    cols[c - 1], cols[c] = a, b
    return Diagram(_trim(cols))


class DerivationMemo:
    """Cache of derivations keyed by (base, target)."""

    def __init__(self):
        self._memo: dict[tuple[Diagram, Diagram], Derivation] = {}

    def get(self, base: Diagram, target: Diagram, max_states: int = DEFAULT_MAX_STATES) -> Derivation:
        key = (base, target)
        d = self._memo.get(key)
        if d is None:
            d = self._memo[key] = find_derivation(base, target, max_states)
        return d


def column_swap_kohnert(
    base: Diagram,
    t: Diagram,
    c: int,
    strategy: str = "replay",
    tie_break: str | None = None,
    memo: DerivationMemo | None = None,
    max_states: int = DEFAULT_MAX_STATES,
) -> Diagram:
    """Image of ``t`` in KD(column_swap_base(base, c)); preserves row weights.

    ``replay`` finds a derivation of ``t`` from ``base`` and replays its
    labeled moves on the swapped base; ``pairing`` uses
    ``column_swap_pairing`` and never searches.
    """
    swapped = column_swap_base(base, c)
    if strategy == "pairing":
        return column_swap_pairing(t, c)
    if strategy != "replay":
        raise ValueError(f"unknown column swap strategy {strategy!r}")
    if t == base:
        return swapped
    deriv = memo.get(base, t, max_states) if memo else find_derivation(base, t, max_states)
    return replay(swapped, deriv.moves, tie_break)
