"""Compatible pairs <-> Kohnert diagrams.

``forward`` builds a diagram from a compatible pair by growing the word one
letter at a time: column-swap the current diagram, then drop in the new cell.
``backward`` undoes it, peeling the lowest-then-rightmost cell each step.
Both keep the current permutation ``u`` and diagram ``T`` explicitly instead
of recursing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colswap import DerivationMemo, column_swap_kohnert
from .diagrams import DEFAULT_MAX_STATES, Diagram, kd_closure, weight
from .errors import ContractError, InputError, IntegrityError
from .perm import Permutation, identity, rothe_diagram, swap_lowers_length, value_swap
from .words import CompatiblePair, Word, min_size, word_to_permutation

# Column swap used by both directions; see colswap.column_swap_kohnert.
DEFAULT_STRATEGY = "replay"


@dataclass(frozen=True)
class BijectionState:
    u: Permutation
    t: Diagram

    def check(self, max_states: int = DEFAULT_MAX_STATES):
        if self.t not in kd_closure(rothe_diagram(self.u), max_states):
            raise IntegrityError(f"{self.t} is not a Kohnert diagram for {self.u}")


def _swap(base, t, c, strategy, memo, max_states):
    try:
        return column_swap_kohnert(base, t, c, strategy=strategy, memo=memo, max_states=max_states)
    except ContractError as exc:
        raise IntegrityError(str(exc)) from exc


def forward(
    pair: CompatiblePair,
    n: int | None = None,
    strategy: str = DEFAULT_STRATEGY,
    debug: bool = False,
    max_states: int = DEFAULT_MAX_STATES,
    memo: DerivationMemo | None = None,
) -> Diagram:
    n = n or min_size(pair.rho)
    state = BijectionState(identity(n), Diagram())
    for c, a in zip(pair.rho.letters, pair.alpha.letters):
        u = state.u
        if c >= n:
            raise InputError(f"letter {c} is too large for S_{n}")
        if swap_lowers_length(u, c):
            raise InputError(f"({pair.rho}) is not a reduced word")
        t = _swap(rothe_diagram(u), state.t, c, strategy, memo, max_states)
        if (a, c) in t:
            raise IntegrityError(f"cell {(a, c)} already occupied while building ({pair.rho})")
        state = BijectionState(value_swap(u, c), t.add((a, c)))
        if debug:
            state.check(max_states)
    return state.t


def lowest_rightmost(t: Diagram) -> tuple[int, int]:
    r = min(r for r, _ in t.cells)
    return r, max(t.row(r))


def ending_row(d: Diagram, c: int) -> int | None:
    """Lowest row of ``d`` whose rightmost cell is in column ``c``."""
    for r in range(1, d.max_row + 1):
        cols = d.row(r)
        if cols and cols[-1] == c:
            return r
    return None


def backward(
    t: Diagram,
    w: Permutation,
    strategy: str = DEFAULT_STRATEGY,
    debug: bool = False,
    max_states: int = DEFAULT_MAX_STATES,
    memo: DerivationMemo | None = None,
) -> CompatiblePair:
    if len(t) != w.length:
        raise ContractError(f"{t} has {len(t)} cells but {w} has length {w.length}")
    if debug:
        BijectionState(w, t).check(max_states)
    letters: list[int] = []
    rows: list[int] = []
    u = w
    while len(t):
        x = lowest_rightmost(t)
        row, c = x
        rothe = rothe_diagram(u)
        r_star = ending_row(rothe, c)
        if r_star is None:
            raise IntegrityError(f"no row of the Rothe diagram of {u} ends in column {c}")
        if not swap_lowers_length(u, c):
            raise IntegrityError(f"swapping {c}, {c + 1} does not shorten {u}")
        t = _swap(rothe.remove((r_star, c)), t.remove(x), c, strategy, memo, max_states)
        u = value_swap(u, c)
        letters.append(c)
        rows.append(row)
        if debug:
            BijectionState(u, t).check(max_states)
    if not u.is_identity():
        raise IntegrityError(f"diagram exhausted before reaching the identity from {w}")
    return CompatiblePair(Word.from_positional(letters), Word.from_positional(rows))


def alpha_of(t: Diagram, n: int | None = None) -> Word:
    """Weakly decreasing word with wt(T)_i copies of i, largest first."""
    wt = weight(t, n)
    return Word(tuple(i for i in range(len(wt), 0, -1) for _ in range(wt[i - 1])))


def pair_permutation(pair: CompatiblePair, n: int | None = None) -> Permutation:
    return word_to_permutation(pair.rho, n or min_size(pair.rho))
