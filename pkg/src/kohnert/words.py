"""Reduced words, super-Yamanouchi words, matchings and compatible sequences.

Words are stored in display order, left to right, and indexed right to left:
position ``p`` (1-based) names the ``p``-th letter from the right, so for a
word of length l, ``word.at(l)`` is the first displayed letter and
``word.at(1)`` the last.  A word evaluates to a permutation by starting from
the identity and exchanging the values ``rho_p, rho_p + 1`` for
``p = l, l-1, ..., 1``, i.e. reading the display left to right.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .diagrams import DEFAULT_MAX_STATES
from .errors import ContractError, InputError, IntegrityError, ResourceError
from .perm import Permutation, identity, rothe_diagram, swap_lowers_length, value_swap


@dataclass(frozen=True, slots=True)
class Word:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        if any(a < 1 for a in self.letters):
            raise InputError(f"word letters must be positive: {self.letters}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __lt__(self, other: Word) -> bool:
        return self.letters < other.letters

    def at(self, p: int) -> int:
        """The letter in position ``p`` (1 = rightmost)."""
        if not 1 <= p <= len(self.letters):
            raise IndexError(p)
        return self.letters[-p]

    def positional(self) -> list[int]:
        """Letters by position: element ``p - 1`` is ``at(p)``."""
        return list(reversed(self.letters))

    @classmethod
    def from_positional(cls, letters: Iterable[int]) -> Word:
        return cls(tuple(reversed(list(letters))))

    def drop_first_position(self) -> Word:
        """The word with position 1 removed (the last displayed letter)."""
        return Word(self.letters[:-1])

    def __str__(self) -> str:
        return ",".join(map(str, self.letters))

    def to_json(self) -> dict:
        return {"letters": list(self.letters)}


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return Word()
    try:
        return Word(tuple(int(x) for x in text.split(",")))
    except ValueError:
        raise InputError(f"cannot parse word {text!r}") from None


@dataclass(frozen=True, slots=True)
class CompatiblePair:
    rho: Word
    alpha: Word

    def __post_init__(self):
        if len(self.rho) != len(self.alpha):
            raise InputError("rho and alpha have different lengths")
        if not is_compatible(self.rho, self.alpha):
            raise InputError(f"alpha = ({self.alpha}) is not compatible with rho = ({self.rho})")

    def to_json(self) -> dict:
        return {"rho": list(self.rho.letters), "alpha": list(self.alpha.letters)}


def is_compatible(rho: Word, alpha: Word) -> bool:
    r, a = rho.positional(), alpha.positional()
    if len(r) != len(a):
        return False
    for p in range(len(r)):
        if a[p] > r[p] or a[p] < 1:
            return False
        if p + 1 < len(r):
            if a[p + 1] < a[p]:
                return False
            if r[p + 1] > r[p] and a[p + 1] <= a[p]:
                return False
    return True


def word_to_permutation(rho: Word, n: int) -> Permutation:
    w = identity(n)
    for c in rho.letters:
        if c >= n:
            raise InputError(f"letter {c} is too large for S_{n}")
        w = value_swap(w, c)
    return w


def is_reduced(rho: Word, n: int) -> bool:
    w = identity(n)
    for c in rho.letters:
        if c >= n:
            raise InputError(f"letter {c} is too large for S_{n}")
        if swap_lowers_length(w, c):
            return False
        w = value_swap(w, c)
    return True


def min_size(rho: Word) -> int:
    """Smallest n with every letter of ``rho`` below n."""
    return max(rho.letters, default=0) + 1


def reduced_words(w: Permutation, max_states: int = DEFAULT_MAX_STATES) -> list[Word]:
    """All reduced words of ``w``, sorted in display order."""
    words = sorted(_reduced_words(w.entries, max_states))
    return [Word(x) for x in words]


def _reduced_words(entries: tuple[int, ...], max_states: int) -> list[tuple[int, ...]]:
    memo: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    total = 0

    def rec(e: tuple[int, ...]) -> list[tuple[int, ...]]:
        nonlocal total
        if e in memo:
            return memo[e]
        w = Permutation(e)
        out: list[tuple[int, ...]] = []
        ends = [c for c in range(1, w.n) if swap_lowers_length(w, c)]
        if not ends:
            out = [()]
        for c in ends:
            for prefix in rec(value_swap(w, c).entries):
                out.append(prefix + (c,))
        total += len(out)
        if total > max_states:
            raise ResourceError(f"reduced word enumeration exceeded {max_states} states")
        memo[e] = out
        return out

    return rec(entries)


def lex_first_reduced_word(w: Permutation) -> Word:
    """Lexicographically smallest reduced word of ``w`` in display order.

    The first displayed letter is processed first, so it must be a position
    descent of ``w`` (undoing it from the right); the smallest such descent is
    always extendable.
    """
    e = list(w.entries)
    out = []
    while True:
        for i in range(len(e) - 1):
            if e[i] > e[i + 1]:
                e[i], e[i + 1] = e[i + 1], e[i]
                out.append(i + 1)
                break
        else:
            return Word(tuple(out))


def super_yamanouchi(w: Permutation) -> Word:
    """Fill row r of the Rothe diagram with r, r+1, ... and read top row first."""
    d = rothe_diagram(w)
    letters: list[int] = []
    for r in range(d.max_row, 0, -1):
        letters.extend(range(r, r + len(d.row(r))))
    return Word(tuple(letters))


def super_yamanouchi_labels(w: Permutation) -> dict[tuple[int, int], int]:
    """Cell -> label in the super-Yamanouchi filling of the Rothe diagram."""
    d = rothe_diagram(w)
    labels = {}
    for r in range(1, d.max_row + 1):
        for k, c in enumerate(d.row(r)):
            labels[(r, c)] = r + k
    return labels


def increasing_runs(letters: tuple[int, ...]) -> list[tuple[int, ...]]:
    runs: list[list[int]] = []
    for a in letters:
        if runs and a > runs[-1][-1]:
            runs[-1].append(a)
        else:
            runs.append([a])
    return [tuple(r) for r in runs]


def is_super_yamanouchi(pi: Word) -> bool:
    runs = increasing_runs(pi.letters)
    for run in runs:
        if any(b != a + 1 for a, b in zip(run, run[1:])):
            return False
    # runs are displayed highest-index first, so minima must decrease left to right
    mins = [run[0] for run in runs]
    return all(a > b for a, b in zip(mins, mins[1:]))


@dataclass(frozen=True, slots=True)
class Matching:
    """``p[i - 1]`` is the position of rho matched to position ``i`` of pi."""

    p: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.p[i - 1]

    def __len__(self) -> int:
        return len(self.p)


def match_to_super_yamanouchi(rho: Word, pi: Word, n: int | None = None) -> Matching:
    if len(rho) != len(pi):
        raise ContractError("words have different lengths")
    n = n or max(min_size(rho), min_size(pi))
    if not is_reduced(rho, n):
        raise ContractError(f"({rho}) is not a reduced word")
    if not is_super_yamanouchi(pi):
        raise ContractError(f"({pi}) is not super-Yamanouchi")
    if word_to_permutation(rho, n) != word_to_permutation(pi, n):
        raise ContractError("words are reduced words of different permutations")

    ell = len(rho)
    r = rho.positional()
    paired = [False] * (ell + 1)
    p = [0] * ell
    for i in range(ell, 0, -1):
        k = pi.at(i)
        for j in range(ell, 0, -1):
            if paired[j]:
                continue
            if r[j - 1] == k:
                paired[j] = True
                p[i - 1] = j
                break
            if r[j - 1] == k - 1:
                k -= 1
        else:
            raise IntegrityError(f"matching of ({rho}) to ({pi}) failed at position {i}")
    return Matching(tuple(p))


def compatible_sequences(rho: Word) -> list[Word]:
    """All rho-compatible words, sorted in display order."""
    r = rho.positional()
    ell = len(r)
    if not ell:
        return [Word()]
    # ub[p]: largest value alpha_p can take and still be extended upward
    ub = [0] * ell
    ub[-1] = r[-1]
    for p in range(ell - 2, -1, -1):
        step = 1 if r[p + 1] > r[p] else 0
        ub[p] = min(r[p], ub[p + 1] - step)
    out: list[Word] = []
    alpha = [0] * ell

    def dfs(p: int, lo: int):
        for a in range(lo, ub[p] + 1):
            alpha[p] = a
            if p + 1 == ell:
                out.append(Word.from_positional(alpha))
            else:
                dfs(p + 1, a + 1 if r[p + 1] > r[p] else a)

    dfs(0, 1)
    out.sort()
    return out

