"""Permutations in one-line notation and their Rothe diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator

from .diagrams import Diagram
from .errors import ContractError, InputError

DEFAULT_MAX_N = 12


@dataclass(frozen=True, slots=True)
class Permutation:
    """One-line notation: ``entries[i - 1]`` is w_i."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.entries, tuple):
            object.__setattr__(self, "entries", tuple(self.entries))
        if sorted(self.entries) != list(range(1, len(self.entries) + 1)):
            raise InputError(f"{list(self.entries)} is not a permutation of 1..{len(self.entries)}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        """w_i, 1-based."""
        return self.entries[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __lt__(self, other: Permutation) -> bool:
        return self.entries < other.entries

    @property
    def length(self) -> int:
        e = self.entries
        return sum(1 for i in range(len(e)) for j in range(i + 1, len(e)) if e[i] > e[j])

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.entries, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def __mul__(self, other: Permutation) -> Permutation:
        """Function composition: (u * v)(i) = u(v(i))."""
        if self.n != other.n:
            raise InputError("permutations of different sizes")
        return Permutation(tuple(self.entries[v - 1] for v in other.entries))

    def embed(self, n: int) -> Permutation:
        """The same permutation regarded as an element of S_n, n >= self.n."""
        if n < self.n:
            raise InputError(f"cannot embed S_{self.n} into S_{n}")
        return Permutation(self.entries + tuple(range(self.n + 1, n + 1)))

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.entries, 1))

    def descents(self) -> list[int]:
        """Positions i with w_i > w_{i+1}."""
        e = self.entries
        return [i for i in range(1, len(e)) if e[i - 1] > e[i]]

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(map(str, self.entries))
        return ",".join(map(str, self.entries))


def make_permutation(entries: Iterable[int], max_n: int = DEFAULT_MAX_N) -> Permutation:
    entries = tuple(int(x) for x in entries)
    if len(entries) > max_n:
        raise InputError(f"n = {len(entries)} exceeds the configured maximum {max_n}")
    return Permutation(entries)


def parse_permutation(text: str, max_n: int = DEFAULT_MAX_N) -> Permutation:
    """Accepts "152869347" (n <= 9) or "1,5,2,8,6,9,3,4,7"."""
    text = text.strip()
    try:
        if "," in text:
            entries = [int(x) for x in text.split(",")]
        elif text.isdigit():
            entries = [int(ch) for ch in text]
        else:
            raise ValueError
    except ValueError:
        raise InputError(f"cannot parse permutation {text!r}") from None
    return make_permutation(entries, max_n)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest_element(n: int) -> Permutation:
    if n < 1:
        raise InputError("n must be at least 1")
    return Permutation(tuple(range(n, 0, -1)))


def all_permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]


def rothe_diagram(w: Permutation) -> Diagram:
    e = w.entries
    return Diagram.from_cells(
        (i, e[j - 1])
        for i in range(1, len(e) + 1)
        for j in range(i + 1, len(e) + 1)
        if e[i - 1] > e[j - 1]
    )


def value_swap(w: Permutation, c: int) -> Permutation:
    """Exchange the values c and c+1 in the one-line notation of w."""
    if not 1 <= c < w.n:
        raise ContractError(f"swap index {c} out of range for S_{w.n}")
    return Permutation(tuple(c + 1 if v == c else c if v == c + 1 else v for v in w.entries))


def position_swap(w: Permutation, i: int) -> Permutation:
    """Exchange the entries in positions i and i+1."""
    if not 1 <= i < w.n:
        raise ContractError(f"swap index {i} out of range for S_{w.n}")
    e = list(w.entries)
    e[i - 1], e[i] = e[i], e[i - 1]
    return Permutation(tuple(e))


def swap_lowers_length(w: Permutation, c: int) -> bool:
    """True iff value_swap(w, c) has length one less than w (c+1 precedes c)."""
    e = w.entries
    return e.index(c + 1) < e.index(c)

