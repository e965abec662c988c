"""Sparse integer polynomials and the three Schubert polynomial constructions."""

from __future__ import annotations

import json
from collections import defaultdict
from typing import Iterable, Mapping

from .diagrams import DEFAULT_MAX_STATES, kd_closure, weight
from .errors import InputError
from .perm import Permutation, longest_element, rothe_diagram
from .words import compatible_sequences, lex_first_reduced_word, reduced_words

Exps = tuple[int, ...]


def _trim(e: Iterable[int]) -> Exps:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def _sort_key(e: Exps):
    # graded lex, largest first
    return (-sum(e), tuple(-x for x in e))


class Polynomial:
    """Element of Z[x1, x2, ...] stored as {exponent tuple: coefficient}.

    Exponent tuples carry no trailing zeros and zero coefficients are never
    stored, so two polynomials are equal exactly when their term dicts are.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        acc: dict[Exps, int] = defaultdict(int)
        for e, c in (terms or {}).items():
            e = _trim(e)
            if any(x < 0 for x in e):
                raise InputError(f"negative exponent in {e}")
            acc[e] += int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exps, int]) -> Polynomial:
        p = cls.__new__(cls)
        p._terms = {e: c for e, c in terms.items() if c}
        p._hash = None
        return p

    @classmethod
    def one(cls) -> Polynomial:
        return cls._raw({(): 1})

    @classmethod
    def zero(cls) -> Polynomial:
        return cls._raw({})

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> Polynomial:
        return cls({tuple(exps): coeff})

    @classmethod
    def var(cls, i: int) -> Polynomial:
        return cls.monomial([0] * (i - 1) + [1])

    @property
    def terms(self) -> dict[Exps, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda t: _sort_key(t[0]))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.one() * other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Polynomial) -> Polynomial:
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial._raw(out)

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial._raw({e: c * other for e, c in self._terms.items()})
        out: dict[Exps, int] = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                k = max(len(e1), len(e2))
                e = tuple(
                    (e1[i] if i < len(e1) else 0) + (e2[i] if i < len(e2) else 0)
                    for i in range(k)
                )
                out[e] += c1 * c2
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def nvars(self) -> int:
        return max((len(e) for e in self._terms), default=0)

    def swap_vars(self, i: int) -> Polynomial:
        """s_i . f: exchange x_i and x_{i+1}."""
        out = {}
        for e, c in self._terms.items():
            e = list(e) + [0] * max(0, i + 1 - len(e))
            e[i - 1], e[i] = e[i], e[i - 1]
            out[_trim(e)] = c
        return Polynomial._raw(out)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(
                f"x{i}" if x == 1 else f"x{i}^{x}" for i, x in enumerate(e, 1) if x
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def to_json(self, n: int | None = None) -> list[dict]:
        n = max(self.nvars(), n or 0)
        return [
            {"coeff": c, "exps": list(e) + [0] * (n - len(e))} for e, c in self.items()
        ]

    @classmethod
    def from_json(cls, data: list[dict] | str) -> Polynomial:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({tuple(t["exps"]): t["coeff"] for t in data})


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial."""
    if i < 1:
        raise InputError("divided difference index must be >= 1")
    out: dict[Exps, int] = defaultdict(int)
    for e, c in f._terms.items():
        e = list(e) + [0] * max(0, i + 1 - len(e))
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        # (x^a y^b - x^b y^a) / (x - y) = sign * sum x^(lo+k) y^(hi-1-k)
        lo, hi, sign = (b, a, c) if a > b else (a, b, -c)
        for k in range(hi - lo):
            e[i - 1], e[i] = lo + k, hi - 1 - k
            out[_trim(e)] += sign
    return Polynomial._raw(out)


def staircase(n: int) -> Polynomial:
    """x1^(n-1) x2^(n-2) ... x_(n-1)."""
    return Polynomial.monomial(range(n - 1, -1, -1))


def schubert(w: Permutation) -> Polynomial:
    """Divided differences of the staircase monomial along w^-1 w0."""
    u = w.inverse() * longest_element(w.n)
    return schubert_along(w, lex_first_reduced_word(u))


def schubert_along(w: Permutation, word) -> Polynomial:
    """``schubert`` along a caller-chosen reduced word of w^-1 w0.

    Operators are applied in display order, first displayed letter first.  This
    is the order under which 𝔖_132 = x1 + x2 with our word convention; the
    reverse order produces 𝔖 of the inverse permutation's pattern instead.
    """
    f = staircase(w.n)
    for i in word.letters:
        f = divided_difference(f, i)
    return f


def bjs_polynomial(w: Permutation, max_states: int = DEFAULT_MAX_STATES) -> Polynomial:
    """Sum over reduced words rho and rho-compatible alpha of x_alpha."""
    out: dict[Exps, int] = defaultdict(int)
    for rho in reduced_words(w, max_states):
        for alpha in compatible_sequences(rho):
            e = [0] * w.n
            for a in alpha.letters:
                e[a - 1] += 1
            out[_trim(e)] += 1
    return Polynomial._raw(out)


def kohnert_polynomial(w: Permutation, max_states: int = DEFAULT_MAX_STATES) -> Polynomial:
    out: dict[Exps, int] = defaultdict(int)
    for t in kd_closure(rothe_diagram(w), max_states):
        out[_trim(weight(t))] += 1
    return Polynomial._raw(out)
