"""Verification suites run by ``kohnert verify``.

Every suite is a function of one permutation returning ``(instances,
failures)``; suites never raise on a mathematical failure, they report it.
Permutations are independent, so a process pool can spread them out.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cache
from importlib import resources

from . import bijection, colswap
from .diagrams import (
    DEFAULT_MAX_STATES,
    Diagram,
    columns_inclusion_ordered,
    is_southwest,
    kd_closure,
    weight,
)
from .errors import KohnertError
from .perm import Permutation, all_permutations, rothe_diagram, swap_lowers_length, value_swap
from .poly import bjs_polynomial, kohnert_polynomial, schubert
from .words import (
    CompatiblePair,
    Word,
    compatible_sequences,
    is_super_yamanouchi,
    match_to_super_yamanouchi,
    reduced_words,
    super_yamanouchi,
    super_yamanouchi_labels,
    word_to_permutation,
)

CHECKS = (
    "triple",
    "stability",
    "roundtrip",
    "invariants",
    "colswap",
    "superY",
    "matching",
    "fixtures",
)


@dataclass
class Options:
    max_states: int = DEFAULT_MAX_STATES
    debug: bool = False
    strategy: str = bijection.DEFAULT_STRATEGY
    # derivation-independence is exponential; only bases this small are enumerated
    max_derivation_cells: int = 8


@cache
def fixtures() -> dict:
    text = resources.files("kohnert").joinpath("data/fixtures.json").read_text()
    return json.loads(text)


def _cells(cells) -> Diagram:
    return Diagram.from_cells(tuple(x) for x in cells)


# -- suites ------------------------------------------------------------------


def check_triple(w: Permutation, opt: Options):
    k = kohnert_polynomial(w, opt.max_states)
    s = schubert(w)
    b = bjs_polynomial(w, opt.max_states)
    if k == s == b:
        return 1, []
    return 1, [f"{w}: kohnert={k} schubert={s} bjs={b}"]


def check_stability(w: Permutation, opt: Options):
    s, s1 = schubert(w), schubert(w.embed(w.n + 1))
    return 1, [] if s == s1 else [f"{w}: {s} != {s1} after embedding"]


def check_roundtrip(w: Permutation, opt: Options):
    n = w.n
    fails = []
    count = 0
    memo = colswap.DerivationMemo()
    closure = kd_closure(rothe_diagram(w), opt.max_states)
    kw = dict(strategy=opt.strategy, debug=opt.debug, max_states=opt.max_states, memo=memo)
    for t in sorted(closure):
        count += 1
        try:
            pair = bijection.backward(t, w, **kw)
            if word_to_permutation(pair.rho, n) != w:
                fails.append(f"{w}: backward({t}) word {pair.rho} not in Red(w)")
            elif pair.alpha != bijection.alpha_of(t, n):
                fails.append(f"{w}: backward({t}) alpha {pair.alpha} != alpha(T)")
            elif bijection.forward(pair, n, **kw) != t:
                fails.append(f"{w}: forward(backward({t})) != T")
            else:
                fails.extend(_removal_order(t, pair, w))
        except KohnertError as exc:
            fails.append(f"{w}: backward({t}) raised {exc!r}")
    for rho in reduced_words(w, opt.max_states):
        for alpha in compatible_sequences(rho):
            count += 1
            pair = CompatiblePair(rho, alpha)
            try:
                t = bijection.forward(pair, n, **kw)
                if t not in closure:
                    fails.append(f"{w}: forward({rho}; {alpha}) = {t} not in KD(w)")
                elif sorted(r for r, _ in t.cells) != sorted(alpha.letters):
                    fails.append(f"{w}: forward({rho}; {alpha}) breaks the weight equation")
                elif bijection.backward(t, w, **kw) != pair:
                    fails.append(f"{w}: backward(forward({rho}; {alpha})) differs")
            except KohnertError as exc:
                fails.append(f"{w}: forward({rho}; {alpha}) raised {exc!r}")
    return count, fails


def removed_cells(t: Diagram, w: Permutation, strategy: str | None = None) -> list[tuple[int, int]]:
    """Cells peeled by ``backward`` in order (position 1 first)."""
    out = []
    u = w
    while len(t):
        x = bijection.lowest_rightmost(t)
        c = x[1]
        rothe = rothe_diagram(u)
        base = rothe.remove((bijection.ending_row(rothe, c), c))
        t = colswap.column_swap_kohnert(base, t.remove(x), c, strategy=strategy or "pairing")
        u = value_swap(u, c)
        out.append(x)
    return out


def _removal_order(t: Diagram, pair: CompatiblePair, w: Permutation) -> list[str]:
    cells = removed_cells(t, w)
    rho = pair.rho.positional()
    for p in range(len(rho) - 1):
        if rho[p + 1] > rho[p] and not cells[p + 1][0] > cells[p][0]:
            return [f"{w}: removed cells {cells[p]}, {cells[p + 1]} not strictly rising at an ascent"]
    return []


def lem_end_pairs(d: Diagram) -> list[tuple[int, int]]:
    """Columns c (no row ends there) with the next column c' that its rows reach."""
    out = []
    ends = {d.row(r)[-1] for r in range(1, d.max_row + 1) if d.row(r)}
    for c in range(1, d.n_cols + 1):
        rows = d.column_rows(c)
        if not rows or c in ends:
            continue
        c2 = min(cc for r in rows for cc in d.row(r) if cc > c)
        out.append((c, c2))
    return out


def check_invariants(w: Permutation, opt: Options):
    fails = []
    d = rothe_diagram(w)
    n = w.n
    if len(d) != w.length:
        fails.append(f"{w}: Rothe diagram has {len(d)} cells, length {w.length}")
    if not is_southwest(d):
        fails.append(f"{w}: Rothe diagram not southwest")
    for c in range(1, n):
        if not columns_inclusion_ordered(d, c):
            fails.append(f"{w}: columns {c},{c + 1} not inclusion-ordered")
    for c in range(1, n):
        if swap_lowers_length(w, c):
            r = bijection.ending_row(d, c)
            if r is None or colswap.column_swap_base(d.remove((r, c)), c) != rothe_diagram(value_swap(w, c)):
                fails.append(f"{w}: Rothe identity fails at c={c}")

    ends = {d.row(r)[-1] for r in range(1, d.max_row + 1) if d.row(r)}
    pairs = lem_end_pairs(d)
    for c, c2 in pairs:
        for r in d.column_rows(c):
            if (r, c2) not in d or any((r, cc) in d for cc in range(c + 1, c2)):
                fails.append(f"{w}: column pair ({c},{c2}) not aligned in row {r}")
    closure = kd_closure(d, opt.max_states)
    counts = [d.column(c).bit_count() for c in range(1, d.n_cols + 1)]
    for t in closure:
        if [t.column(c).bit_count() for c in range(1, d.n_cols + 1)] != counts or t.n_cols > d.n_cols:
            fails.append(f"{w}: column counts of {t} differ from the base")
        for c in range(1, t.n_cols + 1):
            for k, r in enumerate(t.column_rows(c), 1):
                if r > c + k - 1:
                    fails.append(f"{w}: {t} has its {k}th cell of column {c} in row {r}")
        if len(t) and bijection.lowest_rightmost(t)[1] not in ends:
            fails.append(f"{w}: lowest-rightmost cell of {t} is in a column no row ends in")
        for c, c2 in pairs:
            a, b = t.column(c), t.column(c2)
            for r in range(1, d.max_row + 1):
                mask = (1 << r) - 1
                if (a & mask).bit_count() > (b & mask).bit_count():
                    fails.append(f"{w}: {t} breaks the prefix inequality for columns {c},{c2} at row {r}")
                    break
    npairs = sum(len(compatible_sequences(rho)) for rho in reduced_words(w, opt.max_states))
    if npairs != len(closure):
        fails.append(f"{w}: {npairs} compatible pairs vs {len(closure)} Kohnert diagrams")
    return len(closure) + 1, fails


def colswap_instances(w: Permutation):
    """(kind, base, c): the Rothe base at every c, and each deletion used by backward."""
    d = rothe_diagram(w)
    out = [("rothe", d, c) for c in range(1, w.n)]
    for c in range(1, w.n):
        r = bijection.ending_row(d, c)
        if r is not None:
            out.append(("deleted", d.remove((r, c)), c))
    return out


def check_colswap(w: Permutation, opt: Options, tie_break: str | None = None):
    fails = []
    count = 0
    for kind, base, c in colswap_instances(w):
        count += 1
        tag = f"{w} {kind} c={c}"
        if not columns_inclusion_ordered(base, c):
            fails.append(f"{tag}: columns not inclusion-ordered")
            continue
        swapped = colswap.column_swap_base(base, c)
        src = kd_closure(base, opt.max_states)
        dst = kd_closure(swapped, opt.max_states)
        images = {}
        for t in src:
            try:
                deriv = colswap.find_derivation(base, t, opt.max_states)
                img = colswap.replay(swapped, deriv.moves, tie_break)
            except KohnertError as exc:
                fails.append(f"{tag}: replay of {t} raised {exc!r}")
                continue
            images[t] = img
            if weight(img) != weight(t):
                fails.append(f"{tag}: weight of {t} not preserved")
            if len(base) <= opt.max_derivation_cells:
                outs = set()
                for der in colswap.all_derivations(base, t):
                    try:
                        outs.add(colswap.replay(swapped, der.moves, tie_break))
                    except KohnertError:
                        outs.add(None)
                if len(outs) != 1:
                    fails.append(f"{tag}: {t} has derivation-dependent images")
        if len(set(images.values())) != len(images) or set(images.values()) != dst:
            fails.append(f"{tag}: replay is not a bijection onto KD(s_c base)")
    return count, fails


def check_super_yamanouchi(w: Permutation, opt: Options):
    fails = []
    pi = super_yamanouchi(w)
    if word_to_permutation(pi, w.n) != w or not is_super_yamanouchi(pi):
        fails.append(f"{w}: super_yamanouchi gives {pi}")
    red = reduced_words(w, opt.max_states)
    sy = [rho for rho in red if is_super_yamanouchi(rho)]
    if sy != [pi]:
        fails.append(f"{w}: super-Yamanouchi reduced words {[str(x) for x in sy]}")
    labels = super_yamanouchi_labels(w)
    d = rothe_diagram(w)
    for c in range(1, d.n_cols + 1):
        col = [labels[(r, c)] for r in d.column_rows(c)]
        if col != list(range(c, c + len(col))):
            fails.append(f"{w}: column {c} of the filling reads {col}")
    fx = fixtures()
    if str(w) == fx["permutation"] and list(pi.letters) != fx["super_yamanouchi"]:
        fails.append(f"{w}: fixture super-Yamanouchi word differs")
    return len(red), fails


def check_matching(w: Permutation, opt: Options):
    fails = []
    pi = super_yamanouchi(w)
    red = reduced_words(w, opt.max_states)
    for rho in red:
        try:
            m = match_to_super_yamanouchi(rho, pi, w.n)
        except KohnertError as exc:
            fails.append(f"{w}: matching ({rho}) raised {exc!r}")
            continue
        if sorted(m.p) != list(range(1, len(rho) + 1)):
            fails.append(f"{w}: matching of ({rho}) is not a bijection")
        for i in range(1, len(rho) + 1):
            if rho.at(m[i]) > pi.at(i):
                fails.append(f"{w}: rho_p{i} > pi_{i} for ({rho})")
            if i < len(rho) and pi.at(i + 1) < pi.at(i) and not m[i + 1] > m[i]:
                fails.append(f"{w}: descent at {i} of pi not respected for ({rho})")
    fx = fixtures()
    if str(w) == fx["permutation"]:
        m = match_to_super_yamanouchi(Word(tuple(fx["matching"]["rho"])), pi, w.n)
        if list(m.p) != fx["matching"]["p"]:
            fails.append(f"{w}: fixture matching differs: {m.p}")
    return len(red), fails


def check_fixtures(w: Permutation | None = None, opt: Options | None = None):
    """Worked-example fixtures; independent of the scope permutation."""
    opt = opt or Options()
    fx = fixtures()
    fails = []
    from .perm import parse_permutation

    w0 = parse_permutation(fx["permutation"])
    rothe = rothe_diagram(w0)
    panels = [_cells(p) for p in fx["kohnert_diagrams"]]
    if rothe != panels[0]:
        fails.append("Rothe diagram of 152869347 differs from the first panel")
    if list(weight(rothe)) != fx["rothe_weight"]:
        fails.append("Rothe weight differs")
    closure = kd_closure(rothe, opt.max_states)
    for i, p in enumerate(panels):
        if p not in closure:
            fails.append(f"panel {i + 1} is not a Kohnert diagram")
    if list(super_yamanouchi(w0).letters) != fx["super_yamanouchi"]:
        fails.append("super-Yamanouchi word differs")
    rho = Word(tuple(fx["compatible"]["rho"]))
    sols = [list(a.letters) for a in compatible_sequences(rho)]
    if sols != fx["compatible"]["solutions"]:
        fails.append(f"compatible sequences differ: {sols}")
    b = fx["bijection"]
    rho, alpha = tuple(b["rho"]), tuple(b["alpha"])
    for stage in b["stages"]:
        k = stage["prefix"]
        pair = CompatiblePair(Word(rho[:k]), Word(alpha[:k]))
        got = bijection.forward(pair, w0.n, strategy=opt.strategy)
        if got != _cells(stage["cells"]):
            fails.append(f"forward prefix {k} gives {got}")
    final = _cells(b["stages"][-1]["cells"])
    if list(weight(final)) != b["weight"]:
        fails.append("final diagram weight differs")
    back = bijection.backward(final, w0, strategy=opt.strategy)
    if list(back.rho.letters) != b["rho"] or list(back.alpha.letters) != b["alpha"]:
        fails.append(f"backward gives ({back.rho}; {back.alpha})")
    m = fx["matching"]
    got = match_to_super_yamanouchi(Word(tuple(m["rho"])), super_yamanouchi(w0), w0.n)
    if list(got.p) != m["p"]:
        fails.append(f"matching differs: {got.p}")
    return 1, fails


SUITES = {
    "triple": check_triple,
    "stability": check_stability,
    "roundtrip": check_roundtrip,
    "invariants": check_invariants,
    "colswap": check_colswap,
    "superY": check_super_yamanouchi,
    "matching": check_matching,
}


# -- driver ------------------------------------------------------------------


@dataclass
class CheckResult:
    name: str
    instances: int = 0
    failures: list[tuple[tuple, str]] = field(default_factory=list)


@dataclass
class VerifyReport:
    scope: str
    checks: list[CheckResult]
    permutations: int
    wall_time: float

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if not c.failures)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if c.failures)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def counterexample(self) -> str | None:
        fails = [f for c in self.checks for f in c.failures]
        return min(fails)[1] if fails else None

    def lines(self) -> list[str]:
        out = [f"scope: {self.scope} ({self.permutations} permutations)"]
        for c in self.checks:
            status = "PASS" if not c.failures else f"FAIL ({len(c.failures)})"
            out.append(f"{c.name:<11} {c.instances:>8} instances  {status}")
        out.append(f"result: {'pass' if self.ok else 'fail'}")
        if self.counterexample:
            out.append(f"counterexample: {self.counterexample}")
        return out

    def to_json(self) -> dict:
        return {
            "scope": self.scope,
            "permutations": self.permutations,
            "checks": [
                {"name": c.name, "instances": c.instances, "failures": len(c.failures)}
                for c in self.checks
            ],
            "passed": self.passed,
            "failed": self.failed,
            "counterexample": self.counterexample,
        }


def _sort_key(w: Permutation) -> tuple:
    return (w.n, w.length, w.entries)


def _run_unit(args):
    entries, names, opt = args
    w = Permutation(entries)
    out = {}
    for name in names:
        try:
            out[name] = SUITES[name](w, opt)
        except KohnertError as exc:
            out[name] = (1, [f"{w}: {name} raised {exc!r}"])
    return entries, out


def parse_checks(text: str) -> list[str]:
    if text == "all":
        return list(CHECKS)
    names = [x.strip() for x in text.split(",") if x.strip()]
    bad = [x for x in names if x not in CHECKS]
    if bad:
        from .errors import InputError

        raise InputError(f"unknown checks {bad}; choose from {', '.join(CHECKS)}")
    return names


def verify(
    perms: list[Permutation],
    checks: list[str],
    scope: str,
    opt: Options | None = None,
    workers: int = 1,
) -> VerifyReport:
    opt = opt or Options()
    start = time.perf_counter()
    results = {name: CheckResult(name) for name in checks}
    per_w = [n for n in checks if n in SUITES]
    units = [(w.entries, per_w, opt) for w in perms]
    if per_w:
        if workers > 1 and len(units) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                outs = list(pool.map(_run_unit, units, chunksize=max(1, len(units) // (4 * workers))))
        else:
            outs = [_run_unit(u) for u in units]
        for entries, out in outs:
            key = _sort_key(Permutation(entries))
            for name, (count, fails) in out.items():
                results[name].instances += count
                results[name].failures.extend((key, f) for f in fails)
    if "fixtures" in results:
        count, fails = check_fixtures(None, opt)
        results["fixtures"].instances += count
        results["fixtures"].failures.extend(((0,), f) for f in fails)
    return VerifyReport(
        scope=scope,
        checks=[results[n] for n in checks],
        permutations=len(perms),
        wall_time=time.perf_counter() - start,
    )


def scope_all(n: int) -> list[Permutation]:
    return sorted(all_permutations(n), key=_sort_key)
