"""Acceptance criteria; each test prints one PASS/FAIL line."""

import random
import time

import pytest

from kohnert import colswap
from kohnert import verify as v
from kohnert.perm import all_permutations
from kohnert.poly import Polynomial, divided_difference

SEED = 20261016


@pytest.fixture
def say(capsys):
    def emit(k, title, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {k}] {'PASS' if ok else 'FAIL'}  {title}: {detail}")

    return emit


def _run(perms, names, opt=None):
    fails, count = [], 0
    opt = opt or v.Options()
    for w in perms:
        for name in names:
            c, f = v.SUITES[name](w, opt)
            count += c
            fails.extend(f)
    return count, fails


def test_criterion_1_triple_equality(say):
    t0 = time.perf_counter()
    small = [w for n in range(2, 6) for w in all_permutations(n)]
    _, fails = _run(small, ["triple"])
    t_small = time.perf_counter() - t0

    t0 = time.perf_counter()
    sample = random.Random(SEED).sample(all_permutations(6), 20)
    _, fails6 = _run(sample, ["triple"])
    t_six = time.perf_counter() - t0

    ok = not fails and not fails6 and t_small < 60 and t_six < 600
    say(1, "kohnert = schubert = bjs", ok,
        f"{len(small)} perms of S2..S5 in {t_small:.2f}s (<60s), 20 random in S6 in {t_six:.2f}s (<600s)")
    assert not fails, fails[:3]
    assert not fails6, fails6[:3]
    assert t_small < 60 and t_six < 600


def test_criterion_2_round_trips(say):
    t0 = time.perf_counter()
    small = [w for n in range(1, 5) for w in all_permutations(n)]
    n_small, fails = _run(small, ["roundtrip"], v.Options(debug=True))
    n5, fails5 = _run(all_permutations(5), ["roundtrip"], v.Options(debug=False))
    elapsed = time.perf_counter() - t0
    ok = not fails and not fails5 and elapsed < 300
    say(2, "forward/backward round trips and weight equation", ok,
        f"{n_small} instances n<=4 (debug), {n5} instances S5 (release), {elapsed:.2f}s (<300s)")
    assert not fails, fails[:3]
    assert not fails5, fails5[:3]
    assert elapsed < 300


def test_criterion_3_worked_example_fixtures(say):
    _, fails = v.check_fixtures()
    say(3, "worked example fixtures", not fails,
        "super-Yamanouchi word, Rothe diagram, two compatible sequences, "
        "forward and backward on the worked pair, twelve matching edges"
        + (f"; {fails}" if fails else ""))
    assert not fails


def _random_poly(rng):
    terms = {}
    for _ in range(rng.randint(0, 6)):
        terms[tuple(rng.randint(0, 4) for _ in range(rng.randint(1, 5)))] = rng.randint(-5, 5)
    return Polynomial(terms)


def _operator_failures(samples=1000):
    rng = random.Random(SEED)
    d = divided_difference
    bad = []
    for _ in range(samples):
        f = _random_poly(rng)
        i = rng.randint(1, 3)
        j = rng.randint(i + 2, 6)
        if d(d(f, i), i) != 0:
            bad.append(f"square-zero {f} at {i}")
        if d(d(d(f, i), i + 1), i) != d(d(d(f, i + 1), i), i + 1):
            bad.append(f"braid {f} at {i}")
        if d(d(f, i), j) != d(d(f, j), i):
            bad.append(f"commutation {f} at {i},{j}")
    return bad


def test_criterion_4_property_suites(say):
    names = ["invariants", "superY", "matching", "stability"]
    exhaustive = [w for n in range(1, 5) for w in all_permutations(n)]
    rng = random.Random(SEED)
    sampled = rng.sample(all_permutations(5), 30) + rng.sample(all_permutations(6), 20)
    n1, fails = _run(exhaustive, names)
    n2, fails2 = _run(sampled, names)
    ops = _operator_failures()
    ok = not (fails or fails2 or ops)
    say(4, "property suites", ok,
        f"{n1} instances exhaustive n<=4, {n2} instances on 30+20 sampled from S5, S6, "
        f"divided-difference identities on 1000 random polynomials")
    assert not fails, fails[:3]
    assert not fails2, fails2[:3]
    assert not ops, ops[:3]


def test_criterion_5_column_swap_soundness(say):
    perms = [w for n in range(1, 5) for w in all_permutations(n)]
    opt = v.Options()
    results = {}
    for tb in colswap.TIE_BREAKS:
        fails = []
        count = 0
        for w in perms:
            c, f = v.check_colswap(w, opt, tie_break=tb)
            count += c
            fails.extend(f)
        results[tb] = (count, fails)
    count, fails = results[colswap.REPLAY_TIE_BREAK]
    plain = ", ".join(
        f"plain {tb}: {len({f.split(':')[0] for f in results[tb][1]})} failing bases"
        for tb in ("rightmost", "leftmost")
    )
    say(5, "column swap soundness (rightmost-backtrack)", not fails,
        f"{count} base/column instances n<=4, weight, bijectivity, derivation independence; "
        f"known finding: {plain}")
    assert not fails, fails[:3]
