import pytest

from kohnert import bijection as bj
from kohnert.diagrams import Diagram, kd_closure, weight
from kohnert.errors import ContractError, InputError, IntegrityError
from kohnert.perm import Permutation, all_permutations, identity, parse_permutation, rothe_diagram, value_swap
from kohnert.verify import removed_cells
from kohnert.words import CompatiblePair, Word, compatible_sequences, reduced_words

D = Diagram.from_cells
W = lambda *xs: Word(tuple(xs))  # noqa: E731
FIG5 = CompatiblePair(W(6, 4, 5, 7, 8, 6, 4, 5, 7, 2, 3, 4), W(6, 4, 4, 4, 4, 3, 2, 2, 2, 1, 1, 1))
FIG5_T = D([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (2, 7), (3, 4), (4, 3), (4, 4), (4, 6), (4, 7), (6, 3)])


@pytest.mark.parametrize("strategy", ["replay", "pairing"])
def test_forward_fig5(strategy):
    assert bj.forward(FIG5, 9, strategy=strategy) == FIG5_T


@pytest.mark.parametrize("strategy", ["replay", "pairing"])
def test_backward_fig5(w_big, strategy):
    assert bj.backward(FIG5_T, w_big, strategy=strategy) == FIG5
    assert weight(FIG5_T) == (3, 3, 1, 4, 0, 1)
    assert bj.alpha_of(FIG5_T, 9) == FIG5.alpha


def test_forward_stages(fx):
    b = fx["bijection"]
    for stage in b["stages"]:
        k = stage["prefix"]
        pair = CompatiblePair(W(*b["rho"][:k]), W(*b["alpha"][:k]))
        assert bj.forward(pair, 9) == D(tuple(x) for x in stage["cells"])


def test_small_examples():
    for r in range(1, 4):
        for a in range(1, r + 1):
            pair = CompatiblePair(W(r), W(a))
            t = bj.forward(pair, 4)
            assert t == D([(a, r)])
            assert bj.backward(t, value_swap(identity(4), r)) == pair
    pair = CompatiblePair(W(2, 1), W(2, 1))
    t = bj.forward(pair, 3)
    assert t == D([(1, 1), (2, 1)]) == rothe_diagram(Permutation((2, 3, 1)))
    assert bj.backward(t, Permutation((2, 3, 1))) == pair


def test_alpha_of():
    assert bj.alpha_of(Diagram()) == Word()
    assert bj.alpha_of(D([(5, 2)])) == W(5)


def test_errors():
    with pytest.raises(InputError):
        bj.forward(CompatiblePair(W(1, 1), W(1, 1)), 2)
    with pytest.raises(InputError):
        bj.forward(CompatiblePair(W(3), W(1)), 3)
    with pytest.raises(ContractError):
        bj.backward(D([(1, 1)]), Permutation((3, 2, 1)))
    with pytest.raises(IntegrityError):
        # right size, but not a Kohnert diagram of 132
        bj.backward(D([(1, 1)]), Permutation((1, 3, 2)), debug=True)


def test_ending_row():
    d = rothe_diagram(parse_permutation("152869347"))
    assert bj.ending_row(d, 4) == 2 and bj.ending_row(d, 7) == 4
    assert bj.ending_row(d, 3) is None


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_round_trips_debug(n):
    for w in all_permutations(n):
        kd = kd_closure(rothe_diagram(w))
        pairs = [CompatiblePair(r, a) for r in reduced_words(w) for a in compatible_sequences(r)]
        assert len(pairs) == len(kd)
        for t in kd:
            pair = bj.backward(t, w, debug=True)
            assert pair.alpha == bj.alpha_of(t, n)
            assert bj.forward(pair, n, debug=True) == t
        for pair in pairs:
            t = bj.forward(pair, n, debug=True)
            assert sorted(r for r, _ in t.cells) == sorted(pair.alpha.letters)
            assert bj.backward(t, w) == pair


@pytest.mark.parametrize("w", all_permutations(4), ids=str)
def test_removed_cells_rise_at_ascents(w):
    for t in kd_closure(rothe_diagram(w)):
        rho = bj.backward(t, w).rho.positional()
        cells = removed_cells(t, w, "replay")
        assert sorted(r for r, _ in cells) == sorted(r for r, _ in t.cells)
        for p in range(len(rho) - 1):
            if rho[p + 1] > rho[p]:
                assert cells[p + 1][0] > cells[p][0]
