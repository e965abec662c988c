import itertools

import pytest
from hypothesis import given, strategies as st

from kohnert.diagrams import Diagram
from kohnert.errors import ContractError, InputError
from kohnert.perm import (
    Permutation,
    all_permutations,
    identity,
    longest_element,
    make_permutation,
    parse_permutation,
    position_swap,
    rothe_diagram,
    swap_lowers_length,
    value_swap,
)

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def test_make_permutation():
    w = make_permutation([1, 5, 2, 8, 6, 9, 3, 4, 7])
    assert w == parse_permutation("152869347")
    assert str(w) == "152869347"
    e = make_permutation([1, 2, 3])
    assert e.is_identity() and e.length == 0
    with pytest.raises(InputError):
        make_permutation([1, 5, 5])


def test_parse():
    assert parse_permutation("1,3,2") == Permutation((1, 3, 2))
    assert str(make_permutation(range(10, 0, -1))) == "10,9,8,7,6,5,4,3,2,1"
    for bad in ("", "12a", "1,,2", "0", "13"):
        with pytest.raises(InputError):
            parse_permutation(bad)
    with pytest.raises(InputError):
        parse_permutation("21", max_n=1)


def test_rothe_examples(d_big):
    rows = {2: [2, 3, 4], 4: [3, 4, 6, 7], 5: [3, 4], 6: [3, 4, 7]}
    for r in range(1, 10):
        assert d_big.row(r) == rows.get(r, [])
    assert rothe_diagram(identity(4)) == Diagram()
    assert rothe_diagram(Permutation((3, 2, 1))) == Diagram.from_cells([(1, 1), (1, 2), (2, 1)])


def test_value_swap(w_big):
    u = value_swap(w_big, 4)
    assert str(u) == "142869357" and u.length == 11
    assert swap_lowers_length(w_big, 4)
    v = value_swap(identity(4), 1)
    assert str(v) == "2134" and v.length == 1
    with pytest.raises(ContractError):
        value_swap(identity(3), 3)


def test_longest_element():
    for n, text, ell in ((2, "21", 1), (3, "321", 3), (4, "4321", 6)):
        w0 = longest_element(n)
        assert str(w0) == text and w0.length == ell


def test_all_permutations_count():
    assert [len(all_permutations(n)) for n in range(1, 6)] == [1, 2, 6, 24, 120]


@given(perms)
def test_length_is_inversions(w):
    inv = sum(1 for i, j in itertools.combinations(range(w.n), 2) if w.entries[i] > w.entries[j])
    assert w.length == inv == len(rothe_diagram(w))


@given(perms, st.data())
def test_swaps_are_involutions(w, data):
    if w.n < 2:
        return
    c = data.draw(st.integers(1, w.n - 1))
    assert value_swap(value_swap(w, c), c) == w
    assert position_swap(position_swap(w, c), c) == w
    lowered = value_swap(w, c).length < w.length
    assert lowered == swap_lowers_length(w, c)
    assert abs(value_swap(w, c).length - w.length) == 1


@given(perms)
def test_inverse_and_embed(w):
    assert (w * w.inverse()).is_identity()
    assert w.inverse().length == w.length
    assert rothe_diagram(w.embed(w.n + 2)) == rothe_diagram(w)
