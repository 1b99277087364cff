from __future__ import annotations

import itertools
import json
from collections import deque

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mpoly.coeff import Q, T, monomial_qt
from mpoly.compositions import (
    act,
    apply_letter,
    apply_word,
    coleg,
    compose,
    composition,
    compositions_of,
    delta_stat,
    eta_bar,
    identity_perm,
    inverse_perm,
    is_partition,
    length,
    parse_composition,
    partition_of,
    partitions_of,
    plan,
    plan_reduced,
    raise_comp,
    reduced_word,
    required_perm,
    reverse,
    shortest_sorting_perm,
    simple_transposition,
    spectral_vector,
    staircase,
    subgroup_elements,
    switch,
    word_to_perm,
)

comps = st.lists(st.integers(0, 4), min_size=1, max_size=4).map(tuple)


def bfs_distance(eta):
    """Shortest word from (0,...,0) to eta over raising and nontrivial switches."""
    n, total = len(eta), sum(eta)
    start = (0,) * n
    dist = {start: 0}
    queue = deque([start])
    while queue:
        c = queue.popleft()
        if c == eta:
            return dist[c]
        moves = [raise_comp(c)] if sum(c) < total else []
        moves += [switch(c, i) for i in range(1, n) if c[i - 1] != c[i]]
        for m in moves:
            if m not in dist:
                dist[m] = dist[c] + 1
                queue.append(m)
    raise AssertionError("unreachable")


def test_parse_and_validate():
    assert parse_composition("4, 1,2,1") == (4, 1, 2, 1)
    assert composition([0, 0]) == (0, 0)
    for bad in ["1,,2", "a", "1,-1", ""]:
        with pytest.raises(ValueError):
            composition(bad)


def test_simple_operators():
    assert switch((1, 2, 3), 2) == (1, 3, 2)
    assert raise_comp((0, 2, 1)) == (2, 1, 1)
    assert apply_letter((0, 0), 0) == (0, 1)
    assert apply_word((0, 0, 0), [0, 0, 1, 0, 2]) == (0, 2, 1)
    assert partition_of((0, 3, 1)) == (3, 1, 0)
    assert reverse((3, 1, 0)) == (0, 1, 3)
    assert staircase(3) == (2, 1, 0)
    assert is_partition((2, 2, 0)) and not is_partition((0, 1))
    with pytest.raises(IndexError):
        switch((1, 2), 2)


def test_coleg_and_spectral_vector():
    eta = (2, 0, 2, 1)
    # l'(i) = #{j < i: eta_j >= eta_i} + #{j > i: eta_j > eta_i}
    assert [coleg(eta, i) for i in range(1, 5)] == [0, 3, 1, 2]
    assert eta_bar(eta, 2) == monomial_qt(0, -3)
    assert spectral_vector((1, 0)) == (Q, 1 / T)
    assert delta_stat((1, 0), 1) == Q * T


def test_plan_examples():
    assert plan((2, 1)).word == (0, 0, 0, 1)
    assert plan((0, 0)).word == ()
    long_word = (0, 0, 0, 0, 0, 0, 2, 1, 0, 3, 2, 1, 0, 2, 3, 2, 1)
    p = plan((4, 1, 2, 1))
    assert p.word == long_word
    assert p.states[0] == (0, 0, 0, 0) and p.states[-1] == (4, 1, 2, 1)
    for s in [(1, 1, 1, 1), (1, 1, 2, 2), (1, 1, 2, 3), (1, 1, 2, 4), (1, 2, 4, 1), (1, 4, 2, 1)]:
        assert s in p.states
    assert plan_reduced((2, 1)).word == (0, 1)
    assert plan_reduced((2, 1)).start == (1, 1)


def test_plan_json():
    obj = json.loads(plan((2, 1)).to_json())
    assert obj["word"] == [0, 0, 0, 1]
    assert obj["states"][-1] == [2, 1]


@pytest.mark.parametrize("n,total", [(1, 4), (2, 5), (3, 4), (4, 3)])
def test_plan_is_minimal(n, total):
    for d in range(total + 1):
        for eta in compositions_of(d, n):
            assert len(plan(eta)) == bfs_distance(eta), eta


@settings(max_examples=100, deadline=None)
@given(comps)
def test_plan_replays_to_target(eta):
    p = plan(eta)
    assert apply_word(p.start, p.word) == eta
    assert p.word.count(0) == sum(eta)
    r = plan_reduced(eta)
    assert apply_word(r.start, r.word) == eta
    assert len(r) == len(p) - len(eta) * min(eta)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_extremal_counts(n):
    for k in range(1, 9):
        assert len(plan((k,) + (0,) * (n - 1))) == n * k
        quo, rem = divmod(k, n)
        flat = (quo,) * (n - rem) + (quo + 1,) * rem
        assert len(plan(flat)) == k
        # starting from (quo, ..., quo) skips n * quo raisings
        assert len(plan_reduced(flat)) == k - n * quo


def test_permutations():
    n = 4
    s1, s2 = simple_transposition(n, 1), simple_transposition(n, 2)
    assert compose(s1, s1) == identity_perm(n)
    assert compose(compose(s1, s2), s1) == compose(compose(s2, s1), s2)
    for w in itertools.permutations(range(1, n + 1)):
        word = reduced_word(w)
        assert len(word) == length(w)
        assert word_to_perm(n, word) == w
        assert compose(w, inverse_perm(w)) == identity_perm(n)


def test_subgroup_elements():
    assert len(subgroup_elements({1, 2}, 3)) == 6
    assert len(subgroup_elements({1, 3}, 4)) == 4
    assert subgroup_elements(set(), 3) == [identity_perm(3)]
    lengths = [length(w) for w in subgroup_elements({1, 2, 3}, 4)]
    assert lengths == sorted(lengths)


def test_sorting_perms():
    eta = (0, 2, 1, 2)
    w = shortest_sorting_perm(eta)
    assert act(inverse_perm(w), eta) == partition_of(eta)
    lam = (2, 2, 0, 1)
    assert act(required_perm(eta, lam), eta) == lam
    with pytest.raises(ValueError):
        required_perm(eta, (3, 2, 0, 0))


def test_enumerators():
    assert len(list(compositions_of(3, 3))) == 10
    assert list(partitions_of(4, 2)) == [(4, 0), (3, 1), (2, 2)]
    assert all(is_partition(p) for p in partitions_of(6, 3))
