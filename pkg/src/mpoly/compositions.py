"""Compositions, their statistics, permutations, and the generation planner.

Compositions are plain tuples of non-negative ints.  Positions and switch
indices are 1-based throughout to match the usual notation ``s_i``.

Permutations are tuples of 1-based images: ``w[k-1] == w(k)``.  A
permutation acts on a composition (or exponent vector) by moving the entry
in position ``k`` to position ``w(k)``, so ``s_i`` swaps entries ``i`` and
``i+1`` and products compose as maps.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .coeff import RationalQT, monomial_qt

Composition = tuple
Permutation = tuple


def composition(parts) -> Composition:
    """Validate and normalise ``parts`` into a composition tuple."""
    if isinstance(parts, str):
        parts = parse_composition(parts)
    parts = tuple(int(p) for p in parts)
    if not parts:
        raise ValueError("a composition needs at least one part")
    if any(p < 0 for p in parts):
        raise ValueError(f"composition parts must be non-negative: {parts}")
    return parts


def parse_composition(s: str) -> Composition:
    try:
        parts = tuple(int(x) for x in s.replace(" ", "").split(","))
    except ValueError:
        raise ValueError(f"malformed composition {s!r}; expected e.g. '4,1,2,1'") from None
    return composition(parts)


def format_composition(eta: Composition) -> str:
    return ",".join(map(str, eta))


def modulus(eta: Composition) -> int:
    return sum(eta)


def is_partition(eta: Composition) -> bool:
    return all(eta[k] >= eta[k + 1] for k in range(len(eta) - 1))


def partition_of(eta: Composition) -> Composition:
    """Nonincreasing rearrangement, eta^+."""
    return tuple(sorted(eta, reverse=True))


def reverse(eta: Composition) -> Composition:
    return tuple(reversed(eta))


def staircase(n: int) -> Composition:
    """(n-1, ..., 1, 0)."""
    return tuple(range(n - 1, -1, -1))


def _check_switch(eta, i):
    if not 1 <= i <= len(eta) - 1:
        raise IndexError(f"switch index {i} out of range for a composition of length {len(eta)}")


def _check_position(eta, i):
    if not 1 <= i <= len(eta):
        raise IndexError(f"position {i} out of range for a composition of length {len(eta)}")


def switch(eta: Composition, i: int) -> Composition:
    """s_i: exchange parts i and i+1."""
    _check_switch(eta, i)
    lst = list(eta)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def raise_comp(eta: Composition) -> Composition:
    """Phi: (eta_2, ..., eta_n, eta_1 + 1)."""
    return eta[1:] + (eta[0] + 1,)


def apply_letter(eta: Composition, letter: int) -> Composition:
    return raise_comp(eta) if letter == 0 else switch(eta, letter)


def apply_word(eta: Composition, word) -> Composition:
    """Apply word letters in order (first letter acts first)."""
    for letter in word:
        eta = apply_letter(eta, letter)
    return eta


def coleg(eta: Composition, i: int) -> int:
    """Co-leg length l'_eta(i) = #{j<i: eta_j >= eta_i} + #{j>i: eta_j > eta_i}."""
    _check_position(eta, i)
    v = eta[i - 1]
    return sum(1 for x in eta[: i - 1] if x >= v) + sum(1 for x in eta[i:] if x > v)


def eta_bar(eta: Composition, i: int) -> RationalQT:
    """Spectral value q^{eta_i} t^{-l'_eta(i)}."""
    return monomial_qt(eta[i - 1], -coleg(eta, i))


def spectral_vector(eta: Composition) -> tuple[RationalQT, ...]:
    return tuple(eta_bar(eta, i) for i in range(1, len(eta) + 1))


def delta_stat(eta: Composition, i: int) -> RationalQT:
    """delta_{i,eta} = eta_bar_i / eta_bar_{i+1}, a Laurent monomial in q, t."""
    _check_switch(eta, i)
    return monomial_qt(eta[i - 1] - eta[i], coleg(eta, i + 1) - coleg(eta, i))


# -- generation plans -----------------------------------------------------------

@dataclass(frozen=True)
class GenerationPlan:
    """Operator word taking ``start`` to ``eta``; 0 raises, i >= 1 switches s_i.

    ``states[0]`` is ``start`` and ``states[k]`` is the composition after the
    first ``k`` letters.
    """

    eta: Composition
    start: Composition
    word: tuple[int, ...]
    states: tuple[Composition, ...]

    def __len__(self) -> int:
        return len(self.word)

    def to_json(self) -> str:
        return json.dumps({
            "eta": list(self.eta),
            "start": list(self.start),
            "word": list(self.word),
            "states": [list(s) for s in self.states],
        })


def _replay(start, word):
    states = [start]
    for letter in word:
        states.append(apply_letter(states[-1], letter))
    return tuple(states)


def _plan_word(eta: Composition) -> list[int]:
    n = len(eta)
    word: list[int] = []
    if n == 0 or max(eta) == 0:
        return word
    # build (eta^+)^R one level at a time
    for level in range(1, max(eta) + 1):
        g = sum(1 for x in eta if x >= level)
        if level > 1:
            low = sum(1 for x in eta if x < level - 1)
            for k in range(1, g + 1):
                word.extend(range(low + k - 1, k - 1, -1))
        word.extend([0] * g)
    # reposition from the right, pulling the closest matching part
    current = list(reverse(partition_of(eta)))
    for i in range(n, 1, -1):
        p = max(j for j in range(1, i + 1) if current[j - 1] == eta[i - 1])
        for letter in range(p, i):
            word.append(letter)
            current[letter - 1], current[letter] = current[letter], current[letter - 1]
    return word


@lru_cache(maxsize=None)
def plan(eta: Composition) -> GenerationPlan:
    """Minimal-length operator word from (0, ..., 0) to ``eta``."""
    eta = composition(eta)
    start = (0,) * len(eta)
    word = tuple(_plan_word(eta))
    states = _replay(start, word)
    assert states[-1] == eta, (eta, word)
    return GenerationPlan(eta, start, word, states)


@lru_cache(maxsize=None)
def plan_reduced(eta: Composition) -> GenerationPlan:
    """Plan starting from (m, ..., m), m = min(eta), skipping the first n*m raisings.

    Only valid for homogeneous families; returns :func:`plan` when min(eta) == 0.
    """
    full = plan(eta)
    m = min(full.eta)
    if m == 0:
        return full
    n = len(full.eta)
    skip = n * m
    assert all(letter == 0 for letter in full.word[:skip])
    start = (m,) * n
    word = full.word[skip:]
    return GenerationPlan(full.eta, start, word, _replay(start, word))


# -- permutations ---------------------------------------------------------------

def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def simple_transposition(n: int, i: int) -> Permutation:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def compose(a: Permutation, b: Permutation) -> Permutation:
    """a o b (apply b first)."""
    return tuple(a[b[k] - 1] for k in range(len(b)))


def inverse_perm(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for k, image in enumerate(w, start=1):
        inv[image - 1] = k
    return tuple(inv)


def length(w: Permutation) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Lexicographically smallest (i_1, ..., i_l) with w = s_{i_1} o ... o s_{i_l}."""
    w = tuple(w)
    word = []
    while True:
        pos = inverse_perm(w)
        # left descents: i+1 appears before i in one-line notation
        for i in range(1, len(w)):
            if pos[i] < pos[i - 1]:
                word.append(i)
                w = compose(simple_transposition(len(w), i), w)
                break
        else:
            return tuple(word)


def word_to_perm(n: int, word) -> Permutation:
    w = identity_perm(n)
    for i in word:
        w = compose(w, simple_transposition(n, i))
    return w


def subgroup_elements(gens, n: int) -> list[Permutation]:
    """Elements of <s_k : k in gens> in S_n, sorted by length then one-line form."""
    gens = sorted(set(gens))
    for k in gens:
        if not 1 <= k <= n - 1:
            raise IndexError(f"generator s_{k} not in S_{n}")
    seen = {identity_perm(n)}
    frontier = [identity_perm(n)]
    while frontier:
        nxt = []
        for w in frontier:
            for k in gens:
                v = compose(simple_transposition(n, k), w)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return sorted(seen, key=lambda w: (length(w), w))


def act(w: Permutation, eta: Composition) -> Composition:
    """Move the entry in position k to position w(k)."""
    out = [0] * len(eta)
    for k, image in enumerate(w):
        out[image - 1] = eta[k]
    return tuple(out)


def shortest_sorting_perm(eta: Composition) -> Permutation:
    """omega_eta: the shortest w with w^{-1}(eta) = eta^+."""
    order = sorted(range(len(eta)), key=lambda k: (-eta[k], k))
    # w^{-1}(k) is the rank of position k in the stable decreasing sort
    winv = [0] * len(eta)
    for rank, k in enumerate(order, start=1):
        winv[k] = rank
    return inverse_perm(tuple(winv))


def required_perm(eta: Composition, lam: Composition) -> Permutation:
    """Shortest w with w(eta) = lam; raises if lam is not a rearrangement of eta."""
    if sorted(eta) != sorted(lam):
        raise ValueError(f"{lam} is not a rearrangement of {eta}")
    a = shortest_sorting_perm(eta)
    b = shortest_sorting_perm(lam)
    return compose(b, inverse_perm(a))


def compositions_of(total: int, n: int):
    """All compositions of ``total`` into ``n`` parts, in reverse-lex order."""
    if n == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions_of(total - first, n - 1):
            yield (first,) + rest


def partitions_of(total: int, n: int, largest: int | None = None):
    """Partitions of ``total`` with at most ``n`` parts, padded with zeros to length n."""
    largest = total if largest is None else largest
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(total, largest), -1, -1):
        if first * n < total:
            break
        for rest in partitions_of(total - first, n - 1, first):
            yield (first,) + rest
