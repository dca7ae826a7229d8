"""Word-like combinatorial objects, their statistics, and exhaustive enumerators.

Words are 1-indexed tuples of machine integers.  All values are immutable and
all operations are pure functions.  Enumerators produce duplicate-free lists
in a fixed canonical order: lexicographic on letter sequences, and for binary
trees by left-subtree size then recursively.  The supported enumeration range
is n <= 12.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

MAX_ENUM_N = 12


class NotInSubalgebraError(ValueError):
    """An element fails to regroup on the classes of a subalgebra basis."""


# -- predicates --------------------------------------------------------------


def is_parking(w) -> bool:
    """True iff the nondecreasing reordering a^ satisfies a^_i <= i."""
    return all(v <= i for i, v in enumerate(sorted(w), start=1))


def is_ndpf(w) -> bool:
    return all(w[i] <= w[i + 1] for i in range(len(w) - 1)) and \
        all(v <= i for i, v in enumerate(w, start=1))


def is_packed(w) -> bool:
    letters = set(w)
    return letters == set(range(1, len(letters) + 1))


def is_permutation(w) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


# -- basic word operations ---------------------------------------------------


def parkize(w) -> tuple:
    """Closure sending any word of positive integers to a parking function.

    While the word is not parking, find the least i whose prefix count
    #{j : w_j <= i} falls short of i and decrement every letter above it.
    Terminates because the letter sum strictly decreases.
    """
    w = tuple(w)
    if any(v < 1 for v in w):
        raise ValueError(f"letters must be >= 1: {w}")
    n = len(w)
    while not is_parking(w):
        d = next(i for i in range(1, n + 1) if sum(1 for v in w if v <= i) < i)
        w = tuple(v - 1 if v > d else v for v in w)
    return w


def standardize(w) -> tuple:
    """The permutation order-isomorphic to w, ties broken left to right."""
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    std = [0] * len(w)
    for rank, i in enumerate(order, start=1):
        std[i] = rank
    return tuple(std)


def pack(w) -> tuple:
    """Relabel the occurring letters b_1 < ... < b_r to 1..r."""
    relabel = {b: i for i, b in enumerate(sorted(set(w)), start=1)}
    return tuple(relabel[v] for v in w)


def evaluation(w) -> tuple:
    """(|w|_1, ..., |w|_max): occurrence counts of each letter up to the max."""
    if not w:
        return ()
    counts = [0] * max(w)
    for v in w:
        counts[v - 1] += 1
    return tuple(counts)


def packed_evaluation(w) -> tuple:
    """t(w): the evaluation with zeros removed, as a composition."""
    return tuple(c for c in evaluation(w) if c)


def sort_ascending(w) -> tuple:
    return tuple(sorted(w))


def shifted_concat_len(alpha, beta) -> tuple:
    """alpha . beta[k] with k = |alpha| (the bullet concatenation)."""
    k = len(alpha)
    return tuple(alpha) + tuple(v + k for v in beta)


def shifted_concat_max(alpha, beta) -> tuple:
    """alpha . beta[max(alpha) - 1] (the circle concatenation)."""
    if not alpha:
        raise ValueError("left factor of the max-shifted concatenation is empty")
    k = max(alpha) - 1
    return tuple(alpha) + tuple(v + k for v in beta)


def shifted_shuffle(a, b, shift: int):
    """All interleavings of a and b shifted by ``shift``, as a list (multiset).

    The result has C(|a|+|b|, |a|) entries counted with multiplicity.
    """
    a = tuple(a)
    b = tuple(v + shift for v in b)
    n, m = len(a), len(b)
    out = []
    for positions in itertools.combinations(range(n + m), n):
        posset = set(positions)
        word = []
        ia = ib = 0
        for i in range(n + m):
            if i in posset:
                word.append(a[ia])
                ia += 1
            else:
                word.append(b[ib])
                ib += 1
        out.append(tuple(word))
    return out


def recoils(sigma) -> frozenset:
    """Positions i such that i+1 appears before i in the permutation."""
    pos = {v: i for i, v in enumerate(sigma)}
    return frozenset(i for i in range(1, len(sigma)) if pos[i + 1] < pos[i])


# -- quasi-ribbons -----------------------------------------------------------


@dataclass(frozen=True)
class QuasiRibbon:
    """A nondecreasing parking function with bars at strict ascents only."""

    word: tuple
    bars: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        object.__setattr__(self, "bars", frozenset(self.bars))
        if not is_ndpf(self.word):
            raise ValueError(f"not a nondecreasing parking function: {self.word}")
        for i in self.bars:
            if not (1 <= i < len(self.word)) or not self.word[i - 1] < self.word[i]:
                raise ValueError(f"bar at {i} not at a strict ascent of {self.word}")

    def __len__(self):
        return len(self.word)

    @property
    def bar_count(self) -> int:
        return len(self.bars)

    def shape(self) -> tuple:
        """Composition of segment lengths between consecutive bars."""
        cuts = [0, *sorted(self.bars), len(self.word)]
        return tuple(b - a for a, b in zip(cuts, cuts[1:]) if b > a)

    def sort_key(self):
        return (self.word, tuple(sorted(self.bars)))

    def __str__(self):
        cuts = [0, *sorted(self.bars), len(self.word)]
        segments = [self.word[a:b] for a, b in zip(cuts, cuts[1:]) if b > a]
        if any(v >= 10 for v in self.word):
            return "|".join(",".join(str(v) for v in s) for s in segments)
        return "|".join("".join(str(v) for v in s) for s in segments)

    @classmethod
    def parse(cls, text: str) -> "QuasiRibbon":
        comma_mode = "," in text
        word, bars = [], set()
        for segment_index, segment in enumerate(text.split("|")):
            if segment_index:
                bars.add(len(word))
            if comma_mode:
                word.extend(int(p) for p in segment.split(",") if p)
            else:
                word.extend(int(ch) for ch in segment)
        return cls(tuple(word), frozenset(bars))


def hypoplactic_quasi_ribbon(a) -> QuasiRibbon:
    """The hypoplactic class P(a): sorted word with bars at the recoils of std(a)."""
    if not is_parking(a):
        raise ValueError(f"not a parking function: {a}")
    return QuasiRibbon(sort_ascending(a), recoils(standardize(a)))


# -- compositions ------------------------------------------------------------


def comp_concat(i, j) -> tuple:
    return tuple(i) + tuple(j)


def comp_near_concat(i, j) -> tuple:
    """(i_1,...,i_r) |> (j_1,...,j_s) fuses the touching parts."""
    if not i or not j:
        raise ValueError("near-concatenation needs nonempty compositions")
    return tuple(i[:-1]) + (i[-1] + j[0],) + tuple(j[1:])


def comp_descents(i) -> frozenset:
    out, s = set(), 0
    for p in i[:-1]:
        s += p
        out.add(s)
    return frozenset(out)


def comp_from_descents(descents, n) -> tuple:
    cuts = [0, *sorted(descents), n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def comp_conjugate(i) -> tuple:
    """Ribbon-diagram conjugate: reverse, then complement the descent set."""
    n = sum(i)
    if n == 0:
        return ()
    rev = tuple(reversed(i))
    complement = set(range(1, n)) - comp_descents(rev)
    return comp_from_descents(complement, n)


def coarser_leq(i, j) -> bool:
    """Reverse refinement: the parts of i are sums of consecutive parts of j."""
    if sum(i) != sum(j):
        return False
    it = iter(j)
    for part in i:
        acc = 0
        while acc < part:
            try:
                acc += next(it)
            except StopIteration:
                return False
        if acc != part:
            return False
    return next(it, None) is None


# -- binary trees ------------------------------------------------------------
#
# A binary tree is either None (the empty tree / a leaf of the enclosing node)
# or a pair (left, right).  The size is the number of internal nodes.


def tree_size(t) -> int:
    return 0 if t is None else 1 + tree_size(t[0]) + tree_size(t[1])


def tree_to_text(t) -> str:
    return "." if t is None else f"({tree_to_text(t[0])},{tree_to_text(t[1])})"


def tree_parse(text: str):
    pos = 0

    def rec():
        nonlocal pos
        if text[pos] == ".":
            pos += 1
            return None
        if text[pos] != "(":
            raise ValueError(f"bad tree text at {pos}: {text!r}")
        pos += 1
        left = rec()
        if text[pos] != ",":
            raise ValueError(f"expected ',' at {pos}: {text!r}")
        pos += 1
        right = rec()
        if text[pos] != ")":
            raise ValueError(f"expected ')' at {pos}: {text!r}")
        pos += 1
        return (left, right)

    out = rec()
    if pos != len(text):
        raise ValueError(f"trailing characters in tree text: {text!r}")
    return out


def tree_mirror(t):
    return None if t is None else (tree_mirror(t[1]), tree_mirror(t[0]))


def canopy(t) -> str:
    """Left/right word of the internal leaves (first and last leaf dropped)."""
    sides = []

    def rec(node, side):
        if node is None:
            sides.append(side)
        else:
            rec(node[0], "L")
            rec(node[1], "R")

    rec(t, "L")
    return "".join(sides[1:-1])


# -- enumerators -------------------------------------------------------------


def _check_n(n: int):
    if not (0 <= n <= MAX_ENUM_N):
        raise ValueError(f"enumeration size must be in 0..{MAX_ENUM_N}, got {n}")


@lru_cache(maxsize=None)
def ndpfs(n: int) -> tuple:
    """All nondecreasing parking functions of length n, lexicographically."""
    _check_n(n)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else 1
        for v in range(lo, len(prefix) + 2):
            prefix.append(v)
            rec(prefix)
            prefix.pop()

    rec([])
    return tuple(out)


def _multiset_permutations(word):
    counts: dict[int, int] = {}
    for v in word:
        counts[v] = counts.get(v, 0) + 1
    n = len(word)
    current = []

    def rec():
        if len(current) == n:
            yield tuple(current)
            return
        for v in sorted(counts):
            if counts[v]:
                counts[v] -= 1
                current.append(v)
                yield from rec()
                current.pop()
                counts[v] += 1

    yield from rec()


@lru_cache(maxsize=None)
def parking_functions(n: int) -> tuple:
    """All parking functions of length n, lexicographically."""
    _check_n(n)
    out = []
    for pi in ndpfs(n):
        out.extend(_multiset_permutations(pi))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def packed_words(n: int) -> tuple:
    """All packed words of length n, lexicographically (ordered Bell many)."""
    _check_n(n)
    if n == 0:
        return ((),)
    out = []
    seen = [0] * (n + 1)

    def rec(prefix, top, missing):
        remaining = n - len(prefix)
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for v in range(1, n + 1):
            # `missing` counts letters in 1..top not seen yet
            if v > top:
                new_missing = missing + (v - top - 1)
            elif seen[v] == 0:
                new_missing = missing - 1
            else:
                new_missing = missing
            if new_missing > remaining - 1:
                continue
            seen[v] += 1
            prefix.append(v)
            rec(prefix, max(top, v), new_missing)
            prefix.pop()
            seen[v] -= 1

    rec([], 0, 0)
    return tuple(out)


def permutations(n: int) -> tuple:
    _check_n(n)
    return tuple(itertools.permutations(range(1, n + 1)))


@lru_cache(maxsize=None)
def quasi_ribbons(n: int) -> tuple:
    """All parking quasi-ribbons of size n (little Schroeder many)."""
    _check_n(n)
    out = []
    for pi in ndpfs(n):
        ascents = [i for i in range(1, n) if pi[i - 1] < pi[i]]
        for r in range(len(ascents) + 1):
            for bars in itertools.combinations(ascents, r):
                out.append(QuasiRibbon(pi, frozenset(bars)))
    return tuple(sorted(out, key=QuasiRibbon.sort_key))


@lru_cache(maxsize=None)
def compositions(n: int) -> tuple:
    _check_n(n)
    if n == 0:
        return ((),)
    out = []

    def rec(prefix, rest):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for p in range(1, rest + 1):
            prefix.append(p)
            rec(prefix, rest - p)
            prefix.pop()

    rec([], n)
    return tuple(out)


@lru_cache(maxsize=None)
def binary_trees(n: int) -> tuple:
    """All binary trees with n internal nodes, by left-subtree size."""
    _check_n(n)
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in binary_trees(k):
            for right in binary_trees(n - 1 - k):
                out.append((left, right))
    return tuple(out)


_FAMILIES = {
    "parking": parking_functions,
    "ndpf": ndpfs,
    "packed": packed_words,
    "permutation": permutations,
    "quasi_ribbon": quasi_ribbons,
    "composition": compositions,
    "binary_tree": binary_trees,
}


def enumerate_family(family: str, n: int) -> tuple:
    if family not in _FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(_FAMILIES)}")
    return _FAMILIES[family](n)


# -- text encodings ----------------------------------------------------------


def word_to_text(w) -> str:
    """Digit string, with comma separation as soon as a letter exceeds 9."""
    if any(v >= 10 for v in w):
        return ",".join(str(v) for v in w)
    return "".join(str(v) for v in w)


def text_to_word(s: str) -> tuple:
    s = s.strip()
    if not s:
        return ()
    if "," in s:
        return tuple(int(p) for p in s.split(",") if p)
    return tuple(int(ch) for ch in s)
